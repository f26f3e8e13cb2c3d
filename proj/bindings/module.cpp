// Python bindings for the core operations: states, measures, bounds, and the
// randomized harness entry points.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "negbounds/harness.hpp"
#include "negbounds/state_io.hpp"

namespace py = pybind11;
namespace nb = negbounds;

PYBIND11_MODULE(_negbounds, m) {
    m.doc() = "Bipartite entanglement measures and superposition negativity bounds";

    py::register_exception<nb::Error>(m, "NegboundsError");

    py::class_<nb::states::PureState>(m, "PureState")
        .def(py::init<std::size_t, std::size_t, std::vector<nb::linalg::cplx>>(),
             py::arg("dim_a"), py::arg("dim_b"), py::arg("amplitudes"))
        .def_property_readonly("dim_a", &nb::states::PureState::dim_a)
        .def_property_readonly("dim_b", &nb::states::PureState::dim_b)
        .def_property_readonly("amplitudes", &nb::states::PureState::amplitudes)
        .def("amplitude", &nb::states::PureState::amplitude, py::arg("i"), py::arg("j"));

    py::class_<nb::states::SuperpositionSpec>(m, "SuperpositionSpec")
        .def(py::init<nb::linalg::cplx, nb::linalg::cplx>(), py::arg("alpha"),
             py::arg("beta"))
        .def_readonly("alpha", &nb::states::SuperpositionSpec::alpha)
        .def_readonly("beta", &nb::states::SuperpositionSpec::beta);

    py::class_<nb::states::SchmidtData>(m, "SchmidtData")
        .def_readonly("coefficients", &nb::states::SchmidtData::coefficients)
        .def_readonly("rank", &nb::states::SchmidtData::rank)
        .def_readonly("rank_tolerance", &nb::states::SchmidtData::rank_tolerance);

    py::class_<nb::states::Superposition>(m, "Superposition")
        .def_readonly("norm_sq", &nb::states::Superposition::norm_sq)
        .def_readonly("gamma", &nb::states::Superposition::gamma);

    m.def("schmidt", &nb::states::schmidt, py::arg("state"),
          py::arg("rank_tolerance") = 1e-10);
    m.def("fidelity", &nb::states::fidelity, py::arg("s1"), py::arg("s2"));
    m.def("superpose", &nb::states::superpose, py::arg("spec"), py::arg("phi"),
          py::arg("psi"));
    m.def("is_biorthogonal", &nb::states::is_biorthogonal, py::arg("phi"), py::arg("psi"),
          py::arg("tol") = 1e-10);
    m.def("epsilon_family", &nb::states::epsilon_family, py::arg("epsilon"), py::arg("d"));
    m.def("maximally_entangled", &nb::states::maximally_entangled, py::arg("dim_a"),
          py::arg("dim_b"), py::arg("a_indices"), py::arg("b_indices"));

    m.def("entropy_of_entanglement", &nb::measures::entropy_of_entanglement,
          py::arg("state"));
    m.def("concurrence", &nb::measures::concurrence, py::arg("state"));
    m.def("negativity", &nb::measures::negativity_schmidt, py::arg("state"));
    m.def("negativity_pt", &nb::measures::negativity_pt, py::arg("state"));
    m.def("schmidt_rank", &nb::measures::schmidt_rank, py::arg("state"),
          py::arg("tol") = 1e-10);

    py::class_<nb::bounds::BoundReport>(m, "BoundReport")
        .def_readonly("lower", &nb::bounds::BoundReport::lower)
        .def_readonly("value", &nb::bounds::BoundReport::value)
        .def_readonly("upper", &nb::bounds::BoundReport::upper)
        .def_readonly("slack_lower", &nb::bounds::BoundReport::slack_lower)
        .def_readonly("slack_upper", &nb::bounds::BoundReport::slack_upper)
        .def_readonly("holds", &nb::bounds::BoundReport::holds)
        .def_readonly("terms", &nb::bounds::BoundReport::terms);

    m.def("fannes_concurrence_check", &nb::bounds::fannes_concurrence_check,
          py::arg("s1"), py::arg("s2"));
    m.def("n_tilde", &nb::bounds::n_tilde, py::arg("n_base"), py::arg("mu_max_other"),
          py::arg("amp_num"), py::arg("amp_den"), py::arg("r"));
    m.def("theorem2_bounds", &nb::bounds::theorem2_bounds, py::arg("spec"),
          py::arg("phi"), py::arg("psi"));
    m.def("theorem3_upper", &nb::bounds::theorem3_upper, py::arg("spec"), py::arg("phi"),
          py::arg("psi"));

    m.def("haar_state", &nb::harness::haar_state, py::arg("m"), py::arg("n"),
          py::arg("seed"));
    m.def("random_biorthogonal_pair", &nb::harness::random_biorthogonal_pair,
          py::arg("m"), py::arg("n"), py::arg("k1"), py::arg("k2"), py::arg("seed"));
    m.def("random_amplitudes", &nb::harness::random_amplitudes, py::arg("seed"),
          py::arg("amp_floor"));

    py::class_<nb::harness::ReproResult>(m, "ReproResult")
        .def_readonly("report", &nb::harness::ReproResult::report)
        .def_readonly("ok", &nb::harness::ReproResult::ok)
        .def_readonly("detail", &nb::harness::ReproResult::detail);
    m.def("repro_paper_example", &nb::harness::repro_paper_example);

    m.def(
        "load_state",
        [](const std::string& path, bool renormalize) {
            return nb::io::load_state(path, renormalize);
        },
        py::arg("path"), py::arg("renormalize") = false);
    m.def(
        "save_state",
        [](const nb::states::PureState& s, const std::string& path) {
            nb::io::save_state(s, path);
        },
        py::arg("state"), py::arg("path"));
}
