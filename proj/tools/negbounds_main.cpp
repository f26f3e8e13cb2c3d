// Command-line front end: measure states, check the superposition bounds,
// run verification campaigns, reproduce the published 4x4 example, and run
// continuity sweeps. Exit codes: 0 all checks hold, 1 at least one
// violation, 2 configuration or input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "negbounds/harness.hpp"
#include "negbounds/state_io.hpp"

namespace nb = negbounds;

namespace {

std::complex<double> parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw nb::ConfigInvalid("complex amplitudes are written re,im");
    try {
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw nb::ConfigInvalid("cannot parse complex amplitude: " + text);
    }
}

std::vector<std::pair<std::size_t, std::size_t>> parse_dims(const std::string& text) {
    std::vector<std::pair<std::size_t, std::size_t>> dims;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto x = item.find('x');
        if (x == std::string::npos) throw nb::ConfigInvalid("dimensions are written mxn[,mxn...]");
        dims.emplace_back(std::stoul(item.substr(0, x)), std::stoul(item.substr(x + 1)));
    }
    return dims;
}

template <typename T>
std::vector<T> parse_list(const std::string& text, T (*conv)(const std::string&)) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(conv(item));
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw nb::IoError("cannot open output file: " + path);
    out << text;
}

void print_report(const nb::bounds::BoundReport& rep) {
    if (rep.lower)
        std::printf("lower        %.12g\n", *rep.lower);
    std::printf("value        %.12g\n", rep.value);
    std::printf("upper        %.12g\n", rep.upper);
    if (rep.slack_lower) std::printf("slack_lower  %.12g\n", *rep.slack_lower);
    std::printf("slack_upper  %.12g\n", rep.slack_upper);
    std::printf("holds        %s\n", rep.holds ? "yes" : "NO");
    for (const auto& [name, v] : rep.terms) std::printf("  %-16s %.12g\n", name.c_str(), v);
}

int cmd_measure(const std::string& path, bool renormalize) {
    const auto s = nb::io::load_state(path, renormalize);
    const auto sd = nb::states::schmidt(s);
    std::printf("dims                 %zux%zu\n", s.dim_a(), s.dim_b());
    std::printf("entropy (bits)       %.12g\n", nb::measures::entropy_of_entanglement(s));
    std::printf("concurrence          %.12g\n", nb::measures::concurrence(s));
    std::printf("negativity (PT)      %.12g\n", nb::measures::negativity_pt(s));
    std::printf("negativity (Schmidt) %.12g\n", nb::measures::negativity_schmidt(s));
    std::printf("schmidt rank         %zu\n", sd.rank);
    std::printf("schmidt coefficients");
    for (double c : sd.coefficients) std::printf(" %.12g", c);
    std::printf("\n");
    return 0;
}

int cmd_bounds(const std::string& which, const std::string& path_a, const std::string& path_b,
               const std::string& alpha_text, const std::string& beta_text, bool renormalize) {
    const auto a = nb::io::load_state(path_a, renormalize);
    const auto b = nb::io::load_state(path_b, renormalize);
    nb::bounds::BoundReport rep;
    if (which == "t1") {
        rep = nb::bounds::fannes_concurrence_check(a, b);
    } else {
        const nb::states::SuperpositionSpec spec(parse_complex(alpha_text),
                                                 parse_complex(beta_text));
        rep = (which == "t2") ? nb::bounds::theorem2_bounds(spec, a, b)
                              : nb::bounds::theorem3_upper(spec, a, b);
    }
    print_report(rep);
    return rep.holds ? 0 : 1;
}

int cmd_verify(const nb::harness::RunConfig& config) {
    const auto result = nb::harness::run_campaign(config);
    const std::string body = config.format == nb::harness::ReportFormat::Csv
                                 ? nb::harness::emit_csv(result.records)
                                 : nb::harness::emit_json(result.records, result.summary);
    if (!config.output_path.empty())
        write_text(config.output_path, body);
    else
        std::cout << body;
    std::fprintf(stderr, "trials %zu  violations %zu  min_slack %.6g  max_abs_slack %.6g\n",
                 result.summary.trials, result.summary.violations, result.summary.min_slack,
                 result.summary.max_abs_slack);
    return result.summary.violations == 0 ? 0 : 1;
}

int cmd_repro() {
    const auto res = nb::harness::repro_paper_example();
    std::cout << res.detail;
    std::printf("%s\n", res.ok ? "paper example reproduced" : "paper example FAILED");
    return res.ok ? 0 : 1;
}

int cmd_sweep(const std::string& eps_text, const std::string& dense_text,
              const std::string& analytic_text, const std::string& out_path) {
    auto to_double = +[](const std::string& s) { return std::stod(s); };
    auto to_u64 = +[](const std::string& s) { return std::uint64_t(std::stoull(s)); };
    const auto eps = parse_list<double>(eps_text, to_double);
    const auto dense = dense_text.empty() ? std::vector<std::uint64_t>{}
                                          : parse_list<std::uint64_t>(dense_text, to_u64);
    const auto analytic = analytic_text.empty() ? std::vector<std::uint64_t>{}
                                                : parse_list<std::uint64_t>(analytic_text, to_u64);
    const auto rows = nb::harness::continuity_sweep(eps, dense, analytic);
    const std::string body = nb::harness::emit_sweep_csv(rows);
    if (!out_path.empty())
        write_text(out_path, body);
    else
        std::cout << body;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bipartite entanglement measures and superposition negativity bounds"};
    app.require_subcommand(1);

    std::string state_path, state_path_b, alpha_text, beta_text;
    bool renormalize = false;

    auto* measure = app.add_subcommand("measure", "print entanglement measures of a state file");
    measure->add_option("statefile", state_path)->required();
    measure->add_flag("--renormalize", renormalize);

    auto* bnd = app.add_subcommand("bounds", "check a bound on a pair of state files");
    std::string which;
    bnd->add_option("which", which)->required()->check(CLI::IsMember({"t1", "t2", "t3"}));
    bnd->add_option("statefileA", state_path)->required();
    bnd->add_option("statefileB", state_path_b)->required();
    bnd->add_option("--alpha", alpha_text, "superposition amplitude re,im");
    bnd->add_option("--beta", beta_text, "superposition amplitude re,im");
    bnd->add_flag("--renormalize", renormalize);

    auto* verify = app.add_subcommand("verify", "run randomized verification campaigns");
    std::string theorems_text = "T1,T2,T3,HORN,CONSISTENCY";
    std::string dims_text = "2x2,3x4,4x4,6x6";
    std::string format_text = "csv";
    nb::harness::RunConfig config;
    verify->add_option("--theorems", theorems_text);
    verify->add_option("--trials", config.trials);
    verify->add_option("--dims", dims_text, "mxn[,mxn...]");
    verify->add_option("--seed", config.seed);
    verify->add_option("--amp-floor", config.amp_floor);
    verify->add_option("--out", config.output_path);
    verify->add_option("--format", format_text)->check(CLI::IsMember({"csv", "json"}));

    auto* repro = app.add_subcommand("repro-paper-example",
                                     "reproduce the published 4x4 worked example");
    (void)repro;

    auto* sweep = app.add_subcommand("sweep", "continuity contrast sweep over the epsilon family");
    std::string eps_text, dense_text, analytic_text, sweep_out;
    sweep->add_option("--eps", eps_text)->required();
    sweep->add_option("--d", dense_text, "dense-path d values");
    sweep->add_option("--analytic-d", analytic_text, "analytic-path d values");
    sweep->add_option("--out", sweep_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(measure)) return cmd_measure(state_path, renormalize);
        if (app.got_subcommand(bnd)) {
            if (which != "t1" && (alpha_text.empty() || beta_text.empty()))
                throw nb::ConfigInvalid("bounds t2/t3 need --alpha and --beta");
            return cmd_bounds(which, state_path, state_path_b, alpha_text, beta_text,
                              renormalize);
        }
        if (app.got_subcommand(verify)) {
            std::stringstream ss(theorems_text);
            std::string tag;
            while (std::getline(ss, tag, ','))
                config.theorems.push_back(nb::harness::theorem_from_name(tag));
            config.dim_pairs = parse_dims(dims_text);
            config.format = (format_text == "json") ? nb::harness::ReportFormat::Json
                                                    : nb::harness::ReportFormat::Csv;
            return cmd_verify(config);
        }
        if (app.got_subcommand(repro)) return cmd_repro();
        if (app.got_subcommand(sweep))
            return cmd_sweep(eps_text, dense_text, analytic_text, sweep_out);
    } catch (const nb::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
