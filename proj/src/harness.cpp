#include "negbounds/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

namespace negbounds::harness {

using linalg::cplx;
using linalg::Matrix;

std::string theorem_name(Theorem t) {
    switch (t) {
        case Theorem::T1: return "T1";
        case Theorem::T2: return "T2";
        case Theorem::T3: return "T3";
        case Theorem::Horn: return "HORN";
        case Theorem::Consistency: return "CONSISTENCY";
    }
    return "?";
}

Theorem theorem_from_name(const std::string& name) {
    if (name == "T1") return Theorem::T1;
    if (name == "T2") return Theorem::T2;
    if (name == "T3") return Theorem::T3;
    if (name == "HORN") return Theorem::Horn;
    if (name == "CONSISTENCY") return Theorem::Consistency;
    throw ConfigInvalid("unknown theorem tag: " + name);
}

void RunConfig::validate() const {
    if (trials < 1) throw ConfigInvalid("trials must be >= 1");
    if (theorems.empty()) throw ConfigInvalid("no theorem tags selected");
    if (dim_pairs.empty()) throw ConfigInvalid("no dimension pairs given");
    for (auto [m, n] : dim_pairs) {
        if (m < 2 || m > 16 || n < 2 || n > 16)
            throw ConfigInvalid("dimension pairs must satisfy 2 <= m, n <= 16");
    }
    if (amp_floor < 1e-6) throw ConfigInvalid("amp_floor must be >= 1e-6");
}

PureState haar_state(std::size_t m, std::size_t n, std::uint64_t seed) {
    if (m < 2 || m > 16 || n < 2 || n > 16)
        throw DimOutOfRange("haar_state dimensions must lie in [2, 16]");
    rng::CounterRng gen(seed);
    std::vector<cplx> amp(m * n);
    for (auto& a : amp) {
        auto [re, im] = gen.next_gaussian_pair();
        a = cplx{re, im};
    }
    return PureState(m, n, std::move(amp));
}

std::pair<PureState, PureState> random_biorthogonal_pair(std::size_t m, std::size_t n,
                                                         std::size_t k1, std::size_t k2,
                                                         std::uint64_t seed) {
    if (k1 < 1 || k2 < 1 || k1 + k2 > std::min(m, n))
        throw SupportTooLarge("support blocks must fit: k1 + k2 <= min(m, n)");
    rng::CounterRng gen(seed);
    auto block_state = [&](std::size_t offset, std::size_t k) {
        std::vector<cplx> amp(m * n, cplx{0.0, 0.0});
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                auto [re, im] = gen.next_gaussian_pair();
                amp[(offset + i) * n + (offset + j)] = cplx{re, im};
            }
        }
        return PureState(m, n, std::move(amp));
    };
    PureState phi = block_state(0, k1);
    PureState psi = block_state(k1, k2);
    return {std::move(phi), std::move(psi)};
}

SuperpositionSpec random_amplitudes(std::uint64_t seed, double amp_floor) {
    if (amp_floor < 1e-6 || amp_floor > 0.7)
        throw FloorOutOfRange("amp_floor must lie in [1e-6, 0.7]");
    rng::CounterRng gen(seed);
    const double lo = std::asin(amp_floor);
    const double hi = std::acos(amp_floor);
    const double theta = lo + (hi - lo) * gen.next_uniform();
    const double phase = 2.0 * std::numbers::pi * gen.next_uniform();
    return SuperpositionSpec(cplx{std::cos(theta), 0.0},
                             std::polar(std::sin(theta), phase));
}

Matrix random_hermitian(std::size_t dim, std::uint64_t seed, bool psd) {
    rng::CounterRng gen(seed);
    Matrix g(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
            auto [re, im] = gen.next_gaussian_pair();
            g(r, c) = cplx{re, im};
        }
    if (psd) {
        Matrix gram = g * g.adjoint();
        return gram * (1.0 / static_cast<double>(dim));
    }
    return (g + g.adjoint()) * 0.5;
}

namespace {

std::size_t uniform_index(rng::CounterRng& gen, std::size_t lo, std::size_t hi) {
    // inclusive range; spans are tiny so modulo bias is irrelevant here,
    // but use rejection anyway to keep the stream fully specified.
    const std::size_t span = hi - lo + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = gen.next_u64();
    while (x >= limit) x = gen.next_u64();
    return lo + static_cast<std::size_t>(x % span);
}

TrialRecord from_report(const BoundReport& rep) {
    TrialRecord rec;
    rec.has_lower = rep.lower.has_value();
    rec.lower = rep.lower.value_or(0.0);
    rec.value = rep.value;
    rec.upper = rep.upper;
    rec.slack_lower = rep.slack_lower.value_or(0.0);
    rec.slack_upper = rep.slack_upper;
    rec.holds = rep.holds;
    return rec;
}

bool one_sided_and_lemma_checks(const BoundReport& rep) {
    const double tol = bounds::kCheckTol;
    const double v = rep.value;
    return rep.terms.at("phi_side_lower") - tol <= v && v <= rep.terms.at("phi_side_upper") + tol &&
           rep.terms.at("psi_side_lower") - tol <= v && v <= rep.terms.at("psi_side_upper") + tol &&
           rep.terms.at("schmidt_sum_lhs") <= rep.terms.at("schmidt_sum_rhs") + tol;
}

TrialRecord run_trial(Theorem theorem, std::size_t m, std::size_t n, double amp_floor,
                      std::uint64_t trial_seed) {
    rng::CounterRng gen(trial_seed);
    TrialRecord rec;
    rec.theorem = theorem;
    rec.m = m;
    rec.n = n;

    switch (theorem) {
        case Theorem::T1: {
            const PureState s1 = haar_state(m, n, gen.next_u64());
            const PureState s2 = haar_state(m, n, gen.next_u64());
            BoundReport rep = bounds::fannes_concurrence_check(s1, s2);
            BoundReport l1 = bounds::sorted_eigenvalue_l1_check(states::reduced_density_a(s1),
                                                                states::reduced_density_a(s2));
            rec = from_report(rep);
            rec.theorem = theorem;
            rec.m = m;
            rec.n = n;
            rec.holds = rep.holds && l1.holds;
            break;
        }
        case Theorem::T2: {
            const std::size_t cap = std::min(m, n);
            const std::size_t k1 = uniform_index(gen, 1, cap - 1);
            const std::size_t k2 = uniform_index(gen, 1, cap - k1);
            auto [phi, psi] = random_biorthogonal_pair(m, n, k1, k2, gen.next_u64());
            const SuperpositionSpec spec = random_amplitudes(gen.next_u64(), amp_floor);
            BoundReport rep = bounds::theorem2_bounds(spec, phi, psi);
            rec = from_report(rep);
            rec.theorem = theorem;
            rec.m = m;
            rec.n = n;
            rec.alpha = spec.alpha;
            rec.beta = spec.beta;
            rec.holds = rep.holds && one_sided_and_lemma_checks(rep);
            break;
        }
        case Theorem::T3: {
            const PureState phi = haar_state(m, n, gen.next_u64());
            const PureState psi = haar_state(m, n, gen.next_u64());
            const SuperpositionSpec spec = random_amplitudes(gen.next_u64(), amp_floor);
            BoundReport rep = bounds::theorem3_upper(spec, phi, psi);
            rec = from_report(rep);
            rec.theorem = theorem;
            rec.m = m;
            rec.n = n;
            rec.alpha = spec.alpha;
            rec.beta = spec.beta;
            break;
        }
        case Theorem::Horn: {
            // 5x5 per the lemma the bounds rest on; alternate general
            // Hermitian pairs with PSD pairs so the square-root chain is
            // exercised too.
            const bool psd = (trial_seed & 1) != 0;
            const Matrix h = random_hermitian(5, gen.next_u64(), psd);
            const Matrix k = random_hermitian(5, gen.next_u64(), psd);
            BoundReport rep = bounds::horn_check(h, k);
            rec = from_report(rep);
            rec.theorem = theorem;
            rec.m = 5;
            rec.n = 5;
            break;
        }
        case Theorem::Consistency: {
            const PureState s = haar_state(m, n, gen.next_u64());
            const double n_pt = measures::negativity_pt(s);
            const double n_sch = measures::negativity_schmidt(s);
            rec.value = std::abs(n_pt - n_sch);
            rec.upper = 1e-8;
            rec.slack_upper = rec.upper - rec.value;
            const bool cross_ok = rec.value <= 1e-8;
            const bool witness_ok =
                (n_sch > 1e-9) == (measures::schmidt_rank(s, 1e-9) > 1);
            const double c = measures::concurrence(s);
            const double c2 = measures::concurrence_sq_from_spectrum(
                linalg::hermitian_eigenvalues(states::reduced_density_a(s), true));
            const bool conc_ok = std::abs(c * c - c2) <= 1e-10;
            rec.holds = cross_ok && witness_ok && conc_ok;
            break;
        }
    }
    rec.derived_seed = trial_seed;
    return rec;
}

void format_double(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

}  // namespace

CampaignResult run_campaign(const RunConfig& config) {
    config.validate();
    CampaignResult result;
    std::size_t index = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    double max_abs_slack = 0.0;

    for (Theorem theorem : config.theorems) {
        for (auto [m, n] : config.dim_pairs) {
            for (std::size_t t = 0; t < config.trials; ++t, ++index) {
                const std::uint64_t trial_seed = rng::derive_seed(config.seed, index);
                TrialRecord rec = run_trial(theorem, m, n, config.amp_floor, trial_seed);
                rec.trial_index = index;
                if (!rec.holds) ++result.summary.violations;
                min_slack = std::min(min_slack, rec.slack_upper);
                if (rec.has_lower) min_slack = std::min(min_slack, rec.slack_lower);
                max_abs_slack = std::max({max_abs_slack, std::abs(rec.slack_upper),
                                          rec.has_lower ? std::abs(rec.slack_lower) : 0.0});
                result.records.push_back(rec);
            }
        }
    }
    result.summary.trials = result.records.size();
    result.summary.min_slack = min_slack;
    result.summary.max_abs_slack = max_abs_slack;
    std::sort(result.records.begin(), result.records.end(),
              [](const TrialRecord& a, const TrialRecord& b) {
                  return a.trial_index < b.trial_index;
              });
    return result;
}

std::string emit_csv(const std::vector<TrialRecord>& records) {
    std::string out =
        "trial_index,theorem,m,n,alpha_re,alpha_im,beta_re,beta_im,"
        "lower,value,upper,slack_lower,slack_upper,holds,derived_seed\n";
    for (const auto& r : records) {
        out += std::to_string(r.trial_index);
        out += ',';
        out += theorem_name(r.theorem);
        out += ',';
        out += std::to_string(r.m);
        out += ',';
        out += std::to_string(r.n);
        out += ',';
        format_double(out, r.alpha.real());
        out += ',';
        format_double(out, r.alpha.imag());
        out += ',';
        format_double(out, r.beta.real());
        out += ',';
        format_double(out, r.beta.imag());
        out += ',';
        if (r.has_lower) format_double(out, r.lower);
        out += ',';
        format_double(out, r.value);
        out += ',';
        format_double(out, r.upper);
        out += ',';
        if (r.has_lower) format_double(out, r.slack_lower);
        out += ',';
        format_double(out, r.slack_upper);
        out += ',';
        out += r.holds ? '1' : '0';
        out += ',';
        out += std::to_string(r.derived_seed);
        out += '\n';
    }
    return out;
}

std::string emit_json(const std::vector<TrialRecord>& records, const CampaignSummary& summary) {
    std::string out = "{\n  \"summary\": {\"trials\": ";
    out += std::to_string(summary.trials);
    out += ", \"violations\": ";
    out += std::to_string(summary.violations);
    out += ", \"min_slack\": ";
    format_double(out, summary.min_slack);
    out += ", \"max_abs_slack\": ";
    format_double(out, summary.max_abs_slack);
    out += "},\n  \"records\": [\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        out += "    {\"trial_index\": ";
        out += std::to_string(r.trial_index);
        out += ", \"theorem\": \"";
        out += theorem_name(r.theorem);
        out += "\", \"m\": ";
        out += std::to_string(r.m);
        out += ", \"n\": ";
        out += std::to_string(r.n);
        out += ", \"alpha\": [";
        format_double(out, r.alpha.real());
        out += ", ";
        format_double(out, r.alpha.imag());
        out += "], \"beta\": [";
        format_double(out, r.beta.real());
        out += ", ";
        format_double(out, r.beta.imag());
        out += "], \"lower\": ";
        if (r.has_lower)
            format_double(out, r.lower);
        else
            out += "null";
        out += ", \"value\": ";
        format_double(out, r.value);
        out += ", \"upper\": ";
        format_double(out, r.upper);
        out += ", \"slack_lower\": ";
        if (r.has_lower)
            format_double(out, r.slack_lower);
        else
            out += "null";
        out += ", \"slack_upper\": ";
        format_double(out, r.slack_upper);
        out += ", \"holds\": ";
        out += r.holds ? "true" : "false";
        out += ", \"derived_seed\": ";
        out += std::to_string(r.derived_seed);
        out += '}';
        if (i + 1 < records.size()) out += ',';
        out += '\n';
    }
    out += "  ]\n}\n";
    return out;
}

ReproResult repro_paper_example() {
    const PureState phi = states::maximally_entangled(4, 4, {0, 1}, {0, 1});
    const PureState psi = states::maximally_entangled(4, 4, {2, 3}, {2, 3});
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const SuperpositionSpec spec(cplx{inv_sqrt2, 0.0}, cplx{inv_sqrt2, 0.0});

    ReproResult res;
    res.report = bounds::theorem2_bounds(spec, phi, psi);
    res.ok = true;
    std::ostringstream detail;
    auto check = [&](const std::string& name, double got, double expect) {
        const bool ok = std::abs(got - expect) <= 1e-9;
        if (!ok) res.ok = false;
        detail << (ok ? "PASS" : "FAIL") << "  " << name << " = " << got << " (expected "
               << expect << ")\n";
    };
    check("negativity(superposition)", res.report.value, 1.5);
    check("lower bound", res.report.lower.value_or(-1.0), 0.0);
    check("upper bound", res.report.upper, 4.0);
    check("negativity(phi)", res.report.terms.at("n_phi"), 0.5);
    check("negativity(psi)", res.report.terms.at("n_psi"), 0.5);
    check("mu_max(phi)", res.report.terms.at("mu_max_phi"), 0.5);
    check("mu_max(psi)", res.report.terms.at("mu_max_psi"), 0.5);
    if (!(res.report.value > res.report.lower.value_or(0.0))) {
        res.ok = false;
        detail << "FAIL  strict value > lower\n";
    }
    res.detail = detail.str();
    return res;
}

namespace {

// Closed forms for the epsilon family; exact for any d, no state vector.
double family_entropy(double eps, double d) {
    double e = 0.0;
    if (eps < 1.0 && eps > 0.0)
        e = -(1.0 - eps) * std::log2(1.0 - eps) - eps * std::log2(eps / d);
    else if (eps >= 1.0)
        e = -std::log2(1.0 / d);  // all weight on the d-term tail
    return std::max(e, 0.0);
}

double family_concurrence_sq(double eps, double d) {
    return 2.0 * (2.0 * eps - eps * eps - eps * eps / d);
}

}  // namespace

std::vector<SweepRow> continuity_sweep(const std::vector<double>& epsilons,
                                       const std::vector<std::uint64_t>& dense_ds,
                                       const std::vector<std::uint64_t>& analytic_ds) {
    std::vector<SweepRow> rows;
    for (double eps : epsilons) {
        if (!(eps > 0.0 && eps < 1.0)) throw InvalidEpsilon("sweep epsilons must lie in (0, 1)");
        for (std::uint64_t d : dense_ds) {
            auto [phi, psi] = states::epsilon_family(eps, static_cast<std::size_t>(d));
            SweepRow row;
            row.epsilon = eps;
            row.d = d;
            row.analytic = false;
            row.fidelity = states::fidelity(phi, psi);
            row.entropy = measures::entropy_of_entanglement(psi);
            const double c = measures::concurrence(psi);
            row.concurrence_sq = c * c;
            row.bound_4t = 4.0 * measures::trace_distance(states::reduced_density_a(psi),
                                                          states::reduced_density_a(phi));
            row.eps_log2_d = eps * std::log2(static_cast<double>(d));
            rows.push_back(row);
        }
        for (std::uint64_t d : analytic_ds) {
            SweepRow row;
            row.epsilon = eps;
            row.d = d;
            row.analytic = true;
            row.fidelity = 1.0 - eps;
            row.entropy = family_entropy(eps, static_cast<double>(d));
            row.concurrence_sq = family_concurrence_sq(eps, static_cast<double>(d));
            row.bound_4t = 8.0 * eps;  // T(rho_psi, rho_phi) = 2*eps on the diagonal family
            row.eps_log2_d = eps * std::log2(static_cast<double>(d));
            rows.push_back(row);
        }
    }
    return rows;
}

std::string emit_sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "epsilon,d,path,fidelity,entropy,concurrence_sq,bound_4t,eps_log2_d\n";
    for (const auto& r : rows) {
        format_double(out, r.epsilon);
        out += ',';
        out += std::to_string(r.d);
        out += ',';
        out += r.analytic ? "analytic" : "dense";
        out += ',';
        format_double(out, r.fidelity);
        out += ',';
        format_double(out, r.entropy);
        out += ',';
        format_double(out, r.concurrence_sq);
        out += ',';
        format_double(out, r.bound_4t);
        out += ',';
        format_double(out, r.eps_log2_d);
        out += '\n';
    }
    return out;
}

}  // namespace negbounds::harness
