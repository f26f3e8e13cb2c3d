#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "negbounds/bounds.hpp"
#include "negbounds/rng.hpp"

namespace negbounds::harness {

using bounds::BoundReport;
using states::PureState;
using states::SuperpositionSpec;

enum class Theorem { T1, T2, T3, Horn, Consistency };

std::string theorem_name(Theorem t);
Theorem theorem_from_name(const std::string& name);  // throws ConfigInvalid

enum class ReportFormat { Csv, Json };

struct RunConfig {
    std::uint64_t seed = 0;
    std::size_t trials = 1000;
    std::vector<std::pair<std::size_t, std::size_t>> dim_pairs;
    std::vector<Theorem> theorems;
    double amp_floor = 0.05;
    std::string output_path;  // empty: no file written
    ReportFormat format = ReportFormat::Csv;

    void validate() const;  // throws ConfigInvalid
};

struct TrialRecord {
    std::size_t trial_index = 0;
    Theorem theorem = Theorem::T1;
    std::size_t m = 0, n = 0;
    linalg::cplx alpha{0.0, 0.0};
    linalg::cplx beta{0.0, 0.0};
    bool has_lower = false;
    double lower = 0.0;
    double value = 0.0;
    double upper = 0.0;
    double slack_lower = 0.0;
    double slack_upper = 0.0;
    bool holds = false;
    std::uint64_t derived_seed = 0;
};

struct CampaignSummary {
    std::size_t trials = 0;
    std::size_t violations = 0;
    double min_slack = 0.0;      // most binding constraint seen
    double max_abs_slack = 0.0;  // loosest constraint seen
};

struct CampaignResult {
    std::vector<TrialRecord> records;  // sorted by trial_index
    CampaignSummary summary;
};

/// Amplitudes drawn as iid standard complex Gaussians, then normalized:
/// Haar-uniform on the unit sphere. Deterministic per seed.
PureState haar_state(std::size_t m, std::size_t n, std::uint64_t seed);

/// Haar-random states on disjoint k1 x k1 and k2 x k2 coefficient blocks,
/// so the pair is biorthogonal by construction (and A-side orthogonal too).
std::pair<PureState, PureState> random_biorthogonal_pair(std::size_t m, std::size_t n,
                                                         std::size_t k1, std::size_t k2,
                                                         std::uint64_t seed);

/// alpha = cos(theta), beta = sin(theta) e^{i phase}, theta uniform on
/// [asin(floor), acos(floor)]: normalization is exact and both moduli
/// respect the floor.
SuperpositionSpec random_amplitudes(std::uint64_t seed, double amp_floor);

/// Random Hermitian with iid Gaussian entries symmetrized; PSD variant is a
/// normalized Gram matrix.
linalg::Matrix random_hermitian(std::size_t dim, std::uint64_t seed, bool psd = false);

CampaignResult run_campaign(const RunConfig& config);

std::string emit_csv(const std::vector<TrialRecord>& records);
std::string emit_json(const std::vector<TrialRecord>& records, const CampaignSummary& summary);

struct ReproResult {
    BoundReport report;
    bool ok = false;        // every pinned quantity matched within 1e-9
    std::string detail;     // human-readable pass/fail lines
};

/// Rebuild the published 4x4 worked example (two Bell pairs on disjoint
/// supports, equal amplitudes) and verify value 3/2, lower 0, upper 4, the
/// component negativities 1/2 and largest reduced eigenvalues 1/2.
ReproResult repro_paper_example();

struct SweepRow {
    double epsilon = 0.0;
    std::uint64_t d = 0;
    bool analytic = false;  // spectrum path (no state vector built)
    double fidelity = 0.0;
    double entropy = 0.0;
    double concurrence_sq = 0.0;
    double bound_4t = 0.0;
    double eps_log2_d = 0.0;
};

/// Continuity contrast sweep: dense rows build the full state, analytic rows
/// use the closed-form reduced spectrum and are valid for any d.
std::vector<SweepRow> continuity_sweep(const std::vector<double>& epsilons,
                                       const std::vector<std::uint64_t>& dense_ds,
                                       const std::vector<std::uint64_t>& analytic_ds);

std::string emit_sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace negbounds::harness
