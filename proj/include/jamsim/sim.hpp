#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "jamsim/detect.hpp"
#include "jamsim/scenario.hpp"

namespace jamsim {

struct RunSpec
{
    ScenarioConfig scenario;
    int threads = 1;
};

struct UeSlotKpi
{
    float sinr_eff_db;
    double bler;
};

struct SlotRecord
{
    int drop;
    int slot;
    std::vector<UeSlotKpi> ue;
    std::vector<float> prb_sinr_db;  // every allocated PRB, UE-major
};

/// Detector statistics for one decision (one slot, or a group of slots when
/// accumulation is enabled). Statistics of a disabled detector are NaN. The
/// H0 values come from a noise-only replica of the same blanked REs.
struct DetectionRecord
{
    int drop;
    int first_slot;
    int n_blanked_jammed;
    double glrt_h0;
    double glrt_h1;
    double rlrt_h0;
    double rlrt_h1;

    double h0(DetectorKind k) const { return k == DetectorKind::Glrt ? glrt_h0 : rlrt_h0; }
    double h1(DetectorKind k) const { return k == DetectorKind::Glrt ? glrt_h1 : rlrt_h1; }
};

struct RunResult
{
    std::vector<SlotRecord> slots;
    std::vector<DetectionRecord> detections;
    int n_ant = 0;
    long n_re_per_decision = 0;
    double noise_var_per_re = 0.0;
    int failed_slots = 0;

    std::vector<float> prb_sinr_db() const;
};

/// Runs n_drops x n_slots. Output is a pure function of the scenario
/// (including its seed) and does not depend on `threads`.
RunResult run(const RunSpec& spec);

/// Mean BLER over all (drop, slot, UE) with its standard error taken over
/// per-drop means.
struct BlerSummary
{
    double mean;
    double std_error;
};

BlerSummary summarize_bler(const RunResult& result);

/// Grids swept on top of a base scenario; an empty grid keeps the base value.
struct SweepGrid
{
    std::vector<std::optional<double>> p_j_dbm;
    std::vector<int> l_p;
    std::vector<int> m_p;
    std::vector<int> n_ant_total;
    std::vector<DeploymentKind> deployment;
    std::vector<SchedulingPolicy> scheduling;
};

/// Cartesian product in the order deployment, n_ant, scheduling, m_p, l_p, p_j.
std::vector<ScenarioConfig> expand(const ScenarioConfig& base, const SweepGrid& grid);

struct CdfPoint
{
    double value;
    double cdf;
};

/// Empirical CDF P(X <= x) evaluated at each grid value.
std::vector<CdfPoint> aggregate_cdf(std::span<const float> values, std::span<const double> grid);

/// Smallest sample v with empirical CDF(v) >= q.
double empirical_quantile(std::span<const float> values, double q);

struct RocPoint
{
    double target_pfa;
    double empirical_pfa;
    double p_md;
};

/// Re-thresholds stored statistics at every grid point.
std::vector<RocPoint> roc_table(std::span<const DetectionRecord> records, DetectorKind kind,
                                std::span<const double> pfa_grid, long n_re, int n_ant,
                                double sigma_re2);

struct NoiseTrial
{
    double glrt;
    double rlrt;
};

/// Both detector statistics on raw white-noise observations (unit noise
/// variance per RE), one entry per trial.
std::vector<NoiseTrial> noise_only_statistics(int n_ant, long n_re, long trials, std::uint64_t seed,
                                              int threads = 1);

/// Runs fn(i) for i in [0, n) on up to `threads` workers.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace jamsim
