#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "jamsim/rng.hpp"

namespace jamsim {

struct Point3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

double distance_2d(const Point3& a, const Point3& b);
double distance_3d(const Point3& a, const Point3& b);

struct HallDims
{
    double length = 100.0;  // x extent (m)
    double width = 50.0;    // y extent (m)
    double height = 6.0;    // ceiling height (m)
};

/// OFDM numerology and packet parameters for one carrier.
struct Numerology
{
    double subcarrier_spacing = 60e3;
    int n_sc_per_prb = 12;
    int n_symb_per_slot = 14;
    double total_bandwidth = 20e6;
    double guard_fraction = 0.10;
    double overhead = 0.25;
    int packet_size_bits = 160;

    int n_re_per_prb() const { return n_sc_per_prb * n_symb_per_slot; }
    double prb_bandwidth() const { return n_sc_per_prb * subcarrier_spacing; }
    /// PRBs fitting into the non-guard part of the band.
    int n_prb() const;

    void validate() const;
};

enum class DeploymentKind
{
    Centralized,
    PartiallyDistributed,
    FullyDistributed,
    Custom,
};

std::string to_string(DeploymentKind kind);
DeploymentKind parse_deployment_kind(const std::string& text);
/// AP count implied by a named kind; Custom has none.
std::optional<int> default_ap_count(DeploymentKind kind);

struct Deployment
{
    DeploymentKind kind = DeploymentKind::PartiallyDistributed;
    int n_ap = 4;
    int n_ant_total = 64;
    HallDims hall;
    std::vector<Point3> ap_positions;

    int n_ant_per_ap() const { return n_ant_total / n_ap; }
    /// Side of the square per-AP array.
    int array_side() const;

    static Deployment make(DeploymentKind kind, int n_ap, int n_ant_total, const HallDims& hall = {});
    void validate() const;
};

/// Ceiling-mounted AP positions: a cell-centred grid over the hall footprint.
/// Named kinds require their own AP count (1, 4 or 16); Custom accepts any
/// count and picks the grid factorisation closest to the hall aspect ratio.
std::vector<Point3> ap_layout(DeploymentKind kind, const HallDims& hall, int n_ap);

/// Large-scale channel constants. Path loss is A + B*log10(d_3D) + C*log10(f_GHz).
struct LargeScaleParams
{
    double pl_los_a = 31.84, pl_los_b = 21.5, pl_los_c = 19.0;
    double pl_nlos_a = 33.63, pl_nlos_b = 21.9, pl_nlos_c = 20.0;
    double sigma_sf_los = 4.3;
    double sigma_sf_nlos = 4.0;
    double los_decay_distance = 10.0;
    double rician_k_los_db = 7.0;
    double spatial_corr_coeff = 0.5;

    void validate() const;
};

struct ChannelConfig
{
    LargeScaleParams large_scale;
    double carrier_ghz = 3.75;
    /// Element spacing of the planar array, in wavelengths.
    double element_spacing = 0.5;
};

struct JammerConfig
{
    /// Total jammer power; std::nullopt means no jammer at all.
    std::optional<double> power_dbm = 60.0;
    int l_p = 25;
    double perimeter_offset = 10.0;
    double wall_loss_mean_db = 27.5;
    double wall_loss_std_db = 6.5;
    /// Keep one attacked-PRB set for a whole drop instead of redrawing per slot.
    bool freeze_prbs = false;
};

enum class SchedulingPolicy
{
    Sequential,
    Random,
};

std::string to_string(SchedulingPolicy policy);
SchedulingPolicy parse_scheduling(const std::string& text);

struct DefenseConfig
{
    int m_p = 5;
    SchedulingPolicy scheduling = SchedulingPolicy::Random;
};

enum class DetectorSelection
{
    None,
    Glrt,
    Rlrt,
    Both,
};

std::string to_string(DetectorSelection sel);
DetectorSelection parse_detector_selection(const std::string& text);

std::vector<double> default_pfa_grid();

struct DetectorConfig
{
    DetectorSelection selection = DetectorSelection::Both;
    std::vector<double> pfa_grid = default_pfa_grid();
    /// Consecutive slots concatenated into one decision.
    int slots_per_decision = 1;
    /// Synthesize raw blanked samples instead of their sample covariance.
    bool raw_samples = false;
};

struct LinkConfig
{
    int pilot_length = 16;
    double eesm_beta = 1.0;
    /// One estimation-noise draw shared by all antennas of a PRB.
    bool common_z = false;
};

struct MonteCarloConfig
{
    int n_drops = 200;
    int n_slots_per_drop = 50;
    std::uint64_t seed = 1;
};

/// Everything that defines a run.
struct ScenarioConfig
{
    std::string preset = "B20";
    Numerology numerology;
    int n_ue = 4;
    double ue_power_dbm = 10.0;
    double noise_figure_db = 7.0;
    Deployment deployment = Deployment::make(DeploymentKind::PartiallyDistributed, 4, 64);
    ChannelConfig channel;
    JammerConfig jammer;
    DefenseConfig defense;
    DetectorConfig detector;
    LinkConfig link;
    MonteCarloConfig mc;

    int n_prb() const { return numerology.n_prb(); }
    void validate() const;
};

/// Scenario presets "B20" (20 MHz, 4 UEs) and "B100" (100 MHz, 20 UEs).
ScenarioConfig scenario_preset(const std::string& name);

/// One random placement of UEs and jammer with its large-scale states.
/// Row i < n_ue of the link matrices is UE i; the last row is the jammer.
struct Drop
{
    std::vector<Point3> ue_positions;
    Point3 jammer_position;
    double ue_tx_power = 0.0;
    double jammer_tx_power = 0.0;
    double wall_loss_db = 0.0;
    Eigen::MatrixXd shadowing_db;
    Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> los_state;

    int jammer_row() const { return static_cast<int>(ue_positions.size()); }
};

Drop sample_drop(const ScenarioConfig& config, Rng& rng);

/// True when (x, y) lies strictly outside the hall footprint but within the
/// perimeter at distance `offset` from the walls.
bool in_jammer_ring(const HallDims& hall, double offset, double x, double y);

double dbm_to_watt(double p_dbm);
double watt_to_dbm(double p_watt);
double db_to_linear(double db);
double linear_to_db(double lin);

/// Thermal noise over one PRB plus receiver noise figure, in W.
double noise_power_per_prb(const Numerology& numerology, double noise_figure_db);

}  // namespace jamsim
