#include "jamsim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "jamsim/channel.hpp"

namespace jamsim {

double distance_2d(const Point3& a, const Point3& b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

double distance_3d(const Point3& a, const Point3& b)
{
    const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

int Numerology::n_prb() const
{
    const double usable = (1.0 - guard_fraction) * total_bandwidth;
    return static_cast<int>(std::floor(usable / prb_bandwidth() + 1e-9));
}

void Numerology::validate() const
{
    if (subcarrier_spacing <= 0 || n_sc_per_prb <= 0 || n_symb_per_slot <= 0)
        throw std::invalid_argument("numerology: non-positive grid dimensions");
    if (guard_fraction < 0 || guard_fraction >= 1)
        throw std::invalid_argument("numerology: guard_fraction must be in [0, 1)");
    if (overhead < 0 || overhead >= 1)
        throw std::invalid_argument("numerology: overhead must be in [0, 1)");
    if (packet_size_bits <= 0)
        throw std::invalid_argument("numerology: packet size must be positive");
    if (n_prb() < 1)
        throw std::invalid_argument("numerology: bandwidth holds no PRB");
}

std::string to_string(DeploymentKind kind)
{
    switch (kind)
    {
    case DeploymentKind::Centralized: return "centralized";
    case DeploymentKind::PartiallyDistributed: return "partially_distributed";
    case DeploymentKind::FullyDistributed: return "fully_distributed";
    case DeploymentKind::Custom: return "custom";
    }
    throw std::invalid_argument("unknown deployment kind");
}

DeploymentKind parse_deployment_kind(const std::string& text)
{
    for (auto k : {DeploymentKind::Centralized, DeploymentKind::PartiallyDistributed,
                   DeploymentKind::FullyDistributed, DeploymentKind::Custom})
    {
        if (text == to_string(k))
            return k;
    }
    throw std::invalid_argument(fmt::format("unknown deployment kind '{}'", text));
}

std::optional<int> default_ap_count(DeploymentKind kind)
{
    switch (kind)
    {
    case DeploymentKind::Centralized: return 1;
    case DeploymentKind::PartiallyDistributed: return 4;
    case DeploymentKind::FullyDistributed: return 16;
    case DeploymentKind::Custom: return std::nullopt;
    }
    throw std::invalid_argument("unknown deployment kind");
}

namespace {

std::vector<Point3> centred_grid(const HallDims& hall, int nx, int ny)
{
    std::vector<Point3> out;
    out.reserve(static_cast<std::size_t>(nx * ny));
    const double sx = hall.length / nx;
    const double sy = hall.width / ny;
    for (int ix = 0; ix < nx; ++ix)
        for (int iy = 0; iy < ny; ++iy)
            out.push_back({sx * (ix + 0.5), sy * (iy + 0.5), hall.height});
    return out;
}

bool is_perfect_square(int n)
{
    if (n < 1)
        return false;
    const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    return r * r == n;
}

}  // namespace

std::vector<Point3> ap_layout(DeploymentKind kind, const HallDims& hall, int n_ap)
{
    if (n_ap < 1)
        throw std::invalid_argument("ap_layout: n_ap must be positive");
    if (auto expected = default_ap_count(kind); expected && *expected != n_ap)
    {
        throw std::invalid_argument(fmt::format("ap_layout: {} deployment needs {} APs, got {}",
                                                to_string(kind), *expected, n_ap));
    }
    switch (kind)
    {
    case DeploymentKind::Centralized: return centred_grid(hall, 1, 1);
    case DeploymentKind::PartiallyDistributed: return centred_grid(hall, 2, 2);
    case DeploymentKind::FullyDistributed: return centred_grid(hall, 4, 4);
    case DeploymentKind::Custom: {
        int best_nx = n_ap;
        double best_err = std::numeric_limits<double>::infinity();
        for (int nx = 1; nx <= n_ap; ++nx)
        {
            if (n_ap % nx != 0)
                continue;
            const int ny = n_ap / nx;
            const double err = std::abs(hall.length / nx - hall.width / ny);
            if (err < best_err)
            {
                best_err = err;
                best_nx = nx;
            }
        }
        return centred_grid(hall, best_nx, n_ap / best_nx);
    }
    }
    throw std::invalid_argument("ap_layout: unknown deployment kind");
}

int Deployment::array_side() const
{
    return static_cast<int>(std::lround(std::sqrt(static_cast<double>(n_ant_per_ap()))));
}

Deployment Deployment::make(DeploymentKind kind, int n_ap, int n_ant_total, const HallDims& hall)
{
    Deployment d;
    d.kind = kind;
    d.n_ap = n_ap;
    d.n_ant_total = n_ant_total;
    d.hall = hall;
    d.ap_positions = ap_layout(kind, hall, n_ap);
    d.validate();
    return d;
}

void Deployment::validate() const
{
    if (n_ap < 1 || n_ant_total < 1)
        throw std::invalid_argument("deployment: counts must be positive");
    if (n_ant_total % n_ap != 0)
        throw std::invalid_argument(
            fmt::format("deployment: {} antennas do not split evenly over {} APs", n_ant_total, n_ap));
    if (!is_perfect_square(n_ant_per_ap()))
        throw std::invalid_argument(
            fmt::format("deployment: {} antennas per AP is not a square array", n_ant_per_ap()));
    if (static_cast<int>(ap_positions.size()) != n_ap)
        throw std::invalid_argument("deployment: AP position count mismatch");
    for (const auto& p : ap_positions)
    {
        if (p.x < 0 || p.x > hall.length || p.y < 0 || p.y > hall.width || p.z != hall.height)
            throw std::invalid_argument("deployment: AP outside the hall ceiling");
    }
}

void LargeScaleParams::validate() const
{
    if (sigma_sf_los < 0 || sigma_sf_nlos < 0)
        throw std::invalid_argument("channel: shadowing sigma must be non-negative");
    if (!(spatial_corr_coeff >= 0 && spatial_corr_coeff < 1))
        throw std::invalid_argument("channel: spatial_corr_coeff must be in [0, 1)");
    if (!(los_decay_distance > 0))
        throw std::invalid_argument("channel: los_decay_distance must be positive");
}

std::string to_string(SchedulingPolicy policy)
{
    return policy == SchedulingPolicy::Sequential ? "sequential" : "random";
}

SchedulingPolicy parse_scheduling(const std::string& text)
{
    if (text == "sequential")
        return SchedulingPolicy::Sequential;
    if (text == "random")
        return SchedulingPolicy::Random;
    throw std::invalid_argument(fmt::format("unknown scheduling policy '{}'", text));
}

std::string to_string(DetectorSelection sel)
{
    switch (sel)
    {
    case DetectorSelection::None: return "none";
    case DetectorSelection::Glrt: return "glrt";
    case DetectorSelection::Rlrt: return "rlrt";
    case DetectorSelection::Both: return "both";
    }
    throw std::invalid_argument("unknown detector selection");
}

DetectorSelection parse_detector_selection(const std::string& text)
{
    for (auto s : {DetectorSelection::None, DetectorSelection::Glrt, DetectorSelection::Rlrt,
                   DetectorSelection::Both})
    {
        if (text == to_string(s))
            return s;
    }
    throw std::invalid_argument(fmt::format("unknown detector '{}'", text));
}

void ScenarioConfig::validate() const
{
    numerology.validate();
    deployment.validate();
    channel.large_scale.validate();
    const int n = n_prb();
    if (n_ue < 1)
        throw std::invalid_argument("scenario: n_ue must be positive");
    if (defense.m_p < 1 || defense.m_p >= n)
        throw std::invalid_argument(fmt::format("defense.m_p = {} outside [1, {})", defense.m_p, n));
    if (n - defense.m_p < n_ue)
        throw std::invalid_argument(
            fmt::format("defense.m_p = {} leaves fewer data PRBs than the {} UEs", defense.m_p, n_ue));
    if (jammer.l_p < 1 || jammer.l_p > n)
        throw std::invalid_argument(fmt::format("jammer.l_p = {} outside [1, {}]", jammer.l_p, n));
    if (jammer.power_dbm && !std::isfinite(*jammer.power_dbm))
        throw std::invalid_argument("jammer.power_dbm must be finite (use 'off' for no jammer)");
    if (jammer.perimeter_offset <= 0 || jammer.wall_loss_std_db < 0)
        throw std::invalid_argument("jammer: invalid perimeter or wall-loss spread");
    if (link.pilot_length < 1)
        throw std::invalid_argument("link.pilot_length must be >= 1");
    if (!(link.eesm_beta > 0))
        throw std::invalid_argument("link.eesm_beta must be positive");
    if (noise_figure_db < 0)
        throw std::invalid_argument("noise figure must be non-negative");
    if (!(channel.carrier_ghz > 0) || !(channel.element_spacing > 0))
        throw std::invalid_argument("channel: carrier and element spacing must be positive");
    if (detector.slots_per_decision < 1 || mc.n_slots_per_drop % detector.slots_per_decision != 0)
        throw std::invalid_argument("detector.slots_per_decision must divide mc.n_slots_per_drop");
    for (double p : detector.pfa_grid)
    {
        if (!(p > 0 && p < 1))
            throw std::invalid_argument(fmt::format("detector.pfa_grid value {} outside (0, 1)", p));
    }
    if (mc.n_drops < 1 || mc.n_slots_per_drop < 1)
        throw std::invalid_argument("mc: n_drops and n_slots_per_drop must be >= 1");
}

std::vector<double> default_pfa_grid()
{
    return {1e-4, 2e-4, 5e-4, 1e-3, 2e-3, 5e-3, 1e-2, 2e-2, 5e-2, 0.1, 0.2, 0.5, 0.9, 0.99};
}

ScenarioConfig scenario_preset(const std::string& name)
{
    ScenarioConfig c;
    c.preset = name;
    c.detector.pfa_grid = default_pfa_grid();
    if (name == "B20")
    {
        c.numerology.total_bandwidth = 20e6;
        c.n_ue = 4;
    }
    else if (name == "B100")
    {
        c.numerology.total_bandwidth = 100e6;
        c.n_ue = 20;
    }
    else
    {
        throw std::invalid_argument(fmt::format("unknown scenario preset '{}'", name));
    }
    return c;
}

bool in_jammer_ring(const HallDims& hall, double offset, double x, double y)
{
    const bool inside_outer =
        x >= -offset && x <= hall.length + offset && y >= -offset && y <= hall.width + offset;
    const bool inside_hall = x >= 0 && x <= hall.length && y >= 0 && y <= hall.width;
    return inside_outer && !inside_hall;
}

Drop sample_drop(const ScenarioConfig& config, Rng& rng)
{
    constexpr double kTerminalHeight = 1.5;
    const auto& hall = config.deployment.hall;
    const double offset = config.jammer.perimeter_offset;

    Drop drop;
    drop.ue_positions.reserve(static_cast<std::size_t>(config.n_ue));
    for (int i = 0; i < config.n_ue; ++i)
    {
        const double x = uniform01(rng) * hall.length;
        const double y = uniform01(rng) * hall.width;
        drop.ue_positions.push_back({x, y, kTerminalHeight});
    }

    // Rejection sampling over the outer rectangle gives a uniform point on the ring.
    for (;;)
    {
        const double x = -offset + uniform01(rng) * (hall.length + 2 * offset);
        const double y = -offset + uniform01(rng) * (hall.width + 2 * offset);
        if (in_jammer_ring(hall, offset, x, y))
        {
            drop.jammer_position = {x, y, kTerminalHeight};
            break;
        }
    }

    drop.ue_tx_power = dbm_to_watt(config.ue_power_dbm);
    drop.jammer_tx_power = config.jammer.power_dbm ? dbm_to_watt(*config.jammer.power_dbm) : 0.0;
    drop.wall_loss_db =
        config.jammer.wall_loss_mean_db + config.jammer.wall_loss_std_db * standard_normal(rng);

    const int n_links = config.n_ue + 1;
    const int n_ap = config.deployment.n_ap;
    const auto& ls = config.channel.large_scale;
    drop.shadowing_db.resize(n_links, n_ap);
    drop.los_state.resize(n_links, n_ap);
    for (int i = 0; i < n_links; ++i)
    {
        const Point3& term = i < config.n_ue ? drop.ue_positions[static_cast<std::size_t>(i)]
                                             : drop.jammer_position;
        for (int j = 0; j < n_ap; ++j)
        {
            const auto& ap = config.deployment.ap_positions[static_cast<std::size_t>(j)];
            const bool los = uniform01(rng) < los_probability(distance_2d(term, ap), ls);
            drop.los_state(i, j) = los;
            drop.shadowing_db(i, j) =
                (los ? ls.sigma_sf_los : ls.sigma_sf_nlos) * standard_normal(rng);
        }
    }
    return drop;
}

double dbm_to_watt(double p_dbm)
{
    return std::pow(10.0, (p_dbm - 30.0) / 10.0);
}

double watt_to_dbm(double p_watt)
{
    return 10.0 * std::log10(p_watt) + 30.0;
}

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

double linear_to_db(double lin)
{
    return 10.0 * std::log10(lin);
}

double noise_power_per_prb(const Numerology& numerology, double noise_figure_db)
{
    constexpr double kThermalDbmPerHz = -174.0;
    return dbm_to_watt(kThermalDbmPerHz + 10.0 * std::log10(numerology.prb_bandwidth()) +
                       noise_figure_db);
}

}  // namespace jamsim
