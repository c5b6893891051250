#include "jamsim/presets.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace jamsim {
namespace {

constexpr auto kCentralized = DeploymentKind::Centralized;
constexpr auto kPartial = DeploymentKind::PartiallyDistributed;
constexpr auto kFull = DeploymentKind::FullyDistributed;

std::vector<std::optional<double>> pj_grid()
{
    std::vector<std::optional<double>> out;
    for (int p = 20; p <= 60; p += 5)
        out.emplace_back(p);
    return out;
}

ScenarioConfig with_deployment(ScenarioConfig c, DeploymentKind kind)
{
    c.deployment = Deployment::make(kind, *default_ap_count(kind), c.deployment.n_ant_total,
                                    c.deployment.hall);
    return c;
}

FigurePreset make(const std::string& name)
{
    FigurePreset f;
    f.name = name;
    f.base = scenario_preset("B20");
    if (name == "fig2_fa_calibration")
    {
        f.table = TableKind::FaCalibration;
        f.base.mc.n_drops = 1000;
        f.base.mc.n_slots_per_drop = 100;
        f.calibration.target_pfa = {1e-3, 2e-3, 5e-3, 1e-2, 2e-2, 5e-2, 0.1, 0.2, 0.3};
    }
    else if (name == "fig3_sinr_cdf")
    {
        f.table = TableKind::SinrCdf;
        f.base.detector.selection = DetectorSelection::None;
        f.base.jammer.l_p = 25;
        f.sweep.deployment = {kCentralized, kPartial, kFull};
        f.sweep.p_j_dbm = {std::nullopt, 20.0, 60.0};
    }
    else if (name == "fig4_bler_vs_pj")
    {
        f.table = TableKind::BlerVsPj;
        f.base.detector.selection = DetectorSelection::None;
        f.sweep.deployment = {kCentralized, kPartial, kFull};
        f.sweep.l_p = {5, 25};
        f.sweep.p_j_dbm = pj_grid();
    }
    else if (name == "fig5_roc_detectors")
    {
        f.table = TableKind::Roc;
        f.base.detector.selection = DetectorSelection::Both;
        f.base.jammer.l_p = 25;
        f.sweep.deployment = {kCentralized, kPartial, kFull};
    }
    else if (name == "fig6_roc_antennas")
    {
        f.table = TableKind::Roc;
        f.base = with_deployment(f.base, kFull);
        f.base.detector.selection = DetectorSelection::Rlrt;
        f.sweep.n_ant_total = {16, 64};
        f.sweep.l_p = {5, 25};
    }
    else if (name == "fig7_roc_blanking")
    {
        f.table = TableKind::Roc;
        f.base = with_deployment(scenario_preset("B100"), kFull);
        f.base.detector.selection = DetectorSelection::Rlrt;
        f.sweep.m_p = {5, 85};
        f.sweep.l_p = {5, 25, 125};
    }
    else if (name == "fig8_bler_mitigation")
    {
        f.table = TableKind::BlerVsPj;
        f.base = with_deployment(scenario_preset("B100"), kCentralized);
        f.base.detector.selection = DetectorSelection::None;
        f.base.jammer.l_p = 25;
        f.sweep.m_p = {25, 85, 105};
        f.sweep.scheduling = {SchedulingPolicy::Random, SchedulingPolicy::Sequential};
        f.sweep.p_j_dbm = pj_grid();
    }
    else
    {
        throw std::invalid_argument(fmt::format("unknown figure preset '{}'", name));
    }
    return f;
}

}  // namespace

std::string table_file(TableKind kind)
{
    switch (kind)
    {
    case TableKind::FaCalibration: return "fa_calibration.csv";
    case TableKind::SinrCdf: return "sinr_cdf.csv";
    case TableKind::BlerVsPj: return "bler_vs_pj.csv";
    case TableKind::Roc: return "roc.csv";
    }
    throw std::invalid_argument("unknown table kind");
}

std::vector<std::string> figure_preset_names()
{
    return {"fig2_fa_calibration", "fig3_sinr_cdf",     "fig4_bler_vs_pj",     "fig5_roc_detectors",
            "fig6_roc_antennas",   "fig7_roc_blanking", "fig8_bler_mitigation"};
}

bool is_figure_preset(const std::string& name)
{
    const auto names = figure_preset_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

FigurePreset figure_preset(const std::string& name)
{
    return make(name);
}

std::vector<double> sinr_cdf_grid()
{
    std::vector<double> grid;
    for (int i = -160; i <= 200; ++i)
        grid.push_back(0.5 * i);
    return grid;
}

}  // namespace jamsim
