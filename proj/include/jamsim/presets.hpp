#pragma once

#include <string>
#include <vector>

#include "jamsim/scenario.hpp"
#include "jamsim/sim.hpp"

namespace jamsim {

enum class TableKind
{
    FaCalibration,
    SinrCdf,
    BlerVsPj,
    Roc,
};

/// File name of a table, e.g. "roc.csv".
std::string table_file(TableKind kind);

/// Noise-only calibration sweep (no scenario geometry involved).
struct CalibrationGrid
{
    int n_ant = 16;
    std::vector<long> n_re = {168, 840};
    std::vector<double> target_pfa;
};

/// One figure family: a base scenario, the grid swept over it and the
/// table it produces.
struct FigurePreset
{
    std::string name;
    TableKind table;
    ScenarioConfig base;
    SweepGrid sweep;
    CalibrationGrid calibration;  // only for FaCalibration

    /// Noise-only trials of the calibration preset.
    long calibration_trials() const
    {
        return static_cast<long>(base.mc.n_drops) * base.mc.n_slots_per_drop;
    }
};

std::vector<std::string> figure_preset_names();
bool is_figure_preset(const std::string& name);
FigurePreset figure_preset(const std::string& name);

/// SINR grid on which CDFs are tabulated (dB).
std::vector<double> sinr_cdf_grid();

}  // namespace jamsim
