#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jamsim/presets.hpp"

namespace jamsim {

/// A CSV table whose rows are ordered by the first `n_keys` columns; rows
/// with equal keys keep their insertion order.
class Table
{
  public:
    using Cell = std::variant<std::string, double, long>;

    Table(std::vector<std::string> header, std::size_t n_keys);

    void add(std::vector<Cell> row);
    std::size_t size() const { return rows_.size(); }
    const std::vector<std::string>& header() const { return header_; }

    /// Sorted rows, numbers printed with 6 significant digits.
    std::string to_csv() const;
    void write(const std::filesystem::path& path) const;

  private:
    std::vector<std::string> header_;
    std::size_t n_keys_;
    std::vector<std::vector<Cell>> rows_;
};

/// Jammer power cell; a disabled jammer is -inf.
double pj_cell(const std::optional<double>& p_j_dbm);

struct ReportOptions
{
    std::filesystem::path out_dir;
    int threads = 1;
    bool verbose_records = false;
    /// Provenance copied into the manifest.
    std::optional<std::string> config_file;
    std::vector<std::string> overrides;
    std::function<void(const std::string&)> log;
};

struct ReportResult
{
    std::filesystem::path dir;
    std::vector<std::filesystem::path> files;
    int failed_slots = 0;
};

/// Runs every point of a figure preset and writes `<out_dir>/<name>/` with
/// the figure's table and manifest.json.
ReportResult write_figure(const FigurePreset& figure, const ReportOptions& options);

/// Runs a single scenario and writes every table that applies to it.
ReportResult write_scenario(const std::string& name, const ScenarioConfig& config,
                            const ReportOptions& options);

}  // namespace jamsim
