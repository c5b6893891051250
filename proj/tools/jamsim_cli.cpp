// Command-line front end: runs a figure preset or a single scenario and
// writes CSV tables plus a manifest under <out-dir>/<name>/.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "jamsim/config.hpp"
#include "jamsim/presets.hpp"
#include "jamsim/report.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitFailedSlots = 3;

std::string default_out_dir()
{
    const char* env = std::getenv("JAMSIM_OUT_DIR");
    return env && *env ? env : "out";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Monte Carlo simulator of a jammed indoor-factory uplink"};

    std::string preset;
    std::optional<std::string> config_file;
    std::vector<std::string> overrides;
    std::optional<std::uint64_t> seed;
    std::optional<int> drops, slots;
    int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::string out_dir = default_out_dir();
    bool verbose_records = false;
    bool list_presets = false;
    bool print_config = false;

    app.add_option("--preset", preset, "Figure preset (fig2_..fig8_) or scenario preset (B20, B100)");
    app.add_option("--config", config_file, "Config file (key = value, [section] headers)")
        ->check(CLI::ExistingFile);
    app.add_option("--override", overrides, "Config override key=value (repeatable)");
    app.add_option("--seed", seed, "Master seed (mc.seed)");
    app.add_option("--drops", drops, "Number of drops (mc.n_drops)")->check(CLI::PositiveNumber);
    app.add_option("--slots", slots, "Slots per drop (mc.n_slots_per_drop)")->check(CLI::PositiveNumber);
    app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--out-dir", out_dir, "Output root (default $JAMSIM_OUT_DIR or ./out)");
    app.add_flag("--verbose-records", verbose_records, "Also write per-slot records and detector statistics");
    app.add_flag("--list-presets", list_presets, "List figure presets and exit");
    app.add_flag("--print-config", print_config, "Print the resolved configuration and exit");

    CLI11_PARSE(app, argc, argv);

    if (list_presets)
    {
        for (const auto& n : jamsim::figure_preset_names())
            fmt::print("{}\n", n);
        return 0;
    }

    try
    {
        std::optional<jamsim::FigurePreset> figure;
        jamsim::ScenarioConfig base;
        if (jamsim::is_figure_preset(preset))
        {
            figure = jamsim::figure_preset(preset);
            base = figure->base;
        }
        else
        {
            base = jamsim::scenario_preset(preset.empty() ? "B20" : preset);
        }

        jamsim::KeyValues values;
        if (config_file)
            values = jamsim::read_config_file(*config_file);
        for (const auto& o : overrides)
        {
            auto [k, v] = jamsim::parse_override(o);
            values[k] = v;
        }
        if (seed)
            values["mc.seed"] = std::to_string(*seed);
        if (drops)
            values["mc.n_drops"] = std::to_string(*drops);
        if (slots)
            values["mc.n_slots_per_drop"] = std::to_string(*slots);
        base = jamsim::apply_config(base, values);

        if (print_config)
        {
            for (const auto& [k, v] : jamsim::to_key_values(base))
                fmt::print("{} = {}\n", k, v);
            return 0;
        }

        jamsim::ReportOptions opt;
        opt.out_dir = out_dir;
        opt.threads = threads;
        opt.verbose_records = verbose_records;
        opt.config_file = config_file;
        opt.overrides = overrides;
        opt.log = [](const std::string& msg) { std::cerr << "jamsim: " << msg << '\n'; };

        jamsim::ReportResult res;
        if (figure)
        {
            figure->base = base;
            res = jamsim::write_figure(*figure, opt);
        }
        else
        {
            std::string name = preset.empty() ? "custom" : preset;
            if (config_file && preset.empty())
                name = std::filesystem::path(*config_file).stem().string();
            res = jamsim::write_scenario(name, base, opt);
        }
        for (const auto& f : res.files)
            fmt::print("{}\n", f.string());
        if (res.failed_slots > 0)
        {
            std::cerr << fmt::format("jamsim: {} slot(s) failed numerically\n", res.failed_slots);
            return kExitFailedSlots;
        }
    }
    catch (const jamsim::ConfigError& e)
    {
        std::cerr << "jamsim: config error: " << e.what() << '\n';
        return kExitConfig;
    }
    catch (const std::invalid_argument& e)
    {
        std::cerr << "jamsim: invalid configuration: " << e.what() << '\n';
        return kExitConfig;
    }
    catch (const std::exception& e)
    {
        std::cerr << "jamsim: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
