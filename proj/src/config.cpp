#include "jamsim/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace jamsim {
namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& key, const std::string& v)
{
    try
    {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos == v.size())
            return d;
    }
    catch (const std::exception&)
    {
    }
    throw ConfigError(fmt::format("{}: '{}' is not a number", key, v));
}

long long to_integer(const std::string& key, const std::string& v)
{
    long long out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw ConfigError(fmt::format("{}: '{}' is not an integer", key, v));
    return out;
}

int to_int(const std::string& key, const std::string& v)
{
    const auto x = to_integer(key, v);
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
        throw ConfigError(fmt::format("{}: '{}' out of range", key, v));
    return static_cast<int>(x);
}

bool to_bool(const std::string& key, const std::string& v)
{
    if (v == "true" || v == "1" || v == "yes" || v == "on")
        return true;
    if (v == "false" || v == "0" || v == "no" || v == "off")
        return false;
    throw ConfigError(fmt::format("{}: '{}' is not a boolean", key, v));
}

std::string num(double v)
{
    return fmt::format("{}", v);
}

std::string flag(bool b)
{
    return b ? "true" : "false";
}

template <typename F>
auto translate(const std::string& key, F&& f)
{
    try
    {
        return f();
    }
    catch (const std::invalid_argument& e)
    {
        throw ConfigError(fmt::format("{}: {}", key, e.what()));
    }
}

struct Field
{
    std::string key;
    std::function<void(ScenarioConfig&, const std::string&)> set;
    std::function<std::string(const ScenarioConfig&)> get;
};

#define JAMSIM_DOUBLE_FIELD(KEY, MEMBER)                                                             \
    Field                                                                                            \
    {                                                                                                \
        KEY, [](ScenarioConfig& c, const std::string& v) { c.MEMBER = to_double(KEY, v); },          \
            [](const ScenarioConfig& c) { return num(c.MEMBER); }                                    \
    }
#define JAMSIM_INT_FIELD(KEY, MEMBER)                                                                \
    Field                                                                                            \
    {                                                                                                \
        KEY, [](ScenarioConfig& c, const std::string& v) { c.MEMBER = to_int(KEY, v); },             \
            [](const ScenarioConfig& c) { return fmt::format("{}", c.MEMBER); }                      \
    }
#define JAMSIM_BOOL_FIELD(KEY, MEMBER)                                                               \
    Field                                                                                            \
    {                                                                                                \
        KEY, [](ScenarioConfig& c, const std::string& v) { c.MEMBER = to_bool(KEY, v); },            \
            [](const ScenarioConfig& c) { return flag(c.MEMBER); }                                   \
    }

// Deployment keys are collected separately because kind, AP count and
// antenna count must be validated together.
const std::vector<std::string> kDeploymentKeys = {"deployment.kind", "deployment.n_ap",
                                                  "deployment.n_ant_total"};

const std::vector<Field>& fields()
{
    static const std::vector<Field> table = {
        JAMSIM_INT_FIELD("n_ue", n_ue),
        JAMSIM_DOUBLE_FIELD("ue.power_dbm", ue_power_dbm),
        JAMSIM_DOUBLE_FIELD("noise_figure_db", noise_figure_db),
        JAMSIM_DOUBLE_FIELD("numerology.subcarrier_spacing_hz", numerology.subcarrier_spacing),
        JAMSIM_INT_FIELD("numerology.n_sc_per_prb", numerology.n_sc_per_prb),
        JAMSIM_INT_FIELD("numerology.n_symb_per_slot", numerology.n_symb_per_slot),
        JAMSIM_DOUBLE_FIELD("numerology.total_bandwidth_hz", numerology.total_bandwidth),
        JAMSIM_DOUBLE_FIELD("numerology.guard_fraction", numerology.guard_fraction),
        JAMSIM_DOUBLE_FIELD("numerology.overhead", numerology.overhead),
        JAMSIM_INT_FIELD("numerology.packet_size_bits", numerology.packet_size_bits),
        JAMSIM_DOUBLE_FIELD("channel.carrier_ghz", channel.carrier_ghz),
        JAMSIM_DOUBLE_FIELD("channel.element_spacing", channel.element_spacing),
        JAMSIM_DOUBLE_FIELD("channel.pl_los_a", channel.large_scale.pl_los_a),
        JAMSIM_DOUBLE_FIELD("channel.pl_los_b", channel.large_scale.pl_los_b),
        JAMSIM_DOUBLE_FIELD("channel.pl_los_c", channel.large_scale.pl_los_c),
        JAMSIM_DOUBLE_FIELD("channel.pl_nlos_a", channel.large_scale.pl_nlos_a),
        JAMSIM_DOUBLE_FIELD("channel.pl_nlos_b", channel.large_scale.pl_nlos_b),
        JAMSIM_DOUBLE_FIELD("channel.pl_nlos_c", channel.large_scale.pl_nlos_c),
        JAMSIM_DOUBLE_FIELD("channel.sigma_sf_los", channel.large_scale.sigma_sf_los),
        JAMSIM_DOUBLE_FIELD("channel.sigma_sf_nlos", channel.large_scale.sigma_sf_nlos),
        JAMSIM_DOUBLE_FIELD("channel.los_decay_distance", channel.large_scale.los_decay_distance),
        JAMSIM_DOUBLE_FIELD("channel.rician_k_los_db", channel.large_scale.rician_k_los_db),
        JAMSIM_DOUBLE_FIELD("channel.spatial_corr_coeff", channel.large_scale.spatial_corr_coeff),
        Field{"jammer.power_dbm",
              [](ScenarioConfig& c, const std::string& v) {
                  if (v == "off" || v == "none")
                      c.jammer.power_dbm.reset();
                  else
                      c.jammer.power_dbm = to_double("jammer.power_dbm", v);
              },
              [](const ScenarioConfig& c) {
                  return c.jammer.power_dbm ? num(*c.jammer.power_dbm) : std::string("off");
              }},
        JAMSIM_INT_FIELD("jammer.l_p", jammer.l_p),
        JAMSIM_DOUBLE_FIELD("jammer.perimeter_offset", jammer.perimeter_offset),
        JAMSIM_DOUBLE_FIELD("jammer.wall_loss_mean_db", jammer.wall_loss_mean_db),
        JAMSIM_DOUBLE_FIELD("jammer.wall_loss_std_db", jammer.wall_loss_std_db),
        JAMSIM_BOOL_FIELD("jammer.freeze_prbs", jammer.freeze_prbs),
        JAMSIM_INT_FIELD("defense.m_p", defense.m_p),
        Field{"defense.scheduling",
              [](ScenarioConfig& c, const std::string& v) {
                  c.defense.scheduling = translate("defense.scheduling", [&] { return parse_scheduling(v); });
              },
              [](const ScenarioConfig& c) { return to_string(c.defense.scheduling); }},
        Field{"detector",
              [](ScenarioConfig& c, const std::string& v) {
                  c.detector.selection = translate("detector", [&] { return parse_detector_selection(v); });
              },
              [](const ScenarioConfig& c) { return to_string(c.detector.selection); }},
        Field{"detector.pfa_grid",
              [](ScenarioConfig& c, const std::string& v) {
                  std::vector<double> grid;
                  std::stringstream ss(v);
                  for (std::string item; std::getline(ss, item, ',');)
                      grid.push_back(to_double("detector.pfa_grid", trim(item)));
                  if (grid.empty())
                      throw ConfigError("detector.pfa_grid: empty grid");
                  c.detector.pfa_grid = std::move(grid);
              },
              [](const ScenarioConfig& c) { return fmt::format("{}", fmt::join(c.detector.pfa_grid, ",")); }},
        JAMSIM_INT_FIELD("detector.slots_per_decision", detector.slots_per_decision),
        JAMSIM_BOOL_FIELD("detector.raw_samples", detector.raw_samples),
        JAMSIM_INT_FIELD("link.pilot_length", link.pilot_length),
        JAMSIM_DOUBLE_FIELD("link.eesm_beta", link.eesm_beta),
        JAMSIM_BOOL_FIELD("link.common_z", link.common_z),
        JAMSIM_INT_FIELD("mc.n_drops", mc.n_drops),
        JAMSIM_INT_FIELD("mc.n_slots_per_drop", mc.n_slots_per_drop),
        Field{"mc.seed",
              [](ScenarioConfig& c, const std::string& v) {
                  std::uint64_t s = 0;
                  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), s);
                  if (ec != std::errc() || ptr != v.data() + v.size())
                      throw ConfigError(fmt::format("mc.seed: '{}' is not an unsigned integer", v));
                  c.mc.seed = s;
              },
              [](const ScenarioConfig& c) { return fmt::format("{}", c.mc.seed); }},
    };
    return table;
}

#undef JAMSIM_DOUBLE_FIELD
#undef JAMSIM_INT_FIELD
#undef JAMSIM_BOOL_FIELD

}  // namespace

KeyValues parse_config_text(const std::string& text)
{
    KeyValues out;
    std::string section;
    std::istringstream in(text);
    int line_no = 0;
    for (std::string raw; std::getline(in, raw);)
    {
        ++line_no;
        const auto cut = raw.find_first_of("#;");
        const std::string line = trim(cut == std::string::npos ? raw : raw.substr(0, cut));
        if (line.empty())
            continue;
        if (line.front() == '[')
        {
            if (line.back() != ']')
                throw ConfigError(fmt::format("line {}: unterminated section header", line_no));
            section = trim(std::string_view(line).substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(fmt::format("line {}: expected 'key = value'", line_no));
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (key.empty())
            throw ConfigError(fmt::format("line {}: empty key", line_no));
        const std::string full = section.empty() ? key : section + "." + key;
        if (!out.emplace(full, value).second)
            throw ConfigError(fmt::format("line {}: duplicate key '{}'", line_no, full));
    }
    return out;
}

KeyValues read_config_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError(fmt::format("cannot read config file '{}'", path.string()));
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::pair<std::string, std::string> parse_override(const std::string& text)
{
    const auto eq = text.find('=');
    if (eq == std::string::npos)
        throw ConfigError(fmt::format("override '{}' is not of the form key=value", text));
    auto key = trim(std::string_view(text).substr(0, eq));
    auto value = trim(std::string_view(text).substr(eq + 1));
    if (key.empty())
        throw ConfigError(fmt::format("override '{}' has an empty key", text));
    return {key, value};
}

std::vector<std::string> known_config_keys()
{
    std::vector<std::string> keys = {"preset"};
    keys.insert(keys.end(), kDeploymentKeys.begin(), kDeploymentKeys.end());
    for (const auto& f : fields())
        keys.push_back(f.key);
    return keys;
}

ScenarioConfig apply_config(const ScenarioConfig& base, const KeyValues& values)
{
    for (const auto& [k, v] : values)
    {
        const auto keys = known_config_keys();
        if (std::find(keys.begin(), keys.end(), k) == keys.end())
            throw ConfigError(fmt::format("unknown config key '{}'", k));
    }

    ScenarioConfig c = base;
    if (auto it = values.find("preset"); it != values.end() && it->second != base.preset)
    {
        const auto p = translate("preset", [&] { return scenario_preset(it->second); });
        c.preset = p.preset;
        c.numerology = p.numerology;
        c.n_ue = p.n_ue;
    }

    for (const auto& f : fields())
        if (auto it = values.find(f.key); it != values.end())
            f.set(c, it->second);

    const bool touches_deployment = std::any_of(kDeploymentKeys.begin(), kDeploymentKeys.end(),
                                                [&](const auto& k) { return values.count(k) > 0; });
    if (touches_deployment)
    {
        DeploymentKind kind = c.deployment.kind;
        if (auto it = values.find("deployment.kind"); it != values.end())
            kind = translate("deployment.kind", [&] { return parse_deployment_kind(it->second); });
        int n_ap = default_ap_count(kind).value_or(c.deployment.n_ap);
        if (auto it = values.find("deployment.n_ap"); it != values.end())
            n_ap = to_int("deployment.n_ap", it->second);
        int n_ant = c.deployment.n_ant_total;
        if (auto it = values.find("deployment.n_ant_total"); it != values.end())
            n_ant = to_int("deployment.n_ant_total", it->second);
        c.deployment = translate("deployment", [&] {
            return Deployment::make(kind, n_ap, n_ant, c.deployment.hall);
        });
    }

    translate("config", [&] {
        c.validate();
        return 0;
    });
    return c;
}

KeyValues to_key_values(const ScenarioConfig& c)
{
    KeyValues out;
    out["preset"] = c.preset;
    out["deployment.kind"] = to_string(c.deployment.kind);
    out["deployment.n_ap"] = fmt::format("{}", c.deployment.n_ap);
    out["deployment.n_ant_total"] = fmt::format("{}", c.deployment.n_ant_total);
    for (const auto& f : fields())
        out[f.key] = f.get(c);
    return out;
}

}  // namespace jamsim
