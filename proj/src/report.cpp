#include "jamsim/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

#include "jamsim/config.hpp"

#ifndef JAMSIM_GIT_DESCRIBE
#define JAMSIM_GIT_DESCRIBE "unknown"
#endif

namespace jamsim {
namespace {

namespace fs = std::filesystem;

std::string render(const Table::Cell& c)
{
    if (const auto* s = std::get_if<std::string>(&c))
        return *s;
    if (const auto* l = std::get_if<long>(&c))
        return fmt::format("{}", *l);
    const double d = std::get<double>(c);
    if (std::isinf(d))
        return d > 0 ? "inf" : "-inf";
    return fmt::format("{:.6g}", d);
}

// Strings sort before numbers; numbers compare numerically.
bool cell_less(const Table::Cell& a, const Table::Cell& b)
{
    auto num = [](const Table::Cell& c) {
        if (const auto* l = std::get_if<long>(&c))
            return static_cast<double>(*l);
        return std::get<double>(c);
    };
    const bool sa = std::holds_alternative<std::string>(a);
    const bool sb = std::holds_alternative<std::string>(b);
    if (sa != sb)
        return sa;
    if (sa)
        return std::get<std::string>(a) < std::get<std::string>(b);
    return num(a) < num(b);
}

struct PointKeys
{
    std::string deployment;
    long n_ant;
    long m_p;
    long l_p;
    std::string scheduling;
    double p_j;
};

PointKeys keys_of(const ScenarioConfig& c)
{
    return {to_string(c.deployment.kind), c.deployment.n_ant_total, c.defense.m_p, c.jammer.l_p,
            to_string(c.defense.scheduling), pj_cell(c.jammer.power_dbm)};
}

std::vector<DetectorKind> enabled_detectors(DetectorSelection s)
{
    switch (s)
    {
    case DetectorSelection::None: return {};
    case DetectorSelection::Glrt: return {DetectorKind::Glrt};
    case DetectorSelection::Rlrt: return {DetectorKind::Rlrt};
    case DetectorSelection::Both: return {DetectorKind::Glrt, DetectorKind::Rlrt};
    }
    return {};
}

Table sinr_table()
{
    return Table({"deployment", "p_j_dbm", "l_p", "sinr_db", "cdf"}, 3);
}

Table bler_table()
{
    return Table({"deployment", "l_p", "m_p", "scheduling", "p_j_dbm", "mean_bler"}, 5);
}

Table roc_table_csv()
{
    return Table({"detector", "deployment", "n_ant", "m_p", "l_p", "target_pfa", "empirical_pfa", "p_md"}, 5);
}

void add_sinr_rows(Table& t, const PointKeys& k, const RunResult& r)
{
    const auto values = r.prb_sinr_db();
    const auto grid = sinr_cdf_grid();
    for (const auto& p : aggregate_cdf(values, grid))
        t.add({k.deployment, k.p_j, k.l_p, p.value, p.cdf});
}

void add_bler_row(Table& t, const PointKeys& k, const RunResult& r)
{
    t.add({k.deployment, k.l_p, k.m_p, k.scheduling, k.p_j, summarize_bler(r).mean});
}

void add_roc_rows(Table& t, const PointKeys& k, const ScenarioConfig& c, const RunResult& r)
{
    for (auto kind : enabled_detectors(c.detector.selection))
    {
        const auto roc = roc_table(r.detections, kind, c.detector.pfa_grid, r.n_re_per_decision, r.n_ant,
                                   r.noise_var_per_re);
        for (const auto& p : roc)
            t.add({to_string(kind), k.deployment, k.n_ant, k.m_p, k.l_p, p.target_pfa, p.empirical_pfa,
                   p.p_md});
    }
}

class RecordWriter
{
  public:
    RecordWriter(const fs::path& dir, bool enabled)
    {
        if (!enabled)
            return;
        slots_.open(dir / "records.csv");
        detections_.open(dir / "detections.csv");
        if (!slots_ || !detections_)
            throw std::runtime_error("cannot open record files in " + dir.string());
        const char* keys = "deployment,n_ant,m_p,l_p,scheduling,p_j_dbm";
        slots_ << keys << ",drop,slot,ue,sinr_eff_db,bler\n";
        detections_ << keys << ",drop,first_slot,n_blanked_jammed,glrt_h0,glrt_h1,rlrt_h0,rlrt_h1\n";
    }

    void add(const PointKeys& k, const RunResult& r)
    {
        if (!slots_.is_open())
            return;
        const auto prefix = fmt::format("{},{},{},{},{},{}", k.deployment, k.n_ant, k.m_p, k.l_p,
                                        k.scheduling, render(k.p_j));
        for (const auto& s : r.slots)
            for (std::size_t u = 0; u < s.ue.size(); ++u)
                slots_ << fmt::format("{},{},{},{},{:.6g},{:.6g}\n", prefix, s.drop, s.slot, u,
                                      s.ue[u].sinr_eff_db, s.ue[u].bler);
        for (const auto& d : r.detections)
            detections_ << fmt::format("{},{},{},{},{:.9g},{:.9g},{:.9g},{:.9g}\n", prefix, d.drop,
                                       d.first_slot, d.n_blanked_jammed, d.glrt_h0, d.glrt_h1, d.rlrt_h0,
                                       d.rlrt_h1);
    }

    std::vector<fs::path> files(const fs::path& dir) const
    {
        if (!slots_.is_open())
            return {};
        return {dir / "records.csv", dir / "detections.csv"};
    }

  private:
    std::ofstream slots_;
    std::ofstream detections_;
};

nlohmann::json sweep_json(const SweepGrid& g)
{
    nlohmann::json j = nlohmann::json::object();
    if (!g.deployment.empty())
    {
        auto& a = j["deployment.kind"] = nlohmann::json::array();
        for (auto d : g.deployment)
            a.push_back(to_string(d));
    }
    if (!g.n_ant_total.empty())
        j["deployment.n_ant_total"] = g.n_ant_total;
    if (!g.scheduling.empty())
    {
        auto& a = j["defense.scheduling"] = nlohmann::json::array();
        for (auto s : g.scheduling)
            a.push_back(to_string(s));
    }
    if (!g.m_p.empty())
        j["defense.m_p"] = g.m_p;
    if (!g.l_p.empty())
        j["jammer.l_p"] = g.l_p;
    if (!g.p_j_dbm.empty())
    {
        auto& a = j["jammer.power_dbm"] = nlohmann::json::array();
        for (const auto& p : g.p_j_dbm)
            a.push_back(p ? nlohmann::json(*p) : nlohmann::json("off"));
    }
    return j;
}

void write_manifest(const fs::path& dir, const std::string& name, const ScenarioConfig& base,
                    const nlohmann::json& sweep, const ReportOptions& opt, const ReportResult& res,
                    double wall_time)
{
    nlohmann::json m;
    m["preset"] = name;
    m["seed"] = base.mc.seed;
    m["git_describe"] = JAMSIM_GIT_DESCRIBE;
    m["wall_time_s"] = wall_time;
    m["threads"] = opt.threads;
    m["config_file"] = opt.config_file ? nlohmann::json(*opt.config_file) : nlohmann::json(nullptr);
    m["overrides"] = opt.overrides;
    m["config"] = to_key_values(base);
    m["sweep"] = sweep;
    m["failed_slots"] = res.failed_slots;
    auto& files = m["files"] = nlohmann::json::array();
    for (const auto& f : res.files)
        files.push_back(f.filename().string());
    std::ofstream out(dir / "manifest.json");
    out << m.dump(2) << '\n';
    if (!out)
        throw std::runtime_error("cannot write manifest in " + dir.string());
}

void note(const ReportOptions& opt, const std::string& msg)
{
    if (opt.log)
        opt.log(msg);
}

ReportResult write_calibration(const FigurePreset& fig, const ReportOptions& opt, const fs::path& dir)
{
    ReportResult res;
    res.dir = dir;
    Table t({"detector", "n_re", "target_pfa", "empirical_pfa", "trials"}, 2);
    const auto& cal = fig.calibration;
    const long trials = fig.calibration_trials();
    for (long n_re : cal.n_re)
    {
        note(opt, fmt::format("calibration: n_ant {} n_re {} ({} trials)", cal.n_ant, n_re, trials));
        const auto stats = noise_only_statistics(cal.n_ant, n_re, trials, fig.base.mc.seed, opt.threads);
        for (auto kind : {DetectorKind::Glrt, DetectorKind::Rlrt})
        {
            for (double pfa : cal.target_pfa)
            {
                const double thr = detector_threshold(kind, pfa, n_re, cal.n_ant, 1.0);
                const auto hits = std::count_if(stats.begin(), stats.end(), [&](const NoiseTrial& s) {
                    return (kind == DetectorKind::Glrt ? s.glrt : s.rlrt) > thr;
                });
                t.add({to_string(kind), n_re, pfa, static_cast<double>(hits) / static_cast<double>(trials),
                       trials});
            }
        }
    }
    t.write(dir / table_file(TableKind::FaCalibration));
    res.files.push_back(dir / table_file(TableKind::FaCalibration));
    return res;
}

}  // namespace

Table::Table(std::vector<std::string> header, std::size_t n_keys)
    : header_(std::move(header)), n_keys_(n_keys)
{
    if (n_keys_ > header_.size())
        throw std::invalid_argument("Table: more key columns than columns");
}

void Table::add(std::vector<Cell> row)
{
    if (row.size() != header_.size())
        throw std::invalid_argument(
            fmt::format("Table: row has {} cells, header has {}", row.size(), header_.size()));
    rows_.push_back(std::move(row));
}

std::string Table::to_csv() const
{
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ra = rows_[a];
        const auto& rb = rows_[b];
        for (std::size_t k = 0; k < n_keys_; ++k)
        {
            if (cell_less(ra[k], rb[k]))
                return true;
            if (cell_less(rb[k], ra[k]))
                return false;
        }
        return false;
    });
    std::string out = fmt::format("{}\n", fmt::join(header_, ","));
    for (auto i : order)
    {
        const auto& row = rows_[i];
        for (std::size_t c = 0; c < row.size(); ++c)
        {
            if (c > 0)
                out += ',';
            out += render(row[c]);
        }
        out += '\n';
    }
    return out;
}

void Table::write(const fs::path& path) const
{
    std::ofstream out(path, std::ios::binary);
    out << to_csv();
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
}

double pj_cell(const std::optional<double>& p_j_dbm)
{
    return p_j_dbm ? *p_j_dbm : -std::numeric_limits<double>::infinity();
}

ReportResult write_figure(const FigurePreset& fig, const ReportOptions& opt)
{
    const auto start = std::chrono::steady_clock::now();
    const fs::path dir = opt.out_dir / fig.name;
    fs::create_directories(dir);

    ReportResult res;
    if (fig.table == TableKind::FaCalibration)
    {
        res = write_calibration(fig, opt, dir);
    }
    else
    {
        res.dir = dir;
        Table table = fig.table == TableKind::SinrCdf  ? sinr_table()
                      : fig.table == TableKind::Roc    ? roc_table_csv()
                                                       : bler_table();
        RecordWriter records(dir, opt.verbose_records);
        const auto points = expand(fig.base, fig.sweep);
        for (std::size_t i = 0; i < points.size(); ++i)
        {
            const auto& c = points[i];
            const auto k = keys_of(c);
            note(opt, fmt::format("[{}/{}] {} n_ant={} m_p={} l_p={} {} p_j={}", i + 1, points.size(),
                                  k.deployment, k.n_ant, k.m_p, k.l_p, k.scheduling, render(k.p_j)));
            const auto r = run({c, opt.threads});
            res.failed_slots += r.failed_slots;
            records.add(k, r);
            switch (fig.table)
            {
            case TableKind::SinrCdf: add_sinr_rows(table, k, r); break;
            case TableKind::BlerVsPj: add_bler_row(table, k, r); break;
            case TableKind::Roc: add_roc_rows(table, k, c, r); break;
            case TableKind::FaCalibration: break;
            }
        }
        table.write(dir / table_file(fig.table));
        res.files.push_back(dir / table_file(fig.table));
        for (auto& f : records.files(dir))
            res.files.push_back(f);
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_manifest(dir, fig.name, fig.base, sweep_json(fig.sweep), opt, res, wall);
    return res;
}

ReportResult write_scenario(const std::string& name, const ScenarioConfig& config, const ReportOptions& opt)
{
    const auto start = std::chrono::steady_clock::now();
    const fs::path dir = opt.out_dir / name;
    fs::create_directories(dir);

    ReportResult res;
    res.dir = dir;
    const auto k = keys_of(config);
    note(opt, fmt::format("running {} ({} drops x {} slots)", name, config.mc.n_drops,
                          config.mc.n_slots_per_drop));
    const auto r = run({config, opt.threads});
    res.failed_slots = r.failed_slots;

    Table sinr = sinr_table();
    add_sinr_rows(sinr, k, r);
    sinr.write(dir / table_file(TableKind::SinrCdf));
    res.files.push_back(dir / table_file(TableKind::SinrCdf));

    Table bler = bler_table();
    add_bler_row(bler, k, r);
    bler.write(dir / table_file(TableKind::BlerVsPj));
    res.files.push_back(dir / table_file(TableKind::BlerVsPj));

    if (config.detector.selection != DetectorSelection::None)
    {
        Table roc = roc_table_csv();
        add_roc_rows(roc, k, config, r);
        roc.write(dir / table_file(TableKind::Roc));
        res.files.push_back(dir / table_file(TableKind::Roc));
    }
    RecordWriter records(dir, opt.verbose_records);
    records.add(k, r);
    for (auto& f : records.files(dir))
        res.files.push_back(f);

    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_manifest(dir, name, config, nlohmann::json::object(), opt, res, wall);
    return res;
}

}  // namespace jamsim
