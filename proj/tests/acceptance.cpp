// End-to-end acceptance checks. One PASS/FAIL line per criterion; the exit
// status is nonzero when any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <fmt/format.h>

#include "jamsim/report.hpp"
#include "jamsim/sim.hpp"
#include "oracles.hpp"

using namespace jamsim;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;
const int g_threads = std::max(1u, std::thread::hardware_concurrency());

void verdict(bool ok, const std::string& name, const std::string& detail)
{
    if (!ok)
        ++g_failures;
    fmt::print("{} {}: {}\n", ok ? "PASS" : "FAIL", name, detail);
    std::fflush(stdout);
}

void note(const std::string& line)
{
    fmt::print("  {}\n", line);
}

double p_md_at(const RunResult& r, DetectorKind kind, double pfa)
{
    const std::vector<double> grid{pfa};
    return roc_table(r.detections, kind, grid, r.n_re_per_decision, r.n_ant, r.noise_var_per_re)[0].p_md;
}

// ---------------------------------------------------------------------------

void fa_calibration()
{
    const auto fig = figure_preset("fig2_fa_calibration");
    const long trials = 100000;
    bool rlrt_ok = true, glrt_ok = true;
    double worst_ratio = 1.0, worst_z = 0.0;
    for (long n_re : fig.calibration.n_re)
    {
        const auto stats = noise_only_statistics(fig.calibration.n_ant, n_re, trials, fig.base.mc.seed, g_threads);
        for (double pfa : fig.calibration.target_pfa)
        {
            const double tg = glrt_threshold(pfa, n_re, fig.calibration.n_ant, 1.0);
            const double tr = rlrt_threshold(pfa, n_re, fig.calibration.n_ant);
            long fg = 0, fr = 0;
            for (const auto& s : stats)
            {
                fg += s.glrt > tg;
                fr += s.rlrt > tr;
            }
            const double eg = static_cast<double>(fg) / trials;
            const double er = static_cast<double>(fr) / trials;
            const double sd = std::sqrt(pfa * (1 - pfa) / trials);
            const double ratio = std::max(er / pfa, pfa / er);
            const double z = std::fabs(eg - pfa) / sd;
            worst_ratio = std::max(worst_ratio, ratio);
            worst_z = std::max(worst_z, z);
            rlrt_ok = rlrt_ok && er > 0 && ratio <= 2.0;
            glrt_ok = glrt_ok && z <= 3.0;
            note(fmt::format("n_re={} target={:.0e} rlrt={:.4g} glrt={:.4g}", n_re, pfa, er, eg));
        }
    }
    verdict(rlrt_ok && glrt_ok, "false-alarm calibration",
            fmt::format("worst RLRT ratio {:.3f} (limit 2), worst GLRT deviation {:.2f} sigma (limit 3)",
                        worst_ratio, worst_z));
}

void bler_degradation()
{
    auto c = scenario_preset("B20");
    c.detector.selection = DetectorSelection::None;
    c.jammer.l_p = 25;
    c.jammer.power_dbm = 20.0;
    const auto low = summarize_bler(run({c, g_threads}));
    c.jammer.power_dbm = 60.0;
    const auto high = summarize_bler(run({c, g_threads}));
    const double decades = std::log10(high.mean) - std::log10(low.mean);
    const bool rise = decades >= 3.0;
    const bool low_ok = low.mean >= 1e-7 && low.mean <= 1e-5;
    const bool high_ok = high.mean >= 1e-3 && high.mean <= 1e-1;
    note(fmt::format("rise of at least 3 decades: {}", rise ? "yes" : "no"));
    note(fmt::format("20 dBm endpoint in [1e-7, 1e-5]: {}", low_ok ? "yes" : "no"));
    note(fmt::format("60 dBm endpoint in [1e-3, 1e-1]: {}", high_ok ? "yes" : "no"));
    verdict(rise && low_ok && high_ok, "BLER degradation under jamming",
            fmt::format("mean BLER {:.3g} at 20 dBm, {:.3g} at 60 dBm ({:.1f} decades)", low.mean, high.mean,
                        decades));
}

void detector_ordering()
{
    auto fig = figure_preset("fig5_roc_detectors");
    fig.base.mc.n_drops = 100;
    fig.base.deployment = Deployment::make(fig.base.deployment.kind, fig.base.deployment.n_ap, 64);
    fig.base.jammer.power_dbm = 60.0;
    std::map<DeploymentKind, std::pair<double, double>> md;  // glrt, rlrt
    for (const auto& c : expand(fig.base, fig.sweep))
    {
        const auto r = run({c, g_threads});
        md[c.deployment.kind] = {p_md_at(r, DetectorKind::Glrt, 1e-2), p_md_at(r, DetectorKind::Rlrt, 1e-2)};
        note(fmt::format("{}: P_MD glrt={:.4g} rlrt={:.4g}", to_string(c.deployment.kind),
                         md[c.deployment.kind].first, md[c.deployment.kind].second));
    }
    const auto& one = md[DeploymentKind::Centralized];
    const auto& four = md[DeploymentKind::PartiallyDistributed];
    const auto& sixteen = md[DeploymentKind::FullyDistributed];
    bool ok = true;
    for (const auto& [k, v] : md)
        ok = ok && v.second <= v.first;
    ok = ok && sixteen.first <= four.first && four.first <= one.first;
    ok = ok && sixteen.second <= four.second && four.second <= one.second;
    verdict(ok, "detector and deployment ordering", "RLRT <= GLRT per deployment; 16 <= 4 <= 1 APs per detector");
}

void intersection_limited()
{
    auto c = scenario_preset("B20");
    c.jammer.l_p = 5;
    c.defense.m_p = 5;
    c.jammer.power_dbm = 60.0;
    const double pfa = 1e-2;
    const auto r = run({c, g_threads});
    const double p0 = oracle::no_intersection_probability(c.n_prb(), c.defense.m_p, c.jammer.l_p);
    bool ok = true;
    for (auto kind : {DetectorKind::Glrt, DetectorKind::Rlrt})
    {
        const double thr = detector_threshold(kind, pfa, r.n_re_per_decision, r.n_ant, r.noise_var_per_re);
        double hit = 0.0, n_int = 0.0;
        for (const auto& d : r.detections)
            if (d.n_blanked_jammed > 0)
            {
                n_int += 1.0;
                hit += d.h1(kind) > thr ? 1.0 : 0.0;
            }
        const double d_int = n_int > 0 ? hit / n_int : 0.0;
        const double predicted = p0 * (1 - pfa) + (1 - p0) * (1 - d_int);
        const double measured = p_md_at(r, kind, pfa);
        note(fmt::format("{}: P_MD {:.4f}, predicted {:.4f} (P(no intersection) {:.4f}, detection on "
                         "intersecting slots {:.4f}, observed intersection-free fraction {:.4f})",
                         to_string(kind), measured, predicted, p0, d_int,
                         1.0 - n_int / static_cast<double>(r.detections.size())));
        ok = ok && std::fabs(measured - predicted) <= 0.05;
    }
    verdict(ok, "narrow-band jammer, miss rate limited by intersection", "|P_MD - predicted| <= 0.05");
}

void massive_blanking()
{
    auto fig = figure_preset("fig7_roc_blanking");
    fig.base.mc.n_drops = 40;
    fig.base.mc.n_slots_per_drop = 25;
    std::map<std::pair<int, int>, double> md;  // (l_p, m_p)
    for (const auto& c : expand(fig.base, fig.sweep))
    {
        const auto r = run({c, g_threads});
        md[{c.jammer.l_p, c.defense.m_p}] = p_md_at(r, DetectorKind::Rlrt, 1e-2);
        note(fmt::format("L_P={} M_P={}: P_MD {:.4g}", c.jammer.l_p, c.defense.m_p,
                         md[{c.jammer.l_p, c.defense.m_p}]));
    }
    bool ok = true;
    std::string failed;
    for (int l_p : fig.sweep.l_p)
        if (!(md[{l_p, 85}] < md[{l_p, 5}]))
        {
            ok = false;
            failed += fmt::format(" L_P={}", l_p);
        }
    verdict(ok, "more blanked PRBs lower the miss rate",
            ok ? "P_MD(M_P=85) < P_MD(M_P=5) for every L_P"
               : "strict ordering violated at" + failed);
}

void mitigation()
{
    auto fig = figure_preset("fig8_bler_mitigation");
    fig.base.mc.n_drops = 40;
    fig.base.mc.n_slots_per_drop = 25;
    // (m_p, scheduling, p_j) -> summary
    std::map<std::tuple<int, SchedulingPolicy, double>, BlerSummary> s;
    for (const auto& c : expand(fig.base, fig.sweep))
        s[{c.defense.m_p, c.defense.scheduling, *c.jammer.power_dbm}] = summarize_bler(run({c, g_threads}));

    bool sched_ok = true;
    std::vector<double> pjs;
    for (const auto& p : fig.sweep.p_j_dbm)
        pjs.push_back(*p);
    for (int m_p : fig.sweep.m_p)
        for (double p : pjs)
        {
            const auto& a = s[{m_p, SchedulingPolicy::Random, p}];
            const auto& b = s[{m_p, SchedulingPolicy::Sequential, p}];
            const double noise = 3.0 * std::hypot(a.std_error, b.std_error);
            if (a.mean > b.mean + noise)
            {
                sched_ok = false;
                note(fmt::format("M_P={} P_J={:g}: random {:.3g} (se {:.2g}) > sequential {:.3g} (se {:.2g})", m_p, p,
                                 a.mean, a.std_error, b.mean, b.std_error));
            }
        }

    // Crossover on random scheduling: more blanking wins somewhere, and at a
    // higher power M_P = 25 wins again.
    std::vector<int> wide_better;  // +1: M_P 85/105 strictly better, -1: M_P 25 strictly better
    for (double p : pjs)
    {
        const double b25 = s[{25, SchedulingPolicy::Random, p}].mean;
        const double bw = std::min(s[{85, SchedulingPolicy::Random, p}].mean, s[{105, SchedulingPolicy::Random, p}].mean);
        wide_better.push_back(bw < b25 ? 1 : (b25 < bw ? -1 : 0));
        note(fmt::format("P_J={:g}: BLER M_P=25 {:.3g}, M_P=85 {:.3g}, M_P=105 {:.3g} (random); "
                         "M_P=25 sequential {:.3g}",
                         p, b25, s[{85, SchedulingPolicy::Random, p}].mean,
                         s[{105, SchedulingPolicy::Random, p}].mean, s[{25, SchedulingPolicy::Sequential, p}].mean));
    }
    bool crossover = false;
    for (std::size_t i = 0; i < wide_better.size(); ++i)
        for (std::size_t j = i + 1; j < wide_better.size(); ++j)
            crossover = crossover || (wide_better[i] == 1 && wide_better[j] == -1);
    note(fmt::format("random <= sequential within 3 sigma everywhere: {}", sched_ok ? "yes" : "no"));
    note(fmt::format("low-power advantage of M_P 85/105 reversing at high power: {}", crossover ? "yes" : "no"));
    verdict(sched_ok && crossover, "mitigation trade-off", "scheduling ordering and blanking crossover");
}

void unit_suite()
{
    const std::string cmd = std::string(JAMSIM_UNIT_TESTS_PATH) + " --minimal > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    verdict(status == 0, "unit-level oracle suite", status == 0 ? "all unit tests pass" : "unit tests failed");
}

std::map<std::string, std::string> csv_files(const fs::path& dir)
{
    std::map<std::string, std::string> out;
    for (const auto& e : fs::recursive_directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".csv")
        {
            std::ifstream in(e.path(), std::ios::binary);
            std::ostringstream s;
            s << in.rdbuf();
            out[fs::relative(e.path(), dir).string()] = s.str();
        }
    return out;
}

void determinism()
{
    const auto root = fs::temp_directory_path() / "jamsim_acceptance_determinism";
    fs::remove_all(root);
    std::map<std::string, std::string> by_threads[2];
    const int threads[2] = {1, 8};
    for (int k = 0; k < 2; ++k)
    {
        ReportOptions o;
        o.out_dir = root / std::to_string(threads[k]);
        o.threads = threads[k];
        o.verbose_records = true;
        for (const char* name : {"fig2_fa_calibration", "fig5_roc_detectors", "fig8_bler_mitigation"})
        {
            auto fig = figure_preset(name);
            fig.base.mc.seed = 7;
            fig.base.mc.n_drops = fig.table == TableKind::FaCalibration ? 20 : 6;
            fig.base.mc.n_slots_per_drop = fig.table == TableKind::FaCalibration ? 100 : 5;
            write_figure(fig, o);
        }
        auto c = scenario_preset("B20");
        c.mc.n_drops = 6;
        c.mc.n_slots_per_drop = 5;
        write_scenario("single", c, o);
        by_threads[k] = csv_files(o.out_dir);
    }
    const bool ok = !by_threads[0].empty() && by_threads[0] == by_threads[1];
    verdict(ok, "thread-count determinism",
            fmt::format("{} CSV files compared between 1 and 8 workers", by_threads[0].size()));
    fs::remove_all(root);
}

}  // namespace

int main()
{
    fmt::print("acceptance run with {} worker(s)\n", g_threads);
    fa_calibration();
    bler_degradation();
    detector_ordering();
    intersection_limited();
    massive_blanking();
    mitigation();
    unit_suite();
    determinism();
    fmt::print("{} criterion(s) failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
