#include "jamsim/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iostream>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

#include "jamsim/channel.hpp"
#include "jamsim/defense.hpp"
#include "jamsim/link.hpp"
#include "jamsim/observation.hpp"

namespace jamsim {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct NumericalFailure : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct DropResult
{
    std::vector<SlotRecord> slots;
    std::vector<DetectionRecord> detections;
    int failed_slots = 0;
};

std::uint64_t blanking_key(std::uint64_t seed)
{
    return mix64(seed ^ 0x626c616e6b696e67ull);
}

class DropSimulator
{
  public:
    DropSimulator(const ScenarioConfig& config, int drop_index)
        : cfg_(config),
          drop_index_(drop_index),
          drop_(make_drop(config, drop_index)),
          channel_(config, drop_),
          sigma_w2_(noise_power_per_prb(config.numerology, config.noise_figure_db)),
          n_re_per_prb_(config.numerology.n_re_per_prb())
    {
    }

    DropResult run()
    {
        DropResult out;
        const auto& det = cfg_.detector;
        std::optional<SampleCovariance> acc_h0, acc_h1;
        int acc_slots = 0, acc_first = 0, acc_intersect = 0;
        for (int slot = 0; slot < cfg_.mc.n_slots_per_drop; ++slot)
        {
            SlotOutput so;
            try
            {
                so = simulate_slot(slot);
            }
            catch (const NumericalFailure& e)
            {
                std::cerr << fmt::format("jamsim: drop {} slot {} aborted: {}\n", drop_index_, slot,
                                         e.what());
                ++out.failed_slots;
                acc_h0.reset();
                acc_h1.reset();
                acc_slots = 0;
                continue;
            }
            out.slots.push_back(std::move(so.record));
            if (det.selection == DetectorSelection::None)
                continue;
            if (acc_slots == 0)
            {
                acc_first = slot;
                acc_intersect = 0;
                acc_h0 = std::move(so.cov_h0);
                acc_h1 = std::move(so.cov_h1);
            }
            else
            {
                acc_h0 = accumulate(*acc_h0, so.cov_h0);
                acc_h1 = accumulate(*acc_h1, so.cov_h1);
            }
            acc_intersect += so.n_blanked_jammed;
            if (++acc_slots == det.slots_per_decision)
            {
                out.detections.push_back(decide(*acc_h0, *acc_h1, acc_first, acc_intersect));
                acc_slots = 0;
            }
        }
        return out;
    }

  private:
    struct SlotOutput
    {
        SlotRecord record;
        SampleCovariance cov_h0;
        SampleCovariance cov_h1;
        int n_blanked_jammed = 0;
    };

    static Drop make_drop(const ScenarioConfig& config, int drop_index)
    {
        auto rng = make_stream(config.mc.seed, StreamPurpose::Drop, static_cast<std::uint64_t>(drop_index));
        return sample_drop(config, rng);
    }

    std::uint64_t u(int v) const { return static_cast<std::uint64_t>(v); }

    std::vector<int> draw_jammed(int slot) const
    {
        if (!cfg_.jammer.power_dbm)
            return {};
        const int stream_slot = cfg_.jammer.freeze_prbs ? 0 : slot + 1;
        auto rng = make_stream(cfg_.mc.seed, StreamPurpose::Jammer, u(drop_index_), u(stream_slot));
        return jammer_prbs(cfg_.jammer.l_p, cfg_.n_prb(), rng);
    }

    SlotOutput simulate_slot(int slot)
    {
        const std::uint64_t seed = cfg_.mc.seed;
        const auto global_slot =
            static_cast<std::uint64_t>(drop_index_) * static_cast<std::uint64_t>(cfg_.mc.n_slots_per_drop) +
            static_cast<std::uint64_t>(slot);
        const SlotPlan plan = make_slot_plan(cfg_, global_slot, blanking_key(seed), draw_jammed(slot));

        ChannelRealization ch;
        ch.large_scale_gain = channel_.gains();
        {
            auto rng = make_stream(seed, StreamPurpose::UeFading, u(drop_index_), u(slot));
            ch.ue.resize(static_cast<std::size_t>(cfg_.n_ue));
            for (int ue = 0; ue < cfg_.n_ue; ++ue)
                for (int prb : plan.prbs_of(ue))
                    ch.ue[static_cast<std::size_t>(ue)].push_back({prb, channel_.draw(ue, rng)});
        }
        {
            auto rng = make_stream(seed, StreamPurpose::JammerFading, u(drop_index_), u(slot));
            for (int prb : plan.jammed)
                ch.jammer.push_back({prb, channel_.draw(channel_.jammer_row(), rng)});
        }

        const double p_j_prb =
            plan.jammed.empty() ? 0.0 : drop_.jammer_tx_power / static_cast<double>(plan.jammed.size());

        SlotOutput out;
        out.record.drop = drop_index_;
        out.record.slot = slot;
        evaluate_links(ch, p_j_prb, slot, out.record);

        if (cfg_.detector.selection != DetectorSelection::None)
        {
            BlankedScene scene;
            scene.n_ant = channel_.n_ant();
            scene.n_re_per_prb = n_re_per_prb_;
            scene.n_blanked = static_cast<int>(plan.blanked.size());
            scene.noise_var_per_re = sigma_w2_ / n_re_per_prb_;
            for (int prb : plan.blanked)
                if (const auto* h = ch.jammer_on(prb))
                    scene.jammed_channels.push_back(h);
            out.n_blanked_jammed = static_cast<int>(scene.jammed_channels.size());

            scene.jammer_power_per_re = p_j_prb / n_re_per_prb_;
            auto rng1 = make_stream(seed, StreamPurpose::DetectionH1, u(drop_index_), u(slot));
            out.cov_h1 = observe(scene, rng1);

            scene.jammer_power_per_re = 0.0;
            scene.jammed_channels.clear();
            auto rng0 = make_stream(seed, StreamPurpose::DetectionH0, u(drop_index_), u(slot));
            out.cov_h0 = observe(scene, rng0);
        }
        return out;
    }

    SampleCovariance observe(const BlankedScene& scene, Rng& rng) const
    {
        if (cfg_.detector.raw_samples)
            return SampleCovariance::from(synthesize_samples(scene, rng));
        return synthesize_covariance(scene, rng);
    }

    void evaluate_links(const ChannelRealization& ch, double p_j_prb, int slot,
                        SlotRecord& rec) const
    {
        const int n_ap = channel_.n_ap();
        std::vector<double> gamma(static_cast<std::size_t>(n_ap));
        std::vector<double> jam_gain(static_cast<std::size_t>(n_ap));
        for (int j = 0; j < n_ap; ++j)
            jam_gain[static_cast<std::size_t>(j)] = channel_.gain(channel_.jammer_row(), j);

        auto rng = make_stream(cfg_.mc.seed, StreamPurpose::Estimation, u(drop_index_), u(slot));
        rec.ue.reserve(static_cast<std::size_t>(cfg_.n_ue));
        for (int ue = 0; ue < cfg_.n_ue; ++ue)
        {
            const auto& prbs = ch.ue[static_cast<std::size_t>(ue)];
            const double p_ue_prb = drop_.ue_tx_power / static_cast<double>(prbs.size());
            for (int j = 0; j < n_ap; ++j)
                gamma[static_cast<std::size_t>(j)] = p_ue_prb * channel_.gain(ue, j) / sigma_w2_;

            EstimationParams ep;
            ep.n_ant_per_ap = channel_.n_ant_per_ap();
            ep.p_ue_prb = p_ue_prb;
            ep.sigma_w2 = sigma_w2_;
            ep.pilot_length = cfg_.link.pilot_length;
            ep.common_z = cfg_.link.common_z;

            std::vector<double> sinr;
            sinr.reserve(prbs.size());
            for (const auto& pc : prbs)
            {
                const auto* h_jam = ch.jammer_on(pc.prb);
                ep.p_j_prb = h_jam ? p_j_prb : 0.0;
                const auto est = estimate_channel(pc.h, gamma, jam_gain, ep, rng);
                const double s = sinr_per_prb(pc.h, h_jam, mrc_combiner(est.h_hat), p_ue_prb,
                                              ep.p_j_prb, sigma_w2_);
                if (!std::isfinite(s) || s < 0)
                    throw NumericalFailure(fmt::format("non-finite SINR {} for UE {} PRB {}", s, ue, pc.prb));
                sinr.push_back(s);
                rec.prb_sinr_db.push_back(static_cast<float>(linear_to_db(s)));
            }
            const auto lb = link_budget(std::move(sinr), cfg_.numerology, cfg_.link.eesm_beta);
            if (!std::isfinite(lb.bler))
                throw NumericalFailure(fmt::format("non-finite BLER for UE {}", ue));
            rec.ue.push_back({static_cast<float>(linear_to_db(lb.sinr_eff)), lb.bler});
        }
    }

    DetectionRecord decide(const SampleCovariance& h0, const SampleCovariance& h1, int first_slot,
                           int n_intersect) const
    {
        const auto sel = cfg_.detector.selection;
        const bool glrt = sel == DetectorSelection::Glrt || sel == DetectorSelection::Both;
        const bool rlrt = sel == DetectorSelection::Rlrt || sel == DetectorSelection::Both;
        DetectionRecord r;
        r.drop = drop_index_;
        r.first_slot = first_slot;
        r.n_blanked_jammed = n_intersect;
        r.glrt_h0 = glrt ? glrt_statistic(h0) : kNaN;
        r.glrt_h1 = glrt ? glrt_statistic(h1) : kNaN;
        r.rlrt_h0 = rlrt ? rlrt_statistic(h0) : kNaN;
        r.rlrt_h1 = rlrt ? rlrt_statistic(h1) : kNaN;
        return r;
    }

    const ScenarioConfig& cfg_;
    int drop_index_;
    Drop drop_;
    DropChannel channel_;
    double sigma_w2_;
    int n_re_per_prb_;
};

}  // namespace

void parallel_for(int n, int threads, const std::function<void(int)>& fn)
{
    const int workers = std::clamp(threads, 1, std::max(1, n));
    if (workers == 1)
    {
        for (int i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
        {
            pool.emplace_back([&] {
                for (int i = next++; i < n; i = next++)
                {
                    try
                    {
                        fn(i);
                    }
                    catch (...)
                    {
                        std::lock_guard lock(error_mutex);
                        if (!error)
                            error = std::current_exception();
                        next = n;
                    }
                }
            });
        }
    }
    if (error)
        std::rethrow_exception(error);
}

std::vector<float> RunResult::prb_sinr_db() const
{
    std::vector<float> out;
    for (const auto& s : slots)
        out.insert(out.end(), s.prb_sinr_db.begin(), s.prb_sinr_db.end());
    return out;
}

RunResult run(const RunSpec& spec)
{
    const auto& cfg = spec.scenario;
    cfg.validate();
    const int n_drops = cfg.mc.n_drops;
    std::vector<DropResult> per_drop(static_cast<std::size_t>(n_drops));
    parallel_for(n_drops, spec.threads, [&](int d) {
        per_drop[static_cast<std::size_t>(d)] = DropSimulator(cfg, d).run();
    });

    RunResult result;
    result.n_ant = cfg.deployment.n_ant_total;
    result.n_re_per_decision = static_cast<long>(cfg.defense.m_p) * cfg.numerology.n_re_per_prb() *
                               cfg.detector.slots_per_decision;
    result.noise_var_per_re =
        noise_power_per_prb(cfg.numerology, cfg.noise_figure_db) / cfg.numerology.n_re_per_prb();
    for (auto& d : per_drop)
    {
        std::move(d.slots.begin(), d.slots.end(), std::back_inserter(result.slots));
        result.detections.insert(result.detections.end(), d.detections.begin(), d.detections.end());
        result.failed_slots += d.failed_slots;
    }
    return result;
}

BlerSummary summarize_bler(const RunResult& result)
{
    std::vector<double> sum, count;
    double total = 0.0;
    double n = 0.0;
    for (const auto& s : result.slots)
    {
        if (static_cast<std::size_t>(s.drop) >= sum.size())
        {
            sum.resize(static_cast<std::size_t>(s.drop) + 1, 0.0);
            count.resize(static_cast<std::size_t>(s.drop) + 1, 0.0);
        }
        for (const auto& u : s.ue)
        {
            sum[static_cast<std::size_t>(s.drop)] += u.bler;
            count[static_cast<std::size_t>(s.drop)] += 1.0;
            total += u.bler;
            n += 1.0;
        }
    }
    if (n == 0)
        throw std::invalid_argument("summarize_bler: no records");
    const double mean = total / n;
    std::vector<double> drop_means;
    for (std::size_t d = 0; d < sum.size(); ++d)
        if (count[d] > 0)
            drop_means.push_back(sum[d] / count[d]);
    double se = 0.0;
    if (drop_means.size() > 1)
    {
        double m = 0.0;
        for (double v : drop_means)
            m += v;
        m /= static_cast<double>(drop_means.size());
        // BLERs can sit near 1e-200; scale before squaring so the spread
        // does not underflow to zero.
        double scale = 0.0;
        for (double v : drop_means)
            scale = std::max(scale, std::fabs(v - m));
        double ss = 0.0;
        if (scale > 0)
            for (double v : drop_means)
                ss += ((v - m) / scale) * ((v - m) / scale);
        const auto k = static_cast<double>(drop_means.size());
        se = scale * std::sqrt(ss / (k - 1.0) / k);
    }
    return {mean, se};
}

std::vector<ScenarioConfig> expand(const ScenarioConfig& base, const SweepGrid& grid)
{
    auto or_base = [](const auto& values, auto base_value) {
        using T = std::decay_t<decltype(base_value)>;
        return values.empty() ? std::vector<T>{base_value} : std::vector<T>(values.begin(), values.end());
    };
    const auto deployments = or_base(grid.deployment, base.deployment.kind);
    const auto n_ants = or_base(grid.n_ant_total, base.deployment.n_ant_total);
    const auto scheds = or_base(grid.scheduling, base.defense.scheduling);
    const auto m_ps = or_base(grid.m_p, base.defense.m_p);
    const auto l_ps = or_base(grid.l_p, base.jammer.l_p);
    const auto p_js = or_base(grid.p_j_dbm, base.jammer.power_dbm);

    std::vector<ScenarioConfig> out;
    for (auto dep : deployments)
        for (int n_ant : n_ants)
            for (auto sched : scheds)
                for (int m_p : m_ps)
                    for (int l_p : l_ps)
                        for (const auto& p_j : p_js)
                        {
                            ScenarioConfig c = base;
                            if (dep != base.deployment.kind || n_ant != base.deployment.n_ant_total)
                            {
                                const int n_ap = default_ap_count(dep).value_or(base.deployment.n_ap);
                                c.deployment = Deployment::make(dep, n_ap, n_ant, base.deployment.hall);
                            }
                            c.defense.scheduling = sched;
                            c.defense.m_p = m_p;
                            c.jammer.l_p = l_p;
                            c.jammer.power_dbm = p_j;
                            out.push_back(std::move(c));
                        }
    return out;
}

std::vector<CdfPoint> aggregate_cdf(std::span<const float> values, std::span<const double> grid)
{
    if (values.empty())
        throw std::invalid_argument("aggregate_cdf: no values");
    std::vector<float> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<CdfPoint> out;
    out.reserve(grid.size());
    const auto n = static_cast<double>(sorted.size());
    for (double x : grid)
    {
        const auto it = std::upper_bound(sorted.begin(), sorted.end(), x,
                                         [](double v, float s) { return v < static_cast<double>(s); });
        out.push_back({x, static_cast<double>(it - sorted.begin()) / n});
    }
    return out;
}

double empirical_quantile(std::span<const float> values, double q)
{
    if (values.empty())
        throw std::invalid_argument("empirical_quantile: no values");
    if (!(q > 0 && q <= 1))
        throw std::invalid_argument("empirical_quantile: q outside (0, 1]");
    std::vector<float> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const auto n = sorted.size();
    auto k = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n)));
    k = std::clamp<std::size_t>(k, 1, n);
    return sorted[k - 1];
}

std::vector<RocPoint> roc_table(std::span<const DetectionRecord> records, DetectorKind kind,
                                std::span<const double> pfa_grid, long n_re, int n_ant,
                                double sigma_re2)
{
    if (records.empty())
        throw std::invalid_argument("roc_table: no detection records");
    std::vector<RocPoint> out;
    out.reserve(pfa_grid.size());
    const auto n = static_cast<double>(records.size());
    for (double pfa : pfa_grid)
    {
        const double thr = detector_threshold(kind, pfa, n_re, n_ant, sigma_re2);
        double fa = 0.0, md = 0.0;
        for (const auto& r : records)
        {
            if (std::isnan(r.h0(kind)) || std::isnan(r.h1(kind)))
                throw std::invalid_argument("roc_table: detector " + to_string(kind) + " was not run");
            fa += r.h0(kind) > thr ? 1.0 : 0.0;
            md += r.h1(kind) > thr ? 0.0 : 1.0;
        }
        out.push_back({pfa, fa / n, md / n});
    }
    return out;
}

std::vector<NoiseTrial> noise_only_statistics(int n_ant, long n_re, long trials, std::uint64_t seed,
                                              int threads)
{
    if (trials < 1 || n_re < 1 || n_ant < 1)
        throw std::invalid_argument("noise_only_statistics: invalid sizes");
    std::vector<NoiseTrial> out(static_cast<std::size_t>(trials));
    constexpr int kChunk = 256;
    const int n_chunks = static_cast<int>((trials + kChunk - 1) / kChunk);
    parallel_for(n_chunks, threads, [&](int c) {
        BlankedScene scene;
        scene.n_ant = n_ant;
        scene.n_re_per_prb = static_cast<int>(n_re);
        scene.n_blanked = 1;
        scene.noise_var_per_re = 1.0;
        const long end = std::min<long>(trials, static_cast<long>(c + 1) * kChunk);
        for (long t = static_cast<long>(c) * kChunk; t < end; ++t)
        {
            auto rng = make_stream(seed, StreamPurpose::Calibration, static_cast<std::uint64_t>(n_re),
                                   static_cast<std::uint64_t>(t));
            const auto obs = synthesize_samples(scene, rng);
            const auto cov = SampleCovariance::from(obs);
            out[static_cast<std::size_t>(t)] = {glrt_statistic(obs), rlrt_statistic(cov)};
        }
    });
    return out;
}

}  // namespace jamsim
