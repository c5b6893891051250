#include "jamsim/defense.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <boost/random/uniform_int_distribution.hpp>
#include <fmt/format.h>

namespace jamsim {
namespace {

/// First `count` entries of a Fisher-Yates shuffle of `items`.
template <typename T>
void partial_shuffle(std::vector<T>& items, std::size_t count, Rng& rng)
{
    for (std::size_t i = 0; i < count && i + 1 < items.size(); ++i)
    {
        boost::random::uniform_int_distribution<std::size_t> pick(i, items.size() - 1);
        std::swap(items[i], items[pick(rng)]);
    }
}

Rng keyed_stream(std::uint64_t key, StreamPurpose purpose, std::uint64_t slot_index)
{
    return Rng(mix64(key ^ mix64(static_cast<std::uint64_t>(purpose))), slot_index);
}

}  // namespace

std::vector<int> SlotPlan::prbs_of(int ue) const
{
    std::vector<int> out;
    for (const auto& [prb, owner] : allocation)
        if (owner == ue)
            out.push_back(prb);
    return out;
}

bool SlotPlan::is_jammed(int prb) const
{
    return std::binary_search(jammed.begin(), jammed.end(), prb);
}

int SlotPlan::n_blanked_jammed() const
{
    std::vector<int> both;
    std::set_intersection(blanked.begin(), blanked.end(), jammed.begin(), jammed.end(),
                          std::back_inserter(both));
    return static_cast<int>(both.size());
}

std::vector<int> blanking_set(std::uint64_t slot_index, std::uint64_t key, int n_prb, int m_p)
{
    if (m_p <= 0 || m_p >= n_prb)
        throw std::invalid_argument(fmt::format("blanking_set: m_p = {} outside (0, {})", m_p, n_prb));
    std::vector<int> prbs(static_cast<std::size_t>(n_prb));
    std::iota(prbs.begin(), prbs.end(), 0);
    auto rng = keyed_stream(key, StreamPurpose::Blanking, slot_index);
    partial_shuffle(prbs, static_cast<std::size_t>(m_p), rng);
    prbs.resize(static_cast<std::size_t>(m_p));
    std::sort(prbs.begin(), prbs.end());
    return prbs;
}

std::map<int, int> schedule(std::span<const int> data_prbs, int n_ue, SchedulingPolicy policy,
                            std::uint64_t slot_index, std::uint64_t key)
{
    if (n_ue < 1 || static_cast<int>(data_prbs.size()) < n_ue)
        throw std::invalid_argument(
            fmt::format("schedule: {} data PRBs cannot serve {} UEs", data_prbs.size(), n_ue));
    std::vector<int> order(data_prbs.begin(), data_prbs.end());
    std::sort(order.begin(), order.end());
    if (policy == SchedulingPolicy::Random)
    {
        auto rng = keyed_stream(key, StreamPurpose::Scheduling, slot_index);
        partial_shuffle(order, order.size(), rng);
    }

    const int n = static_cast<int>(order.size());
    const int base = n / n_ue;
    const int extra = n % n_ue;
    std::map<int, int> alloc;
    int pos = 0;
    for (int ue = 0; ue < n_ue; ++ue)
    {
        const int count = base + (ue < extra ? 1 : 0);
        for (int k = 0; k < count; ++k)
            alloc.emplace(order[static_cast<std::size_t>(pos++)], ue);
    }
    return alloc;
}

std::vector<int> jammer_prbs(int l_p, int n_prb, Rng& rng)
{
    if (l_p < 1 || l_p > n_prb)
        throw std::invalid_argument(fmt::format("jammer_prbs: l_p = {} outside [1, {}]", l_p, n_prb));
    std::vector<int> prbs(static_cast<std::size_t>(n_prb));
    std::iota(prbs.begin(), prbs.end(), 0);
    partial_shuffle(prbs, static_cast<std::size_t>(l_p), rng);
    prbs.resize(static_cast<std::size_t>(l_p));
    std::sort(prbs.begin(), prbs.end());
    return prbs;
}

SlotPlan make_slot_plan(const ScenarioConfig& config, std::uint64_t slot_index, std::uint64_t key,
                        std::vector<int> jammed)
{
    const int n_prb = config.n_prb();
    SlotPlan plan;
    plan.blanked = blanking_set(slot_index, key, n_prb, config.defense.m_p);
    std::vector<int> data;
    data.reserve(static_cast<std::size_t>(n_prb - config.defense.m_p));
    for (int p = 0; p < n_prb; ++p)
        if (!std::binary_search(plan.blanked.begin(), plan.blanked.end(), p))
            data.push_back(p);
    plan.allocation = schedule(data, config.n_ue, config.defense.scheduling, slot_index, key);
    plan.f_per_ue.assign(static_cast<std::size_t>(config.n_ue), 0);
    for (const auto& [prb, ue] : plan.allocation)
        ++plan.f_per_ue[static_cast<std::size_t>(ue)];
    plan.jammed = std::move(jammed);
    return plan;
}

}  // namespace jamsim
