#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <cmath>
#include <set>

#include "jamsim/defense.hpp"
#include "oracles.hpp"

using namespace jamsim;

TEST_SUITE("defense")
{
    TEST_CASE("blanking sets are keyed, sorted and unique")
    {
        const auto a = blanking_set(17, 99, 25, 5);
        CHECK(a.size() == 5);
        CHECK(std::is_sorted(a.begin(), a.end()));
        CHECK(std::set<int>(a.begin(), a.end()).size() == 5);
        CHECK(a == blanking_set(17, 99, 25, 5));
        CHECK(a != blanking_set(18, 99, 25, 5));
        CHECK(a != blanking_set(17, 100, 25, 5));
        for (int p : a)
        {
            CHECK(p >= 0);
            CHECK(p < 25);
        }
        CHECK_THROWS_AS(blanking_set(0, 0, 25, 25), std::invalid_argument);
        CHECK_THROWS_AS(blanking_set(0, 0, 25, 0), std::invalid_argument);
    }

    TEST_CASE("every PRB is blanked equally often")
    {
        constexpr int slots = 20000, n = 25, m = 5;
        std::vector<int> hits(n, 0);
        for (int s = 0; s < slots; ++s)
            for (int p : blanking_set(static_cast<std::uint64_t>(s), 5, n, m))
                ++hits[static_cast<std::size_t>(p)];
        const double expected = static_cast<double>(slots) * m / n;
        const double sd = std::sqrt(expected * (1.0 - static_cast<double>(m) / n));
        for (int h : hits)
            CHECK(std::fabs(h - expected) < 5 * sd);
    }

    TEST_CASE("contiguous split gives the first UEs the remainder")
    {
        std::vector<int> data(22);
        std::iota(data.begin(), data.end(), 3);
        const auto seq = schedule(data, 4, SchedulingPolicy::Sequential, 0, 1);
        REQUIRE(seq.size() == 22);
        std::vector<int> per_ue(4, 0);
        int prev_ue = 0;
        for (const auto& [prb, ue] : seq)
        {
            ++per_ue[static_cast<std::size_t>(ue)];
            CHECK(ue >= prev_ue);  // ascending PRBs map to non-decreasing UEs
            prev_ue = ue;
        }
        CHECK(per_ue == std::vector<int>{6, 6, 5, 5});

        const auto rnd = schedule(data, 4, SchedulingPolicy::Random, 0, 1);
        std::vector<int> rnd_per_ue(4, 0);
        for (const auto& [prb, ue] : rnd)
            ++rnd_per_ue[static_cast<std::size_t>(ue)];
        CHECK(rnd_per_ue == per_ue);
        CHECK(rnd != seq);
        CHECK(rnd == schedule(data, 4, SchedulingPolicy::Random, 0, 1));
        CHECK_THROWS_AS(schedule(std::vector<int>{1, 2}, 3, SchedulingPolicy::Random, 0, 1),
                        std::invalid_argument);
    }

    TEST_CASE("jammer PRB sets")
    {
        auto rng = make_stream(1, StreamPurpose::Jammer, 0);
        const auto j = jammer_prbs(7, 25, rng);
        CHECK(j.size() == 7);
        CHECK(std::is_sorted(j.begin(), j.end()));
        CHECK(std::set<int>(j.begin(), j.end()).size() == 7);
        const auto all = jammer_prbs(25, 25, rng);
        CHECK(all.size() == 25);
        CHECK(all.front() == 0);
        CHECK(all.back() == 24);
        CHECK_THROWS_AS(jammer_prbs(26, 25, rng), std::invalid_argument);
    }

    TEST_CASE("slot plans partition the band")
    {
        const auto cfg = scenario_preset("B100");
        auto rng = make_stream(2, StreamPurpose::Jammer, 0);
        const auto plan = make_slot_plan(cfg, 42, 7, jammer_prbs(25, 125, rng));
        CHECK(plan.blanked.size() == 5);
        CHECK(plan.allocation.size() == 120);
        for (int p : plan.blanked)
            CHECK(plan.allocation.count(p) == 0);
        CHECK(std::accumulate(plan.f_per_ue.begin(), plan.f_per_ue.end(), 0) == 120);
        for (int ue = 0; ue < cfg.n_ue; ++ue)
            CHECK(plan.prbs_of(ue).size() == 6);
        int manual = 0;
        for (int p : plan.blanked)
            manual += plan.is_jammed(p) ? 1 : 0;
        CHECK(plan.n_blanked_jammed() == manual);
    }

    TEST_CASE("non-intersection frequency follows the hypergeometric law")
    {
        const auto cfg = scenario_preset("B20");
        for (int l_p : {1, 5, 10})
        {
            constexpr int slots = 20000;
            int misses = 0;
            for (int s = 0; s < slots; ++s)
            {
                auto rng = make_stream(3, StreamPurpose::Jammer, static_cast<std::uint64_t>(s));
                const auto plan = make_slot_plan(cfg, static_cast<std::uint64_t>(s), 11, jammer_prbs(l_p, 25, rng));
                misses += plan.n_blanked_jammed() == 0 ? 1 : 0;
            }
            const double p = oracle::no_intersection_probability(25, 5, l_p);
            const double sd = std::sqrt(p * (1 - p) / slots);
            CHECK(std::fabs(static_cast<double>(misses) / slots - p) < 4 * sd);
        }
        CHECK(oracle::no_intersection_probability(25, 5, 5) == doctest::Approx(0.29184).epsilon(1e-4));
    }
}
