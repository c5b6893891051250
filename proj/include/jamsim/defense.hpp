#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "jamsim/rng.hpp"
#include "jamsim/scenario.hpp"

namespace jamsim {

/// Per-slot resource plan. PRB indices are zero-based.
struct SlotPlan
{
    std::vector<int> blanked;     // ascending
    std::map<int, int> allocation;  // data PRB -> UE
    std::vector<int> jammed;      // ascending
    std::vector<int> f_per_ue;

    /// PRBs of one UE, ascending.
    std::vector<int> prbs_of(int ue) const;
    bool is_jammed(int prb) const;
    /// |blanked ∩ jammed|
    int n_blanked_jammed() const;
};

/// Keyed pseudo-random blanking set of size m_p out of n_prb, ascending.
/// Identical (slot_index, key) always give the same set.
std::vector<int> blanking_set(std::uint64_t slot_index, std::uint64_t key, int n_prb, int m_p);

/// Splits `data_prbs` into n_ue runs whose sizes differ by at most one (the
/// first n mod n_ue UEs get the extra PRB). Sequential keeps ascending PRB
/// order; Random applies a keyed permutation first.
std::map<int, int> schedule(std::span<const int> data_prbs, int n_ue, SchedulingPolicy policy,
                            std::uint64_t slot_index, std::uint64_t key);

/// Uniformly random attacked set of size l_p, ascending.
std::vector<int> jammer_prbs(int l_p, int n_prb, Rng& rng);

SlotPlan make_slot_plan(const ScenarioConfig& config, std::uint64_t slot_index, std::uint64_t key,
                        std::vector<int> jammed);

}  // namespace jamsim
