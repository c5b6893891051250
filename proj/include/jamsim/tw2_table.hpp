#pragma once

#include <array>

namespace jamsim::detail {

struct Tw2Knot
{
    double p;
    double q;
};

/// Tracy-Widom (beta = 2) quantile knots, ascending in p.
extern const std::array<Tw2Knot, 241> kTw2Table;

}  // namespace jamsim::detail
