#pragma once

#include "squint/rational.hpp"

#include <vector>

namespace squint {

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;

/// Rank by fraction-free Bareiss elimination; destroys its argument.
int bareiss_rank(IntMatrix m);

/// Row-wise denominator clearing (row scaling preserves rank).
IntMatrix clear_denominators(const RatMatrix& m);

int rational_rank(const RatMatrix& m);

} // namespace squint
