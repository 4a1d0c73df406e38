#pragma once

#include <cstddef>

#include "norlund/rational.hpp"

namespace norlund {

/// C(n, k) from a memoized Pascal triangle. The table grows on demand under a
/// lock; rows are never moved once built, so concurrent readers are safe.
/// Returns 0 for k > n.
const Rational& binomial(std::size_t n, std::size_t k);

}  // namespace norlund
