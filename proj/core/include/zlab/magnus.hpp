#pragma once

#include "zlab/free_group.hpp"
#include "zlab/series.hpp"

namespace zlab {

/// Magnus expansion of a free-group word: the product over its letters of
/// 1 + X_a (inverse letters via the geometric-series inverse), truncated.
TruncatedSeries magnus(const GroupWord& g, std::uint32_t modulus, std::uint32_t alphabet,
                       std::uint32_t degree_bound);

/// Coefficient of the monomial X_w in the Magnus expansion of g, computed at
/// degree bound |w| exactly.
std::uint32_t epsilon(const Word& w, const GroupWord& g, std::uint32_t modulus,
                      std::uint32_t alphabet);

}  // namespace zlab
