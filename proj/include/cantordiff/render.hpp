#pragma once

#include "cantordiff/digitset.hpp"

#include <string>

namespace cantordiff::render {

/// Static SVG of the covers at depths 0..depth, one row per depth, x in
/// [-1,1] mapped linearly onto a fixed 1000-unit width. Deterministic
/// byte-for-byte for a given input.
std::string cover_svg(const DigitSet& d, int depth);

/// CSV of the cover endpoints: depth, part index, lo, hi (exact rationals).
std::string cover_csv(const DigitSet& d, int depth);

}  // namespace cantordiff::render
