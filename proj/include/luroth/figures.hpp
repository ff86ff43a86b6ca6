#pragma once

#include <string>

namespace luroth {

/// Stepwise-construction diagram: one row per level, surviving intervals
/// as filled rectangles on a 1000-wide canvas, gaps annotated with exact
/// fractions while the row is sparse. Output is byte-identical for
/// identical inputs.
std::string svg_scc(long N1, long N2, int depth);

/// Product-square diagram: cover(level_a) x cover(level_b) as black cells
/// in the unit square, with the certified mod-1 gaps drawn as diagonal
/// bands x + y in (lo, hi) + m.
std::string svg_product_square(long N1a, long N2a, int level_a, long N1b, long N2b, int level_b);

/// Sum-cover diagram: the Minkowski sum of two covers as one bar, its
/// mod-1 folding as a second bar, gaps annotated with exact fractions.
std::string svg_sum_cover(long N1a, long N2a, int depth_a, long N1b, long N2b, int depth_b);

}  // namespace luroth
