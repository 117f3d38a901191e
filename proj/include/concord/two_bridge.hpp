#pragma once

#include "concord/knot.hpp"

namespace concord {

// Positive continued fraction of p/q, adjusted to odd length.
std::vector<long> positive_continued_fraction(long p, long q);

// <a, b | a w b^-1 w^-1> with w = prod g_i^{eps_i}, g_i = b for odd i and a
// for even i, eps_i = (-1)^floor(i q'/p) where q' is q made odd mod 2p.
Presentation two_bridge_presentation(long p, long q);

// Alternating diagram from the plat closure of the four-strand braid word
// given by the continued fraction.
CrossingDiagram two_bridge_diagram(long p, long q);

// Record carrying both representations; they are cross-checked by
// alexander_polynomial.
KnotRecord two_bridge_knot(long p, long q);

}  // namespace concord
