#pragma once

#include "concord/cyclotomic.hpp"
#include "concord/rational.hpp"

namespace concord {

// Closed rational interval [lo, hi].
struct RatInterval {
    Rat lo, hi;
};

// Encloses pi via the Machin arctangent identity; the alternating partial
// sums bracket the limit, so the interval is rigorous for any term count.
RatInterval enclose_pi(int terms);

// Encloses cos(theta) for every theta inside the argument interval: Taylor
// expansion at the rational midpoint with the Lagrange remainder, widened by
// the half-width of the argument (|cos'| <= 1).
RatInterval enclose_cos(const RatInterval& theta, int terms);

// Exact sign (-1, 0, +1) of a real cyclotomic number.  Zero is decided
// symbolically; otherwise interval enclosures are refined until they exclude
// zero, so the result is never a guess.  Throws if c is not fixed by
// conjugation.
int sign_of_real_cyclotomic(const Cyclotomic& c);

}  // namespace concord
