#pragma once

#include <string>
#include <utility>
#include <vector>

#include "concord/obstruction.hpp"
#include "concord/rational.hpp"

namespace concord {

// sigma(T_k, chi^(2r)) for the 2-fold branched cover L(4k+1, 2) of the
// k-twisted double of the unknot.
struct LensSignatureValue {
    long k = 0;
    long m = 0;  // 4k + 1
    long r = 0;  // character exponent reduced to (0, m)
    Rat value;
};

// Weighted lattice data of the triangle with vertices (0,0), (x,0), (x,h):
// interior points count 1, non-vertex boundary points 1/2, integral vertices
// other than the origin 1/4.
struct TriangleCount {
    Int interior = 0;
    Int edge = 0;
    Int quarter_vertices = 0;
    Rat weighted;
};

TriangleCount lattice_triangle_count(long x, const Rat& height);

// 4 (area - weighted lattice count) by exhaustive exact scan.
LensSignatureValue lattice_sigma(long k, long r);

// Piecewise closed form: 4r^2/m - 2r + 1 when 0 < 2r < m, and
// 4r^2/m - 6r + 2m + 1 when m < 2r < 2m.
LensSignatureValue sigma_closed(long k, long r);

enum class OrderVerdict { infinite_order_evidence, inconclusive };

struct BoundTerm {
    std::string description;
    Rat value;
};

// Exact inequality chain bounding sigma_1 of the n-fold connected sum of T_k;
// a negative total rules the sum out as slice for every even n, which is the
// infinite-order evidence.
struct OrderCertificate {
    long k = 0;
    long n = 0;
    long m = 0;
    std::string rationale;
    std::vector<BoundTerm> bound_chain;
    Rat sigma1_tau_upper_bound;
    OrderVerdict verdict = OrderVerdict::inconclusive;
};

OrderCertificate infinite_order_certificate(long k, long n, bool allow_small_k = false);

enum class IndependenceVerdict { not_slice, inconclusive };

// Certificate that no combination #_i n_i T_(k_i) with the listed exponents
// is slice: either the product Alexander polynomial violates Fox-Milnor
// parity, or all exponents are even and the smallest modulus bound applies.
struct IndependenceCertificate {
    std::vector<std::pair<long, long>> pairs;  // (k_i, n_i), normalized to ascending k_i
    FoxMilnorResult parity;
    bool parity_obstructs = false;
    long m1 = 0;
    Rat bound;  // n_1 (-m1^2 + 12 m1 + 5) / (8 m1), set when all n_i are even
    bool bound_obstructs = false;
    IndependenceVerdict verdict = IndependenceVerdict::inconclusive;
    std::string note;
};

IndependenceCertificate independence_certificate(const std::vector<std::pair<long, long>>& pairs);

}  // namespace concord
