#include "concord/lens.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace concord {

namespace {

void check_twist_parameter(long k, long minimum) {
    if (k < minimum)
        throw std::domain_error("twist parameter k = " + std::to_string(k) +
                                " is below the minimum " + std::to_string(minimum));
    if (!is_prime(Int(4 * k + 1)))
        throw std::domain_error("4k+1 = " + std::to_string(4 * k + 1) + " is not prime");
}

// Character exponents live in Z/m; 0 is the degenerate character.  m is odd,
// so the reduced representative never hits 2r = m.
long reduced_exponent(long m, long r) {
    r = mod_norm(r, m);
    if (r == 0)
        throw std::domain_error("degenerate character: exponent 0 mod " + std::to_string(m));
    return r;
}

}  // namespace

TriangleCount lattice_triangle_count(long x, const Rat& height) {
    if (x < 0 || height < 0)
        throw std::domain_error("triangle data must lie in the first quadrant");
    TriangleCount tc;
    if (x == 0) {
        tc.weighted = Rat(0);
        return tc;
    }
    const Int ymax = height.get_num() / height.get_den();
    for (long gx = 0; gx <= x; ++gx) {
        const Rat hy = height * Rat(gx) / Rat(x);  // hypotenuse height at gx
        for (Int gy(0); gy <= ymax; ++gy) {
            if (Rat(gy) > hy) break;
            const bool at_origin = gx == 0 && gy == 0;
            if (at_origin) continue;
            const bool right_vertex = gx == x && gy == 0;
            const bool apex = gx == x && Rat(gy) == height;
            if (right_vertex || apex) {
                ++tc.quarter_vertices;
                continue;
            }
            if (gy == 0 || gx == x || Rat(gy) == hy)
                ++tc.edge;
            else
                ++tc.interior;
        }
    }
    tc.weighted = Rat(tc.interior) + make_rat(tc.edge, 2) + make_rat(tc.quarter_vertices, 4);
    return tc;
}

LensSignatureValue lattice_sigma(long k, long r) {
    check_twist_parameter(k, 1);
    const long m = 4 * k + 1;
    LensSignatureValue v;
    v.k = k;
    v.m = m;
    v.r = reduced_exponent(m, r);
    const Rat height = make_rat(2 * v.r, m);
    const TriangleCount tc = lattice_triangle_count(v.r, height);
    const Rat area = Rat(v.r) * height / 2;
    v.value = Rat(4 * (area - tc.weighted));
    return v;
}

LensSignatureValue sigma_closed(long k, long r) {
    check_twist_parameter(k, 1);
    const long m = 4 * k + 1;
    LensSignatureValue v;
    v.k = k;
    v.m = m;
    v.r = reduced_exponent(m, r);
    const Rat square_term = make_rat(4 * v.r * v.r, m);
    v.value = 2 * v.r < m ? Rat(square_term - 2 * v.r + 1)
                          : Rat(square_term - 6 * v.r + 2 * m + 1);
    return v;
}

OrderCertificate infinite_order_certificate(long k, long n, bool allow_small_k) {
    if (n < 2 || n % 2 != 0)
        throw std::domain_error("the summand count n must be even and at least 2");
    check_twist_parameter(k, allow_small_k ? 1 : 3);

    OrderCertificate cert;
    cert.k = k;
    cert.n = n;
    cert.m = 4 * k + 1;
    cert.rationale =
        "a metabolizer of the n-fold connected sum forces a character with n/2 unit "
        "components; each contributes the minimum signature sigma1(k), every other "
        "summand is bounded by the extremal value 1/m, and passing to sigma1 of the "
        "stable invariant costs at most 1 per summand";

    const Int M(cert.m);
    const Rat minimum = Rat(n) * Rat(-(M * M) + 4 * M + 1) / Rat(8 * M);
    if (minimum != Rat(n) / 2 * sigma_closed(k, k).value)
        throw std::logic_error("minimum-signature identity failed");
    const Rat extremal = Rat(n) / 2 * make_rat(1, cert.m);
    const Rat slack = Rat(n);
    cert.bound_chain = {
        {"n/2 summands at the minimum signature sigma1(k) = (-m^2+4m+1)/(4m)", minimum},
        {"remaining summands at the extremal value 1/m", extremal},
        {"triangle-inequality slack of 1 per summand", slack},
    };
    cert.sigma1_tau_upper_bound = minimum + extremal + slack;
    if (cert.sigma1_tau_upper_bound != Rat(n) * Rat(-(M * M) + 12 * M + 5) / Rat(8 * M))
        throw std::logic_error("bound chain does not reduce to n(-m^2+12m+5)/(8m)");
    cert.verdict = cert.sigma1_tau_upper_bound < 0 ? OrderVerdict::infinite_order_evidence
                                                   : OrderVerdict::inconclusive;
    return cert;
}

IndependenceCertificate independence_certificate(
    const std::vector<std::pair<long, long>>& pairs) {
    if (pairs.empty())
        throw std::domain_error("independence certificate needs at least one (k, n) pair");

    IndependenceCertificate cert;
    cert.pairs = pairs;
    std::sort(cert.pairs.begin(), cert.pairs.end());
    std::set<long> seen;
    for (const auto& [k, n] : cert.pairs) {
        if (!seen.insert(k).second)
            throw std::domain_error("repeated twist parameter k = " + std::to_string(k));
        check_twist_parameter(k, 3);
        if (n < 1)
            throw std::domain_error("exponent for k = " + std::to_string(k) +
                                    " must be positive");
    }

    // product of the twist-knot Alexander polynomials; every factor
    // k t^2 - (2k+1) t + k is irreducible since its discriminant 4k+1 is prime
    Laurent<Rat> product{Rat(1)};
    for (const auto& [k, n] : cert.pairs) {
        Laurent<Rat> f;
        f.set(0, Rat(k));
        f.set(1, Rat(-(2 * k + 1)));
        f.set(2, Rat(k));
        for (long i = 0; i < n; ++i) product = product * f;
    }
    cert.parity = fox_milnor_test(product);
    if (cert.parity.verdict == FoxMilnorVerdict::fails) {
        cert.parity_obstructs = true;
        cert.verdict = IndependenceVerdict::not_slice;
        cert.note = "an odd exponent leaves a symmetric irreducible factor of odd "
                    "multiplicity in the product Alexander polynomial";
        return cert;
    }
    if (cert.parity.verdict == FoxMilnorVerdict::indeterminate) {
        cert.verdict = IndependenceVerdict::inconclusive;
        cert.note = "product Alexander polynomial left an unfactored remainder";
        return cert;
    }

    // all exponents even: characters vanish on every other prime component,
    // so the first-listed modulus bound applies with n = n_1
    const long k1 = cert.pairs.front().first;
    const long n1 = cert.pairs.front().second;
    cert.m1 = 4 * k1 + 1;
    const Int M(cert.m1);
    cert.bound = Rat(n1) * Rat(-(M * M) + 12 * M + 5) / Rat(8 * M);
    cert.bound_obstructs = cert.bound < 0;
    cert.verdict = cert.bound_obstructs ? IndependenceVerdict::not_slice
                                        : IndependenceVerdict::inconclusive;
    cert.note = "all exponents even; the signature bound at the smallest modulus m1 = " +
                std::to_string(cert.m1) + " decides";
    return cert;
}

}  // namespace concord
