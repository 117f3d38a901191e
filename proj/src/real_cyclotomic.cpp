#include "concord/real_cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>

namespace concord {

namespace {

// arctan(x) for rational 0 < x < 1: consecutive alternating partial sums
// bracket the limit.
RatInterval enclose_arctan(const Rat& x, int terms) {
    Rat s(0), p = x;
    const Rat x2 = x * x;
    for (int j = 0; j < terms; ++j) {
        Rat term = p / Rat(2 * j + 1);
        s += (j % 2 == 0) ? term : -term;
        p *= x2;
    }
    Rat next = p / Rat(2 * terms + 1);
    Rat s2 = s + ((terms % 2 == 0) ? next : -next);
    return {std::min(s, s2), std::max(s, s2)};
}

}  // namespace

RatInterval enclose_pi(int terms) {
    RatInterval a = enclose_arctan(make_rat(1, 5), terms);
    RatInterval b = enclose_arctan(make_rat(1, 239), terms);
    return {Rat(16 * a.lo - 4 * b.hi), Rat(16 * a.hi - 4 * b.lo)};
}

RatInterval enclose_cos(const RatInterval& theta, int terms) {
    const Rat mid = (theta.lo + theta.hi) / 2;
    const Rat half_width = (theta.hi - theta.lo) / 2;
    const Rat m2 = mid * mid;
    Rat sum(1), p(1), fact(1);
    for (int j = 1; j <= terms; ++j) {
        p *= m2;
        fact *= Rat(2 * j - 1) * Rat(2 * j);
        sum += (j % 2 == 1) ? Rat(-p / fact) : Rat(p / fact);
    }
    // |R| <= |mid|^(2T+2) / (2T+2)!  since every derivative of cos is bounded by 1
    Rat slack = p * m2 / (fact * Rat(2 * terms + 1) * Rat(2 * terms + 2)) + half_width;
    return {Rat(sum - slack), Rat(sum + slack)};
}

int sign_of_real_cyclotomic(const Cyclotomic& c) {
    if (!(c == c.conj()))
        throw std::domain_error("sign requested for a cyclotomic number that is not real");
    if (c == Cyclotomic(0)) return 0;
    const std::vector<Rat> a = c.power_expansion();
    const long d = c.modulus();

    // c real means c equals its real part sum a_i cos(2 pi i / d)
    for (int terms = 12; terms <= 3100; terms *= 2) {
        const RatInterval pi = enclose_pi(terms);
        Rat lo(0), hi(0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            if (i == 0) {
                lo += a[0];
                hi += a[0];
                continue;
            }
            const Rat f = make_rat(2 * static_cast<long>(i), d);
            const RatInterval theta{Rat(f * pi.lo), Rat(f * pi.hi)};
            const RatInterval cs = enclose_cos(theta, terms);
            if (a[i] > 0) {
                lo += a[i] * cs.lo;
                hi += a[i] * cs.hi;
            } else {
                lo += a[i] * cs.hi;
                hi += a[i] * cs.lo;
            }
        }
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }
    throw std::logic_error("interval refinement failed to separate a nonzero real value from 0");
}

}  // namespace concord
