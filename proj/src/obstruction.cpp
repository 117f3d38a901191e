#include "concord/obstruction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

namespace concord {

namespace {

// ---- Fox-Milnor helpers ----------------------------------------------------

Laurent<Rat> primitive_form(const Laurent<Rat>& f) {
    return integral_form(laurent_normalize(f));
}

Laurent<Rat> reversed(const Laurent<Rat>& f) {
    Laurent<Rat> r;
    for (const auto& [e, v] : f.terms()) r.set(-e, v);
    return r;
}

// Positive divisors by trial division; nullopt when |n| is too large to scan.
std::optional<std::vector<Int>> positive_divisors(const Int& n) {
    Int m = abs(n);
    if (m == 0) throw std::logic_error("divisors of zero requested");
    if (m > Int("1000000000000")) return std::nullopt;
    std::vector<Int> out;
    for (Int v(1); v * v <= m; ++v) {
        if (m % v != 0) continue;
        out.push_back(v);
        if (v * v != m) out.push_back(m / v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Quadratic integer divisor of the primitive integer polynomial p (exponents
// from 0, p(0) != 0, no rational roots), found Kronecker-style from divisor
// triples of p(0), p(1) and p(-1).  `too_big` is set when the divisor space
// is beyond scanning.
std::optional<Laurent<Rat>> kronecker_quadratic(const Laurent<Rat>& p, bool* too_big) {
    const Rat v0 = p.coeff(0), v1 = p.eval(Rat(1)), vm = p.eval(Rat(-1));
    auto d0s = positive_divisors(v0.get_num());
    auto d1s = positive_divisors(v1.get_num());
    auto dms = positive_divisors(vm.get_num());
    if (!d0s || !d1s || !dms ||
        d0s->size() * d1s->size() * dms->size() > 500000) {
        *too_big = true;
        return std::nullopt;
    }
    // g(0) = c, g(1) = a+b+c, g(-1) = a-b+c determine g; the sign of g is
    // normalized by c > 0, the other two values run over both signs.
    for (const Int& c : *d0s)
        for (const Int& d1 : *d1s)
            for (int s1 : {1, -1})
                for (const Int& dm : *dms)
                    for (int sm : {1, -1}) {
                        Int w1 = s1 * d1, wm = sm * dm;
                        if ((w1 - wm) % 2 != 0) continue;
                        Int b = (w1 - wm) / 2;
                        Int a2 = w1 + wm - 2 * c;
                        if (a2 % 2 != 0) continue;
                        Int a = a2 / 2;
                        if (a == 0) continue;
                        Laurent<Rat> g;
                        g.set(2, Rat(a));
                        g.set(1, Rat(b));
                        g.set(0, Rat(c));
                        try {
                            laurent_div_exact(p, g);
                            return primitive_form(g);
                        } catch (const NonExactDivision&) {
                        }
                    }
    return std::nullopt;
}

// ---- norm-test helpers -----------------------------------------------------

Laurent<Cyclotomic> t_minus_one() {
    Laurent<Cyclotomic> f;
    f.set(1, Cyclotomic(1));
    f.set(0, Cyclotomic(-1));
    return f;
}

struct Root {  // num / den with den != 0
    Cyclotomic num, den;
};

// u * conj(v) == 1, i.e. v is the reciprocal of the conjugate of u.
bool conjugate_reciprocal(const Root& u, const Root& v) {
    return u.num * v.num.conj() == u.den * v.den.conj();
}

Laurent<Cyclotomic> linear_from_root(const Root& r) {
    Laurent<Cyclotomic> f;
    f.set(1, r.den);
    f.set(0, -r.num);
    return f;
}

struct QuadInfo {
    SquareCertificate cert;
    Root r1, r2;  // valid when cert.verdict == yes
};

QuadInfo analyze_quadratic(const Laurent<Cyclotomic>& q) {
    Laurent<Cyclotomic> c = laurent_canonical(q);
    if (c.span() != 2) throw std::logic_error("quadratic analysis of a non-quadratic");
    Cyclotomic a = c.coeff(2), b = c.coeff(1), c0 = c.coeff(0);
    QuadInfo info;
    info.cert = is_square(b * b - Cyclotomic(4) * a * c0);
    if (info.cert.verdict == SquareCertificate::Verdict::yes) {
        info.r1 = Root{-b + info.cert.root, Cyclotomic(2) * a};
        info.r2 = Root{-b - info.cert.root, Cyclotomic(2) * a};
    }
    return info;
}

// Perfect matching of four roots into conjugate-reciprocal pairs; on success
// fills `half` with one representative root per pair.
bool match_roots(const std::vector<Root>& r, std::vector<Root>* half) {
    for (int j = 1; j < 4; ++j) {
        if (!conjugate_reciprocal(r[0], r[j])) continue;
        std::vector<int> rest;
        for (int i = 1; i < 4; ++i)
            if (i != j) rest.push_back(i);
        if (conjugate_reciprocal(r[rest[0]], r[rest[1]])) {
            if (half) *half = {r[0], r[rest[0]]};
            return true;
        }
    }
    return false;
}

}  // namespace

FoxMilnorResult fox_milnor_test(const Laurent<Rat>& delta) {
    if (delta.is_zero()) throw std::domain_error("Fox-Milnor test of the zero polynomial");
    FoxMilnorResult res;
    Laurent<Rat> p = primitive_form(delta);

    std::map<std::string, FoxMilnorFactor> table;
    auto record = [&](const Laurent<Rat>& f) {
        Laurent<Rat> c = primitive_form(f);
        FoxMilnorFactor& slot = table[c.str()];
        if (slot.multiplicity == 0) {
            slot.factor = c;
            slot.symmetric = primitive_form(reversed(c)) == c;
        }
        ++slot.multiplicity;
    };

    bool too_big = false;
    if (p.span() >= 1) {
        // rational roots of the original polynomial cover all linear factors
        // of every quotient along the way
        auto nums = positive_divisors(p.coeff(0).get_num());
        auto dens = positive_divisors(p.coeff(p.highest()).get_num());
        if (!nums || !dens || nums->size() * dens->size() > 500000) {
            too_big = true;
        } else {
            std::set<Rat> candidates;
            for (const Int& nu : *nums)
                for (const Int& de : *dens) {
                    candidates.insert(make_rat(nu, de));
                    candidates.insert(make_rat(-nu, de));
                }
            for (const Rat& r : candidates) {
                while (!p.is_zero() && p.span() >= 1 && p.eval(r) == 0) {
                    Laurent<Rat> lin;
                    lin.set(1, Rat(r.get_den()));
                    lin.set(0, Rat(-r.get_num()));
                    record(lin);
                    p = primitive_form(laurent_div_exact(p, lin));
                }
            }
        }
    }
    while (!too_big && p.span() >= 4) {
        auto g = kronecker_quadratic(p, &too_big);
        if (!g) break;
        record(*g);
        p = primitive_form(laurent_div_exact(p, *g));
    }
    if (!too_big && (p.span() == 2 || p.span() == 1)) {
        // no rational roots remain, so a leftover quadratic is irreducible
        record(p);
        p = Laurent<Rat>(Rat(1));
    }

    for (const auto& [key, f] : table) res.factors.push_back(f);
    std::sort(res.factors.begin(), res.factors.end(),
              [](const FoxMilnorFactor& x, const FoxMilnorFactor& y) {
                  if (x.factor.span() != y.factor.span()) return x.factor.span() < y.factor.span();
                  return x.factor.str() < y.factor.str();
              });

    if (too_big) {
        res.verdict = FoxMilnorVerdict::indeterminate;
        res.unfactored = p;
        res.note = "coefficient divisor enumeration exceeds the scanning bound";
        return res;
    }
    if (p.span() > 0) {
        res.verdict = FoxMilnorVerdict::indeterminate;
        res.unfactored = p;
        res.note = "remainder of degree " + std::to_string(p.span()) +
                   " has no linear or quadratic factors; factorization out of scope";
        return res;
    }

    bool ok = true;
    std::string why;
    for (const auto& [key, f] : table) {
        if (f.symmetric) {
            if (f.multiplicity % 2 != 0) {
                ok = false;
                why = "symmetric factor " + key + " has odd multiplicity " +
                      std::to_string(f.multiplicity);
                break;
            }
        } else {
            std::string rkey = primitive_form(reversed(f.factor)).str();
            auto it = table.find(rkey);
            int rmult = it == table.end() ? 0 : it->second.multiplicity;
            if (rmult != f.multiplicity) {
                ok = false;
                why = "factor " + key + " (multiplicity " + std::to_string(f.multiplicity) +
                      ") is not matched by its reverse";
                break;
            }
        }
    }
    res.verdict = ok ? FoxMilnorVerdict::passes : FoxMilnorVerdict::fails;
    res.note = ok ? "all symmetric factors even, asymmetric factors paired under t -> 1/t" : why;
    return res;
}

Laurent<Cyclotomic> laurent_conj_reverse(const Laurent<Cyclotomic>& f) {
    Laurent<Cyclotomic> r;
    for (const auto& [e, c] : f.terms()) r.set(-e, c.conj());
    return r;
}

NormFactorization norm_factorization_test(const Laurent<Cyclotomic>& value, long d,
                                          bool trivial_character,
                                          const std::vector<Laurent<Cyclotomic>>& known_factors) {
    if (value.is_zero()) throw std::domain_error("norm factorization test of the zero polynomial");
    NormFactorization out;
    out.stripped_power = trivial_character ? 0 : 1;
    Laurent<Cyclotomic> residual = laurent_canonical(value);
    for (int i = 0; i < out.stripped_power; ++i) {
        try {
            residual = laurent_canonical(laurent_div_exact(residual, t_minus_one()));
        } catch (const NonExactDivision&) {
            throw std::domain_error("(t-1) does not divide the polynomial of a nontrivial character");
        }
    }

    const long span = residual.span();
    if (span == 0) {
        out.verdict = NormVerdict::factors;
        out.norm_half = Laurent<Cyclotomic>(Cyclotomic(1));
        out.note = "constant residual";
        return out;
    }
    if (span % 2 != 0) {
        out.verdict = NormVerdict::obstructed;
        out.note = "residual degree " + std::to_string(span) + " is odd; norms have even degree";
        return out;
    }
    if (!laurent_unit_equal(laurent_conj_reverse(residual), residual)) {
        out.verdict = NormVerdict::obstructed;
        out.note = "residual is not conjugate-symmetric up to units";
        return out;
    }

    std::optional<Laurent<Cyclotomic>> q1, q2;
    if (known_factors.size() == 2) {
        q1 = laurent_canonical(known_factors[0]);
        q2 = laurent_canonical(known_factors[1]);
        if (!laurent_unit_equal(*q1 * *q2, residual))
            throw std::logic_error("known factors do not multiply to the residual");
        if (laurent_unit_equal(laurent_conj_reverse(*q1), *q2)) {
            out.verdict = NormVerdict::factors;
            out.norm_half = *q1;
            out.note = "second factor is the conjugate-reverse of the first";
            return out;
        }
    }

    if (span == 2) {
        QuadInfo info = analyze_quadratic(residual);
        out.certificates.push_back(info.cert);
        if (info.cert.verdict == SquareCertificate::Verdict::no) {
            out.verdict = NormVerdict::obstructed;
            out.note = "residual quadratic is certified irreducible, a degree-2 norm splits";
        } else if (info.cert.verdict == SquareCertificate::Verdict::yes) {
            if (conjugate_reciprocal(info.r1, info.r2)) {
                out.verdict = NormVerdict::factors;
                out.norm_half = linear_from_root(info.r1);
                out.note = "roots are conjugate-reciprocal partners";
            } else {
                out.verdict = NormVerdict::obstructed;
                out.note = "residual splits but its roots are not conjugate-reciprocal partners";
            }
        } else {
            out.verdict = NormVerdict::indeterminate;
            out.note = "discriminant square certificate ran out of budget (modulus " +
                       std::to_string(d) + ")";
        }
        return out;
    }

    if (span == 4 && q1 && q1->span() == 2 && q2->span() == 2) {
        QuadInfo i1 = analyze_quadratic(*q1);
        QuadInfo i2 = analyze_quadratic(*q2);
        out.certificates.push_back(i1.cert);
        out.certificates.push_back(i2.cert);
        const auto yes = SquareCertificate::Verdict::yes;
        const auto no = SquareCertificate::Verdict::no;
        if (i1.cert.verdict == no && i2.cert.verdict == no) {
            out.verdict = NormVerdict::obstructed;
            out.note = "both quadratic factors are certified irreducible and neither is the "
                       "conjugate-reverse of the other";
        } else if (i1.cert.verdict == yes && i2.cert.verdict == yes) {
            std::vector<Root> half;
            if (match_roots({i1.r1, i1.r2, i2.r1, i2.r2}, &half)) {
                out.verdict = NormVerdict::factors;
                out.norm_half = linear_from_root(half[0]) * linear_from_root(half[1]);
                out.note = "all four roots pair up as conjugate reciprocals";
            } else {
                out.verdict = NormVerdict::obstructed;
                out.note = "no conjugate-reciprocal pairing of the four roots exists";
            }
        } else if ((i1.cert.verdict == no && i2.cert.verdict == yes) ||
                   (i1.cert.verdict == yes && i2.cert.verdict == no)) {
            out.verdict = NormVerdict::obstructed;
            out.note = "exactly one quadratic factor is irreducible; unique factorization "
                       "leaves no pairing";
        } else {
            out.verdict = NormVerdict::indeterminate;
            out.note = "a discriminant square certificate ran out of budget (modulus " +
                       std::to_string(d) + ")";
        }
        return out;
    }

    out.verdict = NormVerdict::indeterminate;
    out.note = "residual of degree " + std::to_string(span) +
               " without a usable factorization is outside certificate scope";
    return out;
}

namespace {

// Per-summand twisted polynomials, reusing Galois twists of cached characters
// where zeta -> zeta^s is defined.
class SummandCache {
public:
    SummandCache(const Presentation& pres, long d) : pres_(pres), d_(d) {}

    TwistedPolynomial get(const std::vector<long>& chi) {
        for (const auto& [key, poly] : entries_)
            if (key == chi) return poly;
        for (const auto& [key, poly] : entries_) {
            long s = twist_scalar(key, chi);
            if (s != 0) {
                TwistedPolynomial tw = poly;
                tw.value = galois_twist(poly.value, s);
                tw.character = chi;
                entries_.emplace_back(chi, tw);
                return tw;
            }
        }
        entries_.emplace_back(chi, twisted_alexander_of_cover(pres_, 2, d_, chi));
        return entries_.back().second;
    }

private:
    long twist_scalar(const std::vector<long>& from, const std::vector<long>& to) const {
        for (long s = 1; s < d_; ++s) {
            if (std::gcd(s, d_) != 1) continue;
            bool all = true;
            for (std::size_t i = 0; i < from.size() && all; ++i)
                all = mod_norm(s * from[i], d_) == mod_norm(to[i], d_);
            if (all) return s;
        }
        return 0;
    }

    const Presentation& pres_;
    long d_;
    std::vector<std::pair<std::vector<long>, TwistedPolynomial>> entries_;
};

}  // namespace

ObstructionReport order_two_report(const KnotRecord& k, bool all_characters) {
    ObstructionReport rep;
    rep.knot = k.name;

    Presentation pres;
    if (k.presentation) pres = *k.presentation;
    else if (k.diagram) pres = wirtinger_presentation(*k.diagram);
    else throw std::domain_error("order-two obstruction needs a presentation or a diagram");

    branched_cover_homology(k, 2);  // cross-checks the homology order across routes
    LinkedAbelianGroup h = branched_homology_from_presentation(pres, 2);
    rep.summand = h;
    if (h.orders.empty()) {
        rep.verdict = OrderTwoVerdict::inconclusive;
        rep.reason = "trivial branched-cover homology leaves no characters to test";
        return rep;
    }

    Int order = group_order(h);
    if (order > 100)
        throw std::domain_error("branched homology of order " + order.get_str() +
                                " is beyond the automated pipeline");
    const long d = order.get_si();
    rep.d = d;
    long prime_base = 0;
    const bool prime_power_modulus = is_prime_power(d, &prime_base);

    rep.group = direct_sum(h, h);
    rep.metabolizers = enumerate_metabolizers(rep.group);
    if (rep.metabolizers.metabolizers.empty()) {
        rep.verdict = OrderTwoVerdict::not_algebraically_slice;
        rep.reason = "the doubled linking form admits no metabolizer (" +
                     rep.metabolizers.reason + ")";
        return rep;
    }

    const std::size_t g = h.orders.size();
    SummandCache cache(pres, d);
    bool all_blocked = true;
    bool any_indeterminate = false;

    for (const auto& m : rep.metabolizers.metabolizers) {
        MetabolizerRecord mrec;
        mrec.metabolizer = m;

        std::vector<std::vector<Int>> picks;
        for (const auto& e : m.elements) {
            bool left = false, right = false;
            for (std::size_t i = 0; i < g; ++i) {
                left = left || e[i] != 0;
                right = right || e[g + i] != 0;
            }
            if (left && right) {
                picks.push_back(e);
                if (!all_characters) break;
            }
        }

        for (const auto& hh : picks) {
            CharacterRecord crec;
            crec.element = hh;
            crec.character = character_from_element(rep.group, hh, d);
            std::vector<long> v1(crec.character.values.begin(), crec.character.values.begin() + g);
            std::vector<long> v2(crec.character.values.begin() + g, crec.character.values.end());
            try {
                TwistedPolynomial p1 = cache.get(v1);
                TwistedPolynomial p2 = cache.get(v2);
                if (p1.homology_orders != h.orders || p2.homology_orders != h.orders)
                    throw std::logic_error("branched homology coordinates diverged");
                crec.polynomial = connected_sum_twisted({p1.value, p2.value});
                Laurent<Cyclotomic> q1 = laurent_div_exact(p1.value.canonical, t_minus_one());
                Laurent<Cyclotomic> q2 = laurent_div_exact(p2.value.canonical, t_minus_one());
                crec.factorization =
                    norm_factorization_test(crec.polynomial.canonical, d, false, {q1, q2});
            } catch (const NonExactDivision&) {
                crec.factorization.verdict = NormVerdict::indeterminate;
                crec.note = "(t-1) bookkeeping failed for a component polynomial";
            }
            mrec.characters.push_back(crec);
        }

        bool has_indeterminate = false;
        for (const auto& crec : mrec.characters) {
            if (crec.factorization.verdict == NormVerdict::obstructed) mrec.blocked = true;
            if (crec.factorization.verdict == NormVerdict::indeterminate) has_indeterminate = true;
        }
        if (mrec.characters.empty()) has_indeterminate = true;  // nothing testable
        if (!mrec.blocked) {
            all_blocked = false;
            if (has_indeterminate) any_indeterminate = true;
        }
        rep.records.push_back(std::move(mrec));
    }

    if (all_blocked) {
        if (prime_power_modulus) {
            rep.verdict = OrderTwoVerdict::obstructed;
            rep.reason = "every metabolizer carries a character whose twisted polynomial fails "
                         "the norm factorization";
        } else {
            rep.verdict = OrderTwoVerdict::inconclusive;
            rep.reason = "every tested character fails, but the modulus " + std::to_string(d) +
                         " is not a prime power, so the factorization theorem does not apply";
        }
    } else {
        rep.verdict = OrderTwoVerdict::inconclusive;
        rep.reason = any_indeterminate
                         ? "some factorization subtests were indeterminate"
                         : "some metabolizer is consistent with sliceness at every tested character";
    }
    return rep;
}

}  // namespace concord
