#include "concord/twisted.hpp"

#include <algorithm>
#include <stdexcept>

#include "concord/laurent_det.hpp"

namespace concord {

Presentation branched_quotient(const CoverPresentation& cov) {
    Presentation q = cov.pres;
    q.relators.push_back(Word{cov.meridian});
    q.eta.clear();
    return q;
}

LaurentUnitForm<Cyclotomic> wada_invariant(const Presentation& p, long d,
                                           const std::vector<long>& chi) {
    Presentation pres = p;
    if (pres.eta.empty()) compute_degree_map(pres);
    validate_presentation(pres);
    const std::size_t m = static_cast<std::size_t>(pres.num_generators);
    if (pres.relators.size() + 1 != m)
        throw std::invalid_argument("determinant quotient needs deficiency one");
    if (chi.size() != m) throw std::invalid_argument("character size mismatch");
    if (d < 1) throw std::invalid_argument("character modulus must be positive");

    bool trivial = true;
    for (long c : chi) trivial = trivial && mod_norm(c, d) == 0;

    std::size_t drop = m;
    for (std::size_t j = 0; j < m; ++j)
        if (pres.eta[j] != 0) {
            drop = j;
            break;
        }
    if (drop == m) throw std::invalid_argument("no generator of nonzero degree");

    auto jac = fox_jacobian(pres);
    std::vector<std::vector<Laurent<Cyclotomic>>> mat(m - 1);
    for (std::size_t r = 0; r + 1 < m; ++r) {
        mat[r].reserve(m - 1);
        for (std::size_t j = 0; j < m; ++j) {
            if (j == drop) continue;
            mat[r].push_back(evaluate_group_ring(jac[r][j], d, chi, pres.eta));
        }
    }
    Laurent<Cyclotomic> det = laurent_det(mat);
    if (det.is_zero()) throw ZeroDeterminant();

    Laurent<Cyclotomic> divisor;
    divisor.add(pres.eta[drop], Cyclotomic::zeta_power(d, mod_norm(chi[drop], d)));
    divisor.add(0, Cyclotomic(-1));

    if (trivial) {
        Laurent<Cyclotomic> t_minus_1;
        t_minus_1.add(1, Cyclotomic(1));
        t_minus_1.add(0, Cyclotomic(-1));
        det = det * t_minus_1;
    }
    return laurent_normalize(laurent_div_exact(det, divisor));
}

TwistedPolynomial twisted_alexander_of_cover(const Presentation& base, long n, long d,
                                             const std::vector<long>& chi_homology) {
    CoverPresentation cov = cyclic_cover_presentation(base, n);
    Abelianization ab = abelianize(branched_quotient(cov));
    if (chi_homology.size() != ab.orders.size())
        throw std::invalid_argument("character has wrong number of coordinates");
    for (std::size_t i = 0; i < ab.orders.size(); ++i) {
        Int check = ab.orders[i] * chi_homology[i];
        if (check % d != 0)
            throw std::invalid_argument("character value incompatible with coordinate order");
    }

    std::vector<long> chi(static_cast<std::size_t>(cov.pres.num_generators), 0);
    for (std::size_t k = 0; k < chi.size(); ++k) {
        Int acc(0);
        for (std::size_t i = 0; i < ab.orders.size(); ++i)
            acc += ab.generator_images[k][i] * chi_homology[i];
        acc %= d;
        if (acc < 0) acc += d;
        chi[k] = acc.get_si();
    }

    TwistedPolynomial out;
    out.d = d;
    out.n = n;
    out.character = chi_homology;
    out.homology_orders = ab.orders;
    out.value = wada_invariant(cov.pres, d, chi);
    return out;
}

LaurentUnitForm<Cyclotomic> galois_twist(const LaurentUnitForm<Cyclotomic>& f, long s) {
    Laurent<Cyclotomic> out;
    for (const auto& [e, c] : f.canonical.terms()) out.set(e, c.galois(s));
    return laurent_normalize(out);
}

LaurentUnitForm<Cyclotomic> connected_sum_twisted(
    const std::vector<LaurentUnitForm<Cyclotomic>>& parts) {
    if (parts.empty()) throw std::invalid_argument("empty connected sum");
    Laurent<Cyclotomic> prod(Cyclotomic(1));
    for (const auto& p : parts) prod = prod * p.canonical;
    Laurent<Cyclotomic> t_minus_1;
    t_minus_1.add(1, Cyclotomic(1));
    t_minus_1.add(0, Cyclotomic(-1));
    for (std::size_t i = 1; i < parts.size(); ++i)
        prod = laurent_div_exact(prod, t_minus_1);
    return laurent_normalize(prod);
}

}  // namespace concord
