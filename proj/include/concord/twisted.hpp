#pragma once

#include <vector>

#include "concord/cover.hpp"
#include "concord/cyclotomic.hpp"
#include "concord/laurent.hpp"
#include "concord/presentation.hpp"

namespace concord {

// Cover presentation with the lifted meridian killed; its abelianization is
// the homology of the branched cover.
Presentation branched_quotient(const CoverPresentation& cov);

// Determinant-quotient invariant of a deficiency-one presentation with degree
// map eta and character chi (values mod d on the generators): build the Fox
// Jacobian, drop the lowest-index column of nonzero degree, push the entries
// through x_k -> zeta_d^chi[k] t^eta[k], take the Laurent determinant, divide
// by the image of (deleted generator - 1), and multiply by (t - 1) when chi
// is trivial.  The result is returned in canonical unit form.
LaurentUnitForm<Cyclotomic> wada_invariant(const Presentation& p, long d,
                                           const std::vector<long>& chi);

struct TwistedPolynomial {
    long d = 1;  // character modulus
    long n = 1;  // cover degree
    LaurentUnitForm<Cyclotomic> value;
    std::vector<long> character;       // chi on the branched homology coordinates
    std::vector<Int> homology_orders;  // cyclic factors of the branched homology
};

// Twisted Alexander polynomial of the n-fold cyclic cover of the knot with
// the given presentation, with chi specified on the coordinates produced by
// abelianize(branched_quotient(cover)).
TwistedPolynomial twisted_alexander_of_cover(const Presentation& base, long n, long d,
                                             const std::vector<long>& chi_homology);

// Coefficientwise Galois action zeta -> zeta^s, re-normalized.
LaurentUnitForm<Cyclotomic> galois_twist(const LaurentUnitForm<Cyclotomic>& f, long s);

// Product of the parts divided by (t-1)^(count-1), re-normalized.
LaurentUnitForm<Cyclotomic> connected_sum_twisted(
    const std::vector<LaurentUnitForm<Cyclotomic>>& parts);

}  // namespace concord
