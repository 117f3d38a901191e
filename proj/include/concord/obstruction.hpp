#pragma once

#include <optional>
#include <string>
#include <vector>

#include "concord/abelian.hpp"
#include "concord/knot.hpp"
#include "concord/laurent.hpp"
#include "concord/metabolizer.hpp"
#include "concord/square_test.hpp"
#include "concord/twisted.hpp"

namespace concord {

// ---- Fox-Milnor condition over Q ----------------------------------------

enum class FoxMilnorVerdict { passes, fails, indeterminate };

struct FoxMilnorFactor {
    Laurent<Rat> factor;  // primitive integer coefficients, exponents from 0
    int multiplicity = 0;
    bool symmetric = false;  // unit-equal to its own reverse t^deg f(1/t)
};

struct FoxMilnorResult {
    FoxMilnorVerdict verdict = FoxMilnorVerdict::indeterminate;
    std::vector<FoxMilnorFactor> factors;
    Laurent<Rat> unfactored;  // nonconstant remainder out of scope
    std::string note;
};

// Slice condition on an Alexander polynomial: passes iff every symmetric
// irreducible factor has even multiplicity and the asymmetric ones pair up
// under t -> 1/t.  Factoring is by rational roots plus Kronecker's method for
// quadratic divisors; a remainder of degree >= 3 is reported indeterminate,
// never guessed at.
FoxMilnorResult fox_milnor_test(const Laurent<Rat>& delta);

// Coefficientwise conjugation combined with t -> 1/t.
Laurent<Cyclotomic> laurent_conj_reverse(const Laurent<Cyclotomic>& f);

// ---- norm factorization over Q(zeta_d) -----------------------------------

enum class NormVerdict { factors, obstructed, indeterminate };

struct NormFactorization {
    NormVerdict verdict = NormVerdict::indeterminate;
    int stripped_power = 0;  // the (t-1)^s factor removed up front
    std::vector<SquareCertificate> certificates;  // discriminant certificates used
    std::optional<Laurent<Cyclotomic>> norm_half;  // f when the form was exhibited
    std::string note;
};

// Decides whether value = a * f(t) * conj(f)(1/t) * (t-1)^s up to units of
// Q(zeta_d)[t,1/t], with s = 0 for a trivial character and 1 otherwise.
// Strips (t-1)^s (throws std::domain_error if it does not divide), then works
// on the residual:
//   - odd span or failed conjugate-symmetry: obstructed outright;
//   - span 2: complete, via a discriminant square certificate;
//   - span 4 with two known quadratic factors multiplying to the residual:
//     complete, by comparing against the conjugate-reverse and, when the
//     factors split, pairing roots;
//   - anything else unresolved degrades to indeterminate.
// "obstructed" is only ever returned on the strength of definite
// certificates.
NormFactorization norm_factorization_test(
    const Laurent<Cyclotomic>& value, long d, bool trivial_character,
    const std::vector<Laurent<Cyclotomic>>& known_factors = {});

// ---- order-two obstruction pipeline ---------------------------------------

enum class OrderTwoVerdict { obstructed, inconclusive, not_algebraically_slice };

struct CharacterRecord {
    std::vector<Int> element;  // h in H+H with chi = d * lk(h, -)
    Character character;
    LaurentUnitForm<Cyclotomic> polynomial;  // twisted polynomial of K # K at chi
    NormFactorization factorization;
    std::string note;
};

struct MetabolizerRecord {
    Metabolizer metabolizer;
    std::vector<CharacterRecord> characters;
    bool blocked = false;  // some tested character definitely fails to factor
};

struct ObstructionReport {
    std::string knot;
    long d = 0;  // character modulus = |H_1| of the 2-fold branched cover
    LinkedAbelianGroup summand;  // H_1 of the 2-fold branched cover of K
    LinkedAbelianGroup group;    // H_1 for K # K
    MetabolizerList metabolizers;
    std::vector<MetabolizerRecord> records;
    OrderTwoVerdict verdict = OrderTwoVerdict::inconclusive;
    std::string reason;
};

// Order-two obstruction for K through the 2-fold branched cover of K # K:
// enumerate the metabolizers of H + H, take for each the vanishing character
// cut out by linking with an element of the metabolizer, assemble the twisted
// polynomial of the sum from per-summand computations, and run the norm
// factorization test.  Verdict is `obstructed` only when every metabolizer
// carries a character whose polynomial definitely fails.  `all_characters`
// widens from one character per metabolizer to every element with both
// components nonzero.
ObstructionReport order_two_report(const KnotRecord& k, bool all_characters = false);

}  // namespace concord
