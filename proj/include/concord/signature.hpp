#pragma once

#include "concord/intmatrix.hpp"

namespace concord {

// Tristram-Levine signature of the Seifert matrix V at omega = zeta_d^j:
// the signature of the Hermitian form (1-omega)V + (1-conj(omega))V^T over
// Q(zeta_d).  omega = 1 gives the zero form, hence 0.  Where the form is
// singular the signature jumps and is undefined; that raises
// std::domain_error.
int tristram_levine_signature(const IntMatrix& V, long d, long j);

// Checks that the columns of B annihilate the Seifert pairing, B^T V B = 0,
// with B of full column rank rows(V)/2.  Shape or rank defects are caller
// errors (std::invalid_argument); a nonzero product returns false.
bool seifert_metabolic_check(const IntMatrix& V, const IntMatrix& B);

}  // namespace concord
