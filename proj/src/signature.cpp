#include "concord/signature.hpp"

#include <stdexcept>
#include <vector>

#include "concord/cyclotomic.hpp"
#include "concord/laurent.hpp"
#include "concord/laurent_det.hpp"
#include "concord/real_cyclotomic.hpp"

namespace concord {

namespace {

// Sign variations across a coefficient sequence, zeros skipped.  For a
// polynomial with all-real roots and nonzero constant term Descartes' rule is
// an equality, so this counts the positive roots exactly.
int sign_variations(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

int tristram_levine_signature(const IntMatrix& V, long d, long j) {
    if (V.rows() != V.cols()) throw std::invalid_argument("Seifert matrix must be square");
    if (d < 1) throw std::invalid_argument("root-of-unity order must be positive");
    j = mod_norm(j, d);
    if (j == 0) return 0;  // omega = 1 makes the form vanish identically

    const std::size_t n = V.rows();
    if (n == 0) return 0;
    const Cyclotomic omega = Cyclotomic::zeta_power(d, j);
    const Cyclotomic a = Cyclotomic(1) - omega;
    const Cyclotomic b = Cyclotomic(1) - omega.conj();

    // characteristic polynomial det(tI - H) of H = (1-w)V + (1-conj w)V^T
    LaurentMatrix<Cyclotomic> m(n, std::vector<Laurent<Cyclotomic>>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            Cyclotomic h = a * Cyclotomic(Rat(V(r, c))) + b * Cyclotomic(Rat(V(c, r)));
            m[r][c].set(0, -h);
            if (r == c) m[r][c].set(1, Cyclotomic(1));
        }
    const Laurent<Cyclotomic> chi = laurent_det(m);
    if (chi.coeff(0) == Cyclotomic(0))
        throw std::domain_error("signature jump point: the form is singular at this omega");

    // Hermitian => real spectrum: coefficient signs decide the root signs
    std::vector<int> plain, alternated;
    for (long e = 0; e <= static_cast<long>(n); ++e) {
        const Cyclotomic ce = chi.coeff(e);
        const int s = ce == Cyclotomic(0) ? 0 : sign_of_real_cyclotomic(ce);
        plain.push_back(s);
        alternated.push_back(e % 2 == 0 ? s : -s);
    }
    const int positive = sign_variations(plain);
    const int negative = sign_variations(alternated);
    if (positive + negative != static_cast<int>(n))
        throw std::logic_error("sign-variation count does not exhaust the spectrum");
    return positive - negative;
}

bool seifert_metabolic_check(const IntMatrix& V, const IntMatrix& B) {
    if (V.rows() != V.cols()) throw std::invalid_argument("Seifert matrix must be square");
    if (V.rows() % 2 != 0 || B.rows() != V.rows() || B.cols() != V.rows() / 2)
        throw std::invalid_argument("metabolic basis must be rows(V) x rows(V)/2");
    if (smith_normal_form(B).rank != B.cols())
        throw std::invalid_argument("metabolic basis columns are linearly dependent");
    return (B.transposed() * V * B).is_zero();
}

}  // namespace concord
