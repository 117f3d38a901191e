#include "concord/intmatrix.hpp"

#include <stdexcept>

namespace concord {

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.c_ != b.r_) throw std::domain_error("matrix product shape mismatch");
    IntMatrix r(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t k = 0; k < a.c_; ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.c_; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::domain_error("matrix difference shape mismatch");
    IntMatrix r(a.r_, a.c_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
    return r;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix r(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

namespace {

void swap_rows(IntMatrix& m, IntMatrix& u, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
}

void swap_cols(IntMatrix& m, IntMatrix& v, std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
}

// row i -= f * row j
void add_row(IntMatrix& m, IntMatrix& u, std::size_t i, std::size_t j, const Int& f) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) -= f * m(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) -= f * u(j, c);
}

void add_col(IntMatrix& m, IntMatrix& v, std::size_t i, std::size_t j, const Int& f) {
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, i) -= f * m(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, i) -= f * v(r, j);
}

void negate_row(IntMatrix& m, IntMatrix& u, std::size_t i) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = -m(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
}

// Locates the entry with smallest nonzero |value| in the submatrix from (k,k).
bool locate_pivot(const IntMatrix& m, std::size_t k, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = k; i < m.rows(); ++i)
        for (std::size_t j = k; j < m.cols(); ++j) {
            if (m(i, j) == 0) continue;
            Int a = abs(m(i, j));
            if (!found || a < best) {
                best = a;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    SmithForm f;
    IntMatrix m = a;
    IntMatrix u = IntMatrix::identity(a.rows());
    IntMatrix v = IntMatrix::identity(a.cols());
    const std::size_t n = std::min(a.rows(), a.cols());

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pi = k, pj = k;
        if (!locate_pivot(m, k, pi, pj)) break;
        swap_rows(m, u, k, pi);
        swap_cols(m, v, k, pj);
        for (;;) {
            bool clean = true;
            for (std::size_t i = k + 1; i < m.rows(); ++i) {
                if (m(i, k) == 0) continue;
                Int q = m(i, k) / m(k, k);
                add_row(m, u, i, k, q);
                if (m(i, k) != 0) {  // remainder smaller than pivot -> swap up
                    swap_rows(m, u, k, i);
                    clean = false;
                }
            }
            for (std::size_t j = k + 1; j < m.cols(); ++j) {
                if (m(k, j) == 0) continue;
                Int q = m(k, j) / m(k, k);
                add_col(m, v, j, k, q);
                if (m(k, j) != 0) {
                    swap_cols(m, v, k, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide every remaining entry; if not, fold the
            // offending row in and restart the reduction
            bool divides = true;
            for (std::size_t i = k + 1; i < m.rows() && divides; ++i)
                for (std::size_t j = k + 1; j < m.cols() && divides; ++j)
                    if (m(i, j) % m(k, k) != 0) {
                        add_row(m, u, k, i, Int(-1));  // row k += row i
                        divides = false;
                    }
            if (divides) break;
        }
        if (m(k, k) < 0) negate_row(m, u, k);
    }

    f.u = u;
    f.v = v;
    f.d = m;
    if (!(u * a * v == m)) throw std::logic_error("smith decomposition self-check failed");
    for (std::size_t k = 0; k < n; ++k) {
        f.diagonal.push_back(m(k, k));
        if (m(k, k) != 0) ++f.rank;
        if (m(k, k) > 1) f.nontrivial_factors.push_back(m(k, k));
    }
    for (std::size_t k = 0; k + 1 < f.rank; ++k)
        if (f.diagonal[k + 1] % f.diagonal[k] != 0)
            throw std::logic_error("smith divisibility chain violated");
    return f;
}

Int int_det(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::domain_error("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return Int(1);
    IntMatrix m = a;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t pi = k + 1;
            while (pi < n && m(pi, k) == 0) ++pi;
            if (pi == n) return Int(0);
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(pi, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : Int(-m(n - 1, n - 1));
}

std::vector<std::vector<Rat>> rat_inverse(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::domain_error("rat_inverse needs a square matrix");
        inv[i][i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace concord
