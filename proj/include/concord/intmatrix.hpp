#pragma once

#include <vector>

#include "concord/rational.hpp"

namespace concord {

// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : r_(rows), c_(cols), a_(rows * cols, Int(0)) {}
    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Int& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    IntMatrix transposed() const;
    bool is_zero() const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Int> a_;
};

struct SmithForm {
    IntMatrix u, d, v;  // u * a * v = d, u and v unimodular
    std::vector<Int> diagonal;           // all diagonal entries of d (>= 0)
    std::vector<Int> nontrivial_factors; // diagonal entries > 1, divisibility chain
    std::size_t rank = 0;                // number of nonzero diagonal entries
};

// Smith normal form with unimodular transform tracking.  The decomposition
// u*a*v = d is verified internally before returning.
SmithForm smith_normal_form(const IntMatrix& a);

// Determinant via Bareiss fraction-free elimination.
Int int_det(const IntMatrix& a);

// Exact inverse of a rational matrix (Gauss-Jordan); throws if singular.
std::vector<std::vector<Rat>> rat_inverse(std::vector<std::vector<Rat>> m);

}  // namespace concord
