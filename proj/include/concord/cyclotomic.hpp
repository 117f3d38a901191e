#pragma once

#include <string>
#include <vector>

#include "concord/polyq.hpp"
#include "concord/rational.hpp"

namespace concord {

// Element of the cyclotomic field Q(zeta_d), stored as a rational coefficient
// vector of length phi(d) over the power basis 1, zeta, ..., zeta^{phi(d)-1},
// i.e. reduced modulo the d-th cyclotomic polynomial.
//
// d = 1 and d = 2 degenerate to Q (zeta = 1 resp. -1).  Elements of modulus 1
// embed into any Q(zeta_d) and binary operations promote them automatically;
// mixing two distinct moduli > 1 is an error.
class Cyclotomic {
public:
    Cyclotomic() : d_(1), c_(1, Rat(0)) {}
    explicit Cyclotomic(long v) : d_(1), c_(1, Rat(v)) {}
    explicit Cyclotomic(const Rat& v) : d_(1), c_(1, v) {}
    // Reduces an arbitrary power expansion sum raw[i] * zeta^i mod Phi_d.
    Cyclotomic(long d, std::vector<Rat> raw_powers);

    static Cyclotomic zero(long d);
    static Cyclotomic one(long d);
    static Cyclotomic zeta_power(long d, long k);

    long modulus() const { return d_; }
    long degree() const { return static_cast<long>(c_.size()); }  // phi(d)
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // throws if not rational

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }
    friend bool operator==(const Cyclotomic& a, long v) { return a == Cyclotomic(v); }
    friend bool operator!=(const Cyclotomic& a, long v) { return !(a == v); }

    Cyclotomic inverse() const;

    // Galois automorphism sigma_n : zeta -> zeta^n, gcd(n, d) = 1.
    Cyclotomic galois(long n) const;
    // Complex conjugation sigma_{-1}.
    Cyclotomic conj() const { return galois(d_ - 1 == 0 ? 1 : d_ - 1); }

    // Full d-vector of coefficients over 1, zeta, ..., zeta^{d-1} (the
    // unreduced power basis; positions >= phi(d) are zero).
    std::vector<Rat> power_expansion() const;
    // For prime d: the unique representation over zeta^1..zeta^{d-1} with no
    // constant term (uses 1 + zeta + ... + zeta^{d-1} = 0).  Index 0 unused.
    std::vector<Rat> zero_constant_basis() const;

    std::string str(const std::string& var = "z") const;

private:
    long d_;
    std::vector<Rat> c_;

    static void align(Cyclotomic& a, Cyclotomic& b);
    Cyclotomic promoted(long d) const;
};

// d-th cyclotomic polynomial, integer coefficients, computed by recursive
// exact division of x^d - 1 by the Phi_e for proper divisors e.  Cached.
const QPoly& cyclotomic_polynomial(long d);

}  // namespace concord
