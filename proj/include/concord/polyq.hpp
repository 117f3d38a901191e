#pragma once

#include <vector>

#include "concord/rational.hpp"

namespace concord {

// Dense univariate polynomial over Q, lowest degree first.  Used internally
// for cyclotomic modulus arithmetic, minimal polynomials of real cyclotomic
// generators and Sturm sequences.  Zero polynomial <=> empty coefficient list.
struct QPoly {
    std::vector<Rat> c;

    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }

    static QPoly constant(const Rat& v) {
        QPoly p;
        if (v != 0) p.c.push_back(v);
        return p;
    }
    // x^k
    static QPoly monomial(std::size_t k, const Rat& v = Rat(1)) {
        QPoly p;
        if (v != 0) {
            p.c.assign(k + 1, Rat(0));
            p.c[k] = v;
        }
        return p;
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    // degree of zero polynomial reported as -1
    long degree() const { return static_cast<long>(c.size()) - 1; }
    const Rat& operator[](std::size_t i) const { return c[i]; }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        QPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        r.trim();
        return r;
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) {
        QPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
        r.trim();
        return r;
    }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly();
        QPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    friend QPoly operator*(const QPoly& a, const Rat& s) {
        QPoly r = a;
        for (auto& x : r.c) x *= s;
        r.trim();
        return r;
    }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }

    Rat eval(const Rat& x) const {
        Rat r(0);
        for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    }

    QPoly derivative() const {
        QPoly r;
        if (c.size() <= 1) return r;
        r.c.resize(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * Rat(static_cast<long>(i));
        r.trim();
        return r;
    }
};

// Field division with remainder: a = q*b + r, deg r < deg b.
inline void qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    q = QPoly();
    r = a;
    long db = b.degree();
    const Rat& lead = b.c.back();
    while (!r.is_zero() && r.degree() >= db) {
        long shift = r.degree() - db;
        Rat f = r.c.back() / lead;
        if (q.c.size() < static_cast<std::size_t>(shift + 1)) q.c.resize(shift + 1, Rat(0));
        q.c[shift] += f;
        for (long i = 0; i <= db; ++i) r.c[shift + i] -= f * b.c[i];
        r.trim();
    }
    q.trim();
}

inline QPoly qpoly_div_exact(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    qpoly_divmod(a, b, q, r);
    if (!r.is_zero()) throw std::domain_error("non-exact polynomial division");
    return q;
}

inline QPoly qpoly_mod(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    qpoly_divmod(a, b, q, r);
    return r;
}

// Monic gcd.
inline QPoly qpoly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = qpoly_mod(a, b);
        a = b;
        b = r;
    }
    if (!a.is_zero()) {
        Rat lead = a.c.back();
        for (auto& x : a.c) x /= lead;
    }
    return a;
}

// Extended gcd: returns g (monic) with u*a + v*b = g.
inline QPoly qpoly_ext_gcd(const QPoly& a, const QPoly& b, QPoly& u, QPoly& v) {
    QPoly r0 = a, r1 = b;
    QPoly u0 = QPoly::constant(Rat(1)), u1;
    QPoly v0, v1 = QPoly::constant(Rat(1));
    while (!r1.is_zero()) {
        QPoly q, r;
        qpoly_divmod(r0, r1, q, r);
        QPoly u2 = u0 - q * u1;
        QPoly v2 = v0 - q * v1;
        r0 = r1; r1 = r;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (!r0.is_zero()) {
        Rat lead = r0.c.back();
        for (auto& x : r0.c) x /= lead;
        for (auto& x : u0.c) x /= lead;
        for (auto& x : v0.c) x /= lead;
    }
    u = u0;
    v = v0;
    return r0;
}

}  // namespace concord
