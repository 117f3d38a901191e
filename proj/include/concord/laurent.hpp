#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "concord/rational.hpp"

namespace concord {

struct NonExactDivision : std::domain_error {
    NonExactDivision() : std::domain_error("non-exact Laurent division") {}
};
struct ZeroDeterminant : std::domain_error {
    ZeroDeterminant() : std::domain_error("Laurent determinant vanished") {}
};

// Laurent polynomial over a field K (K = Rat or Cyclotomic).  Sparse map from
// exponent to nonzero coefficient.  The canonical unit form used throughout
// has lowest exponent 0 and constant coefficient 1; laurent_normalize splits
// any nonzero p as p = scalar * t^shift * canonical.
template <class K>
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(const K& constant) {
        if (!(constant == K(0))) t_[0] = constant;
    }
    static Laurent term(const K& coeff, long exp) {
        Laurent p;
        if (!(coeff == K(0))) p.t_[exp] = coeff;
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    long lowest() const { return t_.begin()->first; }    // pre: nonzero
    long highest() const { return t_.rbegin()->first; }  // pre: nonzero
    long span() const { return is_zero() ? -1 : highest() - lowest(); }
    const std::map<long, K>& terms() const { return t_; }

    K coeff(long e) const {
        auto it = t_.find(e);
        return it == t_.end() ? K(0) : it->second;
    }

    void set(long e, const K& v) {
        if (v == K(0)) t_.erase(e);
        else t_[e] = v;
    }
    void add(long e, const K& v) { set(e, coeff(e) + v); }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        Laurent r = a;
        for (const auto& [e, v] : b.t_) r.add(e, v);
        return r;
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) {
        Laurent r = a;
        for (const auto& [e, v] : b.t_) r.add(e, K(0) - v);
        return r;
    }
    Laurent operator-() const {
        Laurent r;
        for (const auto& [e, v] : t_) r.t_[e] = K(0) - v;
        return r;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ea, va] : a.t_)
            for (const auto& [eb, vb] : b.t_) r.add(ea + eb, va * vb);
        return r;
    }
    friend Laurent operator*(const Laurent& a, const K& s) {
        Laurent r;
        if (s == K(0)) return r;
        for (const auto& [e, v] : a.t_) r.t_[e] = v * s;
        return r;
    }
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    Laurent shifted(long k) const {
        Laurent r;
        for (const auto& [e, v] : t_) r.t_[e + k] = v;
        return r;
    }

    K eval(const K& x) const {  // pre: all exponents >= 0
        K r(0), p(1);
        long at = 0;
        for (const auto& [e, v] : t_) {
            if (e < 0) throw std::domain_error("eval of Laurent with negative exponent");
            for (; at < e; ++at) p = p * x;
            r = r + v * p;
        }
        return r;
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, v] : t_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << coeff_str(v) << ")";
            if (e != 0) os << "*" << var << "^" << e;
        }
        return os.str();
    }

private:
    std::map<long, K> t_;

    static std::string coeff_str(const Rat& v) { return rat_str(v); }
    template <class T>
    static std::string coeff_str(const T& v) { return v.str(); }
};

template <class K>
struct LaurentUnitForm {
    Laurent<K> canonical;  // lowest exponent 0, constant coefficient 1
    K scalar;              // p = scalar * t^shift * canonical
    long shift = 0;
};

template <class K>
LaurentUnitForm<K> laurent_normalize(const Laurent<K>& p) {
    if (p.is_zero()) throw std::domain_error("cannot normalize zero Laurent polynomial");
    LaurentUnitForm<K> r;
    r.shift = p.lowest();
    r.scalar = p.terms().begin()->second;
    K inv = K(1) / r.scalar;
    for (const auto& [e, v] : p.terms()) r.canonical.set(e - r.shift, v * inv);
    return r;
}

template <class K>
Laurent<K> laurent_canonical(const Laurent<K>& p) {
    return laurent_normalize(p).canonical;
}

// Unit equivalence: equal up to scalar * t^k.
template <class K>
bool laurent_unit_equal(const Laurent<K>& a, const Laurent<K>& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return laurent_canonical(a) == laurent_canonical(b);
}

// Exact division; throws NonExactDivision if b does not divide a.
template <class K>
Laurent<K> laurent_div_exact(const Laurent<K>& a, const Laurent<K>& b) {
    if (b.is_zero()) throw std::domain_error("Laurent division by zero");
    if (a.is_zero()) return Laurent<K>();
    Laurent<K> rem = a, q;
    const long db = b.highest();
    const long qmin = a.lowest() - b.lowest();  // lowest possible quotient exponent
    const K lead = b.terms().rbegin()->second;
    while (!rem.is_zero()) {
        long e = rem.highest();
        if (e - db < qmin) throw NonExactDivision();
        K f = rem.terms().rbegin()->second / lead;
        q.add(e - db, f);
        rem = rem - b.shifted(e - db) * f;
        if (!rem.is_zero() && rem.highest() >= e)
            throw std::logic_error("Laurent division failed to reduce");
    }
    return q;
}

}  // namespace concord
