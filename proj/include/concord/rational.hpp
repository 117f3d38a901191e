#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace concord {

// Exact arithmetic backbone.  Integers and rationals are GMP objects; a
// rational is always kept in canonical form (gcd(num,den)=1, den>0), which
// mpq_class maintains as long as raw constructions go through make_rat().
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" or "p".  Throws on malformed input or zero denominator.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw std::domain_error("malformed rational: " + s);
    }
}

inline std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (root) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
    return true;
}

// Exact square test for rationals; fills *root with the nonnegative root.
inline bool rational_is_square(const Rat& q, Rat* root = nullptr) {
    if (q < 0) return false;
    Int rn, rd;
    if (!is_perfect_square(q.get_num(), &rn)) return false;
    if (!is_perfect_square(q.get_den(), &rd)) return false;
    if (root) *root = make_rat(rn, rd);
    return true;
}

inline bool is_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline bool is_prime(long n) { return is_prime(Int(n)); }

inline long next_prime_above(long n) {
    Int p;
    mpz_nextprime(p.get_mpz_t(), Int(n).get_mpz_t());
    if (!p.fits_slong_p()) throw std::overflow_error("prime exceeds long range");
    return p.get_si();
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

inline std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), Int(static_cast<unsigned long>(a)).get_mpz_t(),
                   Int(static_cast<unsigned long>(m)).get_mpz_t()) == 0)
        throw std::domain_error("not invertible");
    return r.get_ui();
}

inline long mod_norm(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

// Multiplicative order of a mod n (n small); 0 if gcd(a,n) != 1.
inline long multiplicative_order(long a, long n) {
    a = mod_norm(a, n);
    Int g;
    mpz_gcd(g.get_mpz_t(), Int(a).get_mpz_t(), Int(n).get_mpz_t());
    if (g != 1) return 0;
    long ord = 1;
    long x = a % n;
    while (x != 1 % n) {
        x = static_cast<long>(mulmod_u64(static_cast<std::uint64_t>(x),
                                         static_cast<std::uint64_t>(a),
                                         static_cast<std::uint64_t>(n)));
        ++ord;
        if (ord > n) throw std::logic_error("order computation diverged");
    }
    return ord;
}

inline long euler_phi(long n) {
    if (n <= 0) throw std::domain_error("euler_phi of nonpositive argument");
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

inline bool is_prime_power(long n, long* base = nullptr) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            if (n != 1) return false;
            if (base) *base = p;
            return true;
        }
    }
    if (base) *base = n;  // n itself prime
    return true;
}

}  // namespace concord
