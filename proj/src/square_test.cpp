#include "concord/square_test.hpp"

#include <cstdlib>
#include <numeric>

namespace concord {

namespace {

// ---- F_q[z] / Phi_d(z) with word-sized q ---------------------------------

struct FqQuot {
    long q;
    std::vector<std::uint64_t> phi;  // monic modulus, lowest degree first
    std::size_t deg;                 // degree of phi

    using Elt = std::vector<std::uint64_t>;  // length deg, coeffs mod q

    Elt zero() const { return Elt(deg, 0); }
    Elt constant(std::uint64_t c) const {
        Elt e(deg, 0);
        if (deg) e[0] = c % static_cast<std::uint64_t>(q);
        return e;
    }
    bool is_zero(const Elt& a) const {
        for (auto x : a)
            if (x) return false;
        return true;
    }
    bool is_one(const Elt& a) const {
        if (a.empty() || a[0] != 1) return false;
        for (std::size_t i = 1; i < a.size(); ++i)
            if (a[i]) return false;
        return true;
    }
    bool is_minus_one(const Elt& a) const {
        if (a.empty() || a[0] != static_cast<std::uint64_t>(q - 1)) return false;
        for (std::size_t i = 1; i < a.size(); ++i)
            if (a[i]) return false;
        return true;
    }

    Elt mul(const Elt& a, const Elt& b) const {
        const std::uint64_t Q = static_cast<std::uint64_t>(q);
        std::vector<std::uint64_t> conv(2 * deg - 1, 0);
        for (std::size_t i = 0; i < deg; ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < deg; ++j) {
                if (!b[j]) continue;
                conv[i + j] = (conv[i + j] + mulmod_u64(a[i], b[j], Q)) % Q;
            }
        }
        // reduce by monic phi
        for (std::size_t i = conv.size(); i-- > deg;) {
            std::uint64_t lead = conv[i];
            if (!lead) continue;
            conv[i] = 0;
            for (std::size_t j = 0; j < deg; ++j) {
                std::uint64_t sub = mulmod_u64(lead, phi[j], Q);
                std::uint64_t& slot = conv[i - deg + j];
                slot = (slot + Q - sub) % Q;
            }
        }
        conv.resize(deg);
        return conv;
    }

    Elt pow(Elt base, const Int& e) const {
        Elt r = constant(1);
        const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (std::size_t i = bits; i-- > 0;) {
            r = mul(r, r);
            if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, base);
        }
        return r;
    }
};

// Tonelli-Shanks square root in F_Q, Q = q^deg (phi irreducible mod q).
// Returns false if x is a non-residue.
bool field_sqrt(const FqQuot& F, const FqQuot::Elt& x, FqQuot::Elt& out) {
    if (F.is_zero(x)) {
        out = F.zero();
        return true;
    }
    Int Q;
    mpz_ui_pow_ui(Q.get_mpz_t(), static_cast<unsigned long>(F.q),
                  static_cast<unsigned long>(F.deg));
    Int half = (Q - 1) / 2;
    FqQuot::Elt euler = F.pow(x, half);
    if (F.is_minus_one(euler)) return false;
    if (!F.is_one(euler)) throw std::logic_error("euler criterion in non-field quotient");

    Int t = Q - 1;
    unsigned long s = 0;
    while (mpz_even_p(t.get_mpz_t())) {
        t /= 2;
        ++s;
    }
    // non-residue: enumerate field elements by base-q digits.  Exactly half
    // the units are non-residues, so this terminates quickly; base-field
    // constants are all squares when deg is even, hence the richer family.
    FqQuot::Elt n;
    bool found = false;
    for (Int k(2); !found && k < Q; ++k) {
        FqQuot::Elt cand = F.zero();
        Int rem = k;
        for (std::size_t i = 0; i < F.deg && rem != 0; ++i) {
            cand[i] = mpz_fdiv_ui(rem.get_mpz_t(), static_cast<unsigned long>(F.q));
            rem /= F.q;
        }
        if (F.is_minus_one(F.pow(cand, half))) {
            n = cand;
            found = true;
        }
    }
    if (!found) throw std::logic_error("no quadratic non-residue found");

    unsigned long m = s;
    FqQuot::Elt c = F.pow(n, t);
    FqQuot::Elt r = F.pow(x, (t + 1) / 2);
    FqQuot::Elt tt = F.pow(x, t);
    while (!F.is_one(tt)) {
        FqQuot::Elt probe = tt;
        unsigned long i = 0;
        while (!F.is_one(probe)) {
            probe = F.mul(probe, probe);
            ++i;
            if (i == m) throw std::logic_error("tonelli-shanks diverged");
        }
        FqQuot::Elt b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = F.mul(b, b);
        m = i;
        c = F.mul(b, b);
        tt = F.mul(tt, c);
        r = F.mul(r, b);
    }
    out = r;
    return true;
}

// ---- (Z/q^e)[z] / Phi_d(z) ------------------------------------------------

struct LiftQuot {
    Int mod;                 // q^e
    std::vector<Int> phi;    // monic integer modulus
    std::size_t deg;

    using Elt = std::vector<Int>;

    Elt reduce_mod(Elt a) const {
        for (auto& x : a) {
            x %= mod;
            if (x < 0) x += mod;
        }
        return a;
    }

    Elt mul(const Elt& a, const Elt& b) const {
        std::vector<Int> conv(2 * deg - 1, Int(0));
        for (std::size_t i = 0; i < deg; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < deg; ++j) {
                if (b[j] == 0) continue;
                conv[i + j] += a[i] * b[j];
            }
        }
        for (std::size_t i = conv.size(); i-- > deg;) {
            Int lead = conv[i] % mod;
            conv[i] = 0;
            if (lead == 0) continue;
            for (std::size_t j = 0; j < deg; ++j) conv[i - deg + j] -= lead * phi[j];
        }
        conv.resize(deg);
        return reduce_mod(std::move(conv));
    }

    Elt sub(const Elt& a, const Elt& b) const {
        Elt r(deg);
        for (std::size_t i = 0; i < deg; ++i) {
            r[i] = (a[i] - b[i]) % mod;
            if (r[i] < 0) r[i] += mod;
        }
        return r;
    }

    Elt scale(const Elt& a, const Int& s) const {
        Elt r(deg);
        for (std::size_t i = 0; i < deg; ++i) {
            r[i] = (a[i] * s) % mod;
            if (r[i] < 0) r[i] += mod;
        }
        return r;
    }
};

std::vector<Int> phi_int_coeffs(long d) {
    const QPoly& phi = cyclotomic_polynomial(d);
    std::vector<Int> out;
    out.reserve(phi.c.size());
    for (const auto& r : phi.c) {
        if (r.get_den() != 1) throw std::logic_error("cyclotomic polynomial not integral");
        out.push_back(r.get_num());
    }
    return out;
}

// Denominator-cleared coefficient vector: x = (1/den) * sum ints[i] zeta^i.
void clear_denominators(const Cyclotomic& x, std::vector<Int>& ints, Int& den) {
    den = 1;
    for (const auto& c : x.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    ints.clear();
    for (const auto& c : x.coeffs()) ints.push_back(c.get_num() * (den / c.get_den()));
}

// Multiplicative order of q mod d; 0 when gcd != 1.
long residue_order(long q, long d) { return multiplicative_order(mod_norm(q, d), d); }

// Finds a root of Phi_d mod q for a split prime q = 1 (mod d): an element of
// exact multiplicative order d.
long find_unity_root(long q, long d) {
    if (d == 1) return 1;
    std::uint64_t Q = static_cast<std::uint64_t>(q);
    std::vector<long> prime_divs;
    long m = d;
    for (long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            prime_divs.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) prime_divs.push_back(m);
    for (long base = 2; base < q; ++base) {
        std::uint64_t g = powmod_u64(static_cast<std::uint64_t>(base),
                                     static_cast<std::uint64_t>((q - 1) / d), Q);
        if (g == 1) continue;
        bool exact = true;
        for (long p : prime_divs)
            if (powmod_u64(g, static_cast<std::uint64_t>(d / p), Q) == 1) {
                exact = false;
                break;
            }
        if (exact) return static_cast<long>(g);
    }
    throw std::logic_error("no primitive root of unity mod split prime");
}

int legendre_u64(std::uint64_t a, long q) {
    a %= static_cast<std::uint64_t>(q);
    if (a == 0) return 0;
    std::uint64_t e = powmod_u64(a, static_cast<std::uint64_t>((q - 1) / 2),
                                 static_cast<std::uint64_t>(q));
    return e == 1 ? 1 : -1;
}

// Attempts exact square-root reconstruction at an inert prime q.  Returns
// true and fills root on success; false means "no conclusion at this prime".
bool reconstruct_at_inert_prime(const Cyclotomic& x, const std::vector<Int>& ints,
                                const Int& den, long q, bool& proven_nonsquare,
                                Cyclotomic& root) {
    const long d = x.modulus();
    const std::size_t deg = static_cast<std::size_t>(euler_phi(d));
    std::vector<Int> phiz = phi_int_coeffs(d);

    FqQuot F;
    F.q = q;
    F.deg = deg;
    F.phi.resize(deg);
    for (std::size_t i = 0; i < deg; ++i)
        F.phi[i] = mpz_fdiv_ui(phiz[i].get_mpz_t(), static_cast<unsigned long>(q));

    FqQuot::Elt x0(deg, 0);
    bool unit = false;
    for (std::size_t i = 0; i < deg; ++i) {
        x0[i] = mpz_fdiv_ui(ints[i].get_mpz_t(), static_cast<unsigned long>(q));
        if (x0[i]) unit = true;
    }
    if (!unit) return false;  // bad reduction for lifting

    FqQuot::Elt y0;
    if (!field_sqrt(F, x0, y0)) {
        proven_nonsquare = true;  // square image would have to be a residue
        return false;
    }
    if (F.is_zero(y0)) return false;

    // Newton lifting of the inverse square root: u <- u(3 - x u^2)/2.
    // Start from u0 = 1/y0 in F_Q.
    Int Qfield;
    mpz_ui_pow_ui(Qfield.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(deg));
    FqQuot::Elt u0 = F.pow(y0, Qfield - 2);

    const int max_doublings = 14;  // up to q^(2^14)-sized moduli guard below
    LiftQuot L;
    L.deg = deg;
    L.phi = phiz;
    L.mod = q;
    LiftQuot::Elt u(deg), xv(deg);
    for (std::size_t i = 0; i < deg; ++i) u[i] = Int(static_cast<unsigned long>(u0[i]));

    for (int step = 0; step < max_doublings; ++step) {
        // double precision
        Int newmod = L.mod * L.mod;
        if (mpz_sizeinbase(newmod.get_mpz_t(), 2) > 12000) break;
        L.mod = newmod;
        for (std::size_t i = 0; i < deg; ++i) {
            xv[i] = ints[i] % L.mod;
            if (xv[i] < 0) xv[i] += L.mod;
        }
        // u <- u * (3 - x u^2) / 2  (mod q^{2^k})
        LiftQuot::Elt u2 = L.mul(u, u);
        LiftQuot::Elt xu2 = L.mul(xv, u2);
        LiftQuot::Elt three = L.reduce_mod(LiftQuot::Elt(deg, Int(0)));
        three[0] = 3;
        LiftQuot::Elt inner = L.sub(three, xu2);
        Int inv2;
        mpz_invert(inv2.get_mpz_t(), Int(2).get_mpz_t(), L.mod.get_mpz_t());
        u = L.scale(L.mul(u, inner), inv2);
        LiftQuot::Elt y = L.mul(xv, u);

        // centered lift -> candidate root (divided by den)
        std::vector<Rat> cand(deg);
        Int halfmod = L.mod / 2;
        for (std::size_t i = 0; i < deg; ++i) {
            Int v = y[i];
            if (v > halfmod) v -= L.mod;
            cand[i] = make_rat(v, den);
        }
        Cyclotomic candidate(d, cand);
        if (candidate * candidate == x) {
            root = candidate;
            return true;
        }
    }
    return false;
}

}  // namespace

int square_prime_budget() {
    if (const char* env = std::getenv("CONCORD_PRIME_BUDGET")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 25;
}

long embed_mod_prime(const Cyclotomic& x, long q, long g) {
    std::vector<Int> ints;
    Int den;
    clear_denominators(x, ints, den);
    if (mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(q)) == 0)
        throw std::domain_error("bad reduction: denominator divisible by witness prime");
    std::uint64_t Q = static_cast<std::uint64_t>(q);
    std::uint64_t acc = 0, gp = 1;
    for (const auto& c : ints) {
        std::uint64_t cv = mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(q));
        acc = (acc + mulmod_u64(cv, gp, Q)) % Q;
        gp = mulmod_u64(gp, static_cast<std::uint64_t>(mod_norm(g, q)), Q);
    }
    std::uint64_t dv = mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(q));
    return static_cast<long>(mulmod_u64(acc, invmod_u64(dv, Q), Q));
}

std::vector<std::pair<long, long>> collect_nonresidue_witnesses(const Cyclotomic& x,
                                                                int count, long above) {
    std::vector<std::pair<long, long>> out;
    const long d = x.modulus();
    std::vector<Int> ints;
    Int den;
    clear_denominators(x, ints, den);
    long q = above;
    int scanned = 0;
    while (static_cast<int>(out.size()) < count && scanned < 4000) {
        q = next_prime_above(q);
        ++scanned;
        if (q <= 2 || (d > 1 && mod_norm(q, d) != 1)) continue;
        if (mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(q)) == 0) continue;
        long g = find_unity_root(q, d);
        long val = embed_mod_prime(x, q, g);
        if (val == 0) continue;
        if (legendre_u64(static_cast<std::uint64_t>(val), q) == -1) out.emplace_back(q, g);
    }
    return out;
}

SquareCertificate is_square(const Cyclotomic& x) { return is_square(x, square_prime_budget()); }

SquareCertificate is_square(const Cyclotomic& x, int prime_budget) {
    SquareCertificate cert;
    const long d = x.modulus();

    if (x.is_zero()) {
        cert.verdict = SquareCertificate::Verdict::yes;
        cert.root = Cyclotomic::zero(d);
        return cert;
    }

    // Q itself (d <= 2): decide exactly, then attach a witness for "no".
    if (d <= 2) {
        Rat root;
        if (rational_is_square(x.rational_value(), &root)) {
            cert.verdict = SquareCertificate::Verdict::yes;
            cert.root = Cyclotomic(root);
            return cert;
        }
        auto ws = collect_nonresidue_witnesses(x, 1);
        if (ws.empty()) {
            cert.note = "rational non-square but no witness prime found in scan";
            return cert;
        }
        cert.verdict = SquareCertificate::Verdict::no;
        cert.witness_prime = ws[0].first;
        cert.witness_embedding = ws[0].second;
        return cert;
    }

    std::vector<Int> ints;
    Int den;
    clear_denominators(x, ints, den);
    // Reconstruction works with the denominator-cleared integral element
    // den^2 * x, whose root is den * sqrt(x) and lies in Z[zeta].
    std::vector<Int> ints2(ints.size());
    for (std::size_t i = 0; i < ints.size(); ++i) ints2[i] = ints[i] * den;
    Cyclotomic x_int = x * Cyclotomic(Rat(den * den));

    const long phi_d = euler_phi(d);
    int split_tried = 0, inert_tried = 0;
    bool proven_nonsquare = false;
    long q = 2;
    int scanned = 0;
    while ((split_tried < prime_budget || inert_tried < 3) && scanned < 6000) {
        q = next_prime_above(q);
        ++scanned;
        if (q == 2) continue;
        if (d % q == 0) continue;  // ramified
        if (mpz_fdiv_ui(den.get_mpz_t(), static_cast<unsigned long>(q)) == 0) continue;
        long f = residue_order(q, d);
        if (f == 1 && split_tried < prime_budget) {
            ++split_tried;
            long g = find_unity_root(q, d);
            long val = embed_mod_prime(x, q, g);
            if (val == 0) continue;
            if (legendre_u64(static_cast<std::uint64_t>(val), q) == -1) {
                cert.verdict = SquareCertificate::Verdict::no;
                cert.witness_prime = q;
                cert.witness_embedding = g;
                return cert;
            }
        } else if (f == phi_d && inert_tried < 3 && !proven_nonsquare) {
            ++inert_tried;
            Cyclotomic root = Cyclotomic::zero(d);
            if (reconstruct_at_inert_prime(x_int, ints2, Int(1), q, proven_nonsquare, root)) {
                Cyclotomic scaled = root / Cyclotomic(Rat(den));
                if (!(scaled * scaled == x)) throw std::logic_error("square root verification failed");
                cert.verdict = SquareCertificate::Verdict::yes;
                cert.root = scaled;
                return cert;
            }
        }
    }

    cert.note = proven_nonsquare
                    ? "non-square at an inert prime but no split-prime witness within budget"
                    : "prime budget exhausted";
    return cert;
}

}  // namespace concord
