#include "concord/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace concord {

namespace {

std::map<long, QPoly> g_phi_cache;
std::mutex g_phi_mutex;

QPoly compute_cyclotomic(long d) {
    // x^d - 1 = prod_{e | d} Phi_e(x)
    QPoly num = QPoly::monomial(static_cast<std::size_t>(d)) - QPoly::constant(Rat(1));
    for (long e = 1; e < d; ++e) {
        if (d % e == 0) num = qpoly_div_exact(num, cyclotomic_polynomial(e));
    }
    return num;
}

}  // namespace

const QPoly& cyclotomic_polynomial(long d) {
    if (d < 1) throw std::domain_error("cyclotomic polynomial needs d >= 1");
    {
        std::lock_guard<std::mutex> lk(g_phi_mutex);
        auto it = g_phi_cache.find(d);
        if (it != g_phi_cache.end()) return it->second;
    }
    QPoly p = d == 1 ? QPoly(std::vector<Rat>{Rat(-1), Rat(1)}) : compute_cyclotomic(d);
    std::lock_guard<std::mutex> lk(g_phi_mutex);
    return g_phi_cache.emplace(d, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic(long d, std::vector<Rat> raw_powers) : d_(d) {
    if (d < 1) throw std::domain_error("cyclotomic modulus must be >= 1");
    const QPoly& phi = cyclotomic_polynomial(d);
    QPoly r = qpoly_mod(QPoly(std::move(raw_powers)), phi);
    c_.assign(static_cast<std::size_t>(phi.degree()), Rat(0));
    for (std::size_t i = 0; i < r.c.size(); ++i) c_[i] = r.c[i];
}

Cyclotomic Cyclotomic::zero(long d) { return Cyclotomic(d, {}); }

Cyclotomic Cyclotomic::one(long d) { return Cyclotomic(d, {Rat(1)}); }

Cyclotomic Cyclotomic::zeta_power(long d, long k) {
    std::vector<Rat> raw(static_cast<std::size_t>(mod_norm(k, d)) + 1, Rat(0));
    raw.back() = Rat(1);
    return Cyclotomic(d, std::move(raw));
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic element is not rational");
    return c_[0];
}

Cyclotomic Cyclotomic::promoted(long d) const {
    if (d_ == d) return *this;
    if (d_ != 1) throw std::domain_error("cyclotomic modulus mismatch");
    Cyclotomic r = zero(d);
    r.c_[0] = c_[0];
    return r;
}

void Cyclotomic::align(Cyclotomic& a, Cyclotomic& b) {
    if (a.d_ == b.d_) return;
    if (a.d_ == 1)
        a = a.promoted(b.d_);
    else if (b.d_ == 1)
        b = b.promoted(a.d_);
    else
        throw std::domain_error("cyclotomic modulus mismatch");
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic x = a, y = b;
    Cyclotomic::align(x, y);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic x = a, y = b;
    Cyclotomic::align(x, y);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic x = a, y = b;
    Cyclotomic::align(x, y);
    std::vector<Rat> conv(x.c_.size() + y.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
        if (x.c_[i] == 0) continue;
        for (std::size_t j = 0; j < y.c_.size(); ++j) {
            if (y.c_[j] == 0) continue;
            conv[i + j] += x.c_[i] * y.c_[j];
        }
    }
    return Cyclotomic(x.d_, std::move(conv));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("cyclotomic division by zero");
    if (d_ == 1 || is_rational()) {
        Cyclotomic r = zero(d_);
        r.c_[0] = Rat(1) / c_[0];
        return r;
    }
    QPoly f{std::vector<Rat>(c_.begin(), c_.end())};
    QPoly u, v;
    QPoly g = qpoly_ext_gcd(f, cyclotomic_polynomial(d_), u, v);
    if (g.degree() != 0) throw std::logic_error("cyclotomic polynomial not coprime to element");
    // u * f = 1 mod Phi_d after dividing by the constant g
    Rat scale = Rat(1) / g.c[0];
    std::vector<Rat> raw(u.c.begin(), u.c.end());
    for (auto& x : raw) x *= scale;
    return Cyclotomic(d_, std::move(raw));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic x = a, y = b;
    Cyclotomic::align(x, y);
    return x * y.inverse();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic x = a, y = b;
    Cyclotomic::align(x, y);
    return x.c_ == y.c_;
}

Cyclotomic Cyclotomic::galois(long n) const {
    if (d_ <= 2) return *this;
    long nn = mod_norm(n, d_);
    Int g;
    mpz_gcd(g.get_mpz_t(), Int(nn).get_mpz_t(), Int(d_).get_mpz_t());
    if (g != 1) throw std::domain_error("galois exponent not coprime to modulus");
    std::vector<Rat> raw(static_cast<std::size_t>(d_), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        raw[static_cast<std::size_t>(
            mod_norm(static_cast<long>(i) * nn, d_))] += c_[i];
    }
    return Cyclotomic(d_, std::move(raw));
}

std::vector<Rat> Cyclotomic::power_expansion() const {
    std::vector<Rat> full(static_cast<std::size_t>(d_), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) full[i] = c_[i];
    return full;
}

std::vector<Rat> Cyclotomic::zero_constant_basis() const {
    if (d_ < 3 || !is_prime(d_))
        throw std::domain_error("zero-constant basis requires odd prime modulus");
    // phi(d) = d-1, so c_ covers zeta^0..zeta^{d-2}; substitute
    // 1 = -(zeta + ... + zeta^{d-1}).
    std::vector<Rat> out(static_cast<std::size_t>(d_), Rat(0));
    for (std::size_t i = 1; i < c_.size(); ++i) out[i] = c_[i] - c_[0];
    out[static_cast<std::size_t>(d_ - 1)] = -c_[0];
    return out;
}

std::string Cyclotomic::str(const std::string& var) const {
    if (is_rational()) return rat_str(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        first = false;
        Rat mag = abs(a);
        if (i == 0) {
            os << rat_str(mag);
        } else {
            if (mag != 1) os << rat_str(mag) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace concord
