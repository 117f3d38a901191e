#include "concord/abelian.hpp"

#include <stdexcept>

namespace concord {

namespace {

Rat frac_mod_one(const Rat& x) {
    Int num = x.get_num(), den = x.get_den();
    Int r = num % den;
    if (r < 0) r += den;
    return make_rat(r, den);
}

}  // namespace

void validate_linked_group(const LinkedAbelianGroup& g) {
    for (const auto& o : g.orders)
        if (o < 2) throw std::invalid_argument("cyclic factor order must exceed one");
    const std::size_t n = g.orders.size();
    if (g.linking.size() != n) throw std::invalid_argument("linking matrix size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (g.linking[i].size() != n) throw std::invalid_argument("linking matrix not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (frac_mod_one(g.linking[i][j]) != frac_mod_one(g.linking[j][i]))
                throw std::invalid_argument("linking matrix not symmetric mod 1");
            // order * lambda(e_i, e_j) must vanish mod 1
            Rat v = g.linking[i][j] * Rat(g.orders[i]);
            if (v.get_den() != 1) throw std::invalid_argument("linking value order mismatch");
        }
    }
}

LinkedAbelianGroup direct_sum(const LinkedAbelianGroup& a, const LinkedAbelianGroup& b) {
    LinkedAbelianGroup s;
    s.orders = a.orders;
    s.orders.insert(s.orders.end(), b.orders.begin(), b.orders.end());
    const std::size_t na = a.orders.size(), n = s.orders.size();
    s.linking.assign(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) s.linking[i][j] = a.linking[i][j];
    for (std::size_t i = na; i < n; ++i)
        for (std::size_t j = na; j < n; ++j) s.linking[i][j] = b.linking[i - na][j - na];
    s.linking_assumed = a.linking_assumed || b.linking_assumed;
    return s;
}

Int group_order(const LinkedAbelianGroup& g) {
    Int total(1);
    for (const auto& o : g.orders) total *= o;
    return total;
}

std::vector<Int> normalize_element(const LinkedAbelianGroup& g, std::vector<Int> h) {
    if (h.size() != g.orders.size()) throw std::invalid_argument("element size mismatch");
    for (std::size_t i = 0; i < h.size(); ++i) {
        h[i] %= g.orders[i];
        if (h[i] < 0) h[i] += g.orders[i];
    }
    return h;
}

Int element_order(const LinkedAbelianGroup& g, const std::vector<Int>& h) {
    std::vector<Int> e = normalize_element(g, h);
    Int ord(1);
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        Int gd = gcd(e[i], g.orders[i]);
        Int oi = g.orders[i] / gd;
        ord = lcm(ord, oi);
    }
    return ord;
}

Rat linking_eval(const LinkedAbelianGroup& g, const std::vector<Int>& x,
                 const std::vector<Int>& y) {
    std::vector<Int> a = normalize_element(g, x), b = normalize_element(g, y);
    Rat total(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            total += Rat(a[i]) * g.linking[i][j] * Rat(b[j]);
    return frac_mod_one(total);
}

Character character_from_element(const LinkedAbelianGroup& g, const std::vector<Int>& h,
                                 long d) {
    if (d < 1) throw std::invalid_argument("character modulus must be positive");
    Character chi;
    chi.modulus = d;
    std::vector<Int> e = normalize_element(g, h);
    for (std::size_t i = 0; i < g.orders.size(); ++i) {
        std::vector<Int> basis(g.orders.size(), Int(0));
        basis[i] = 1;
        Rat v = linking_eval(g, e, basis) * Rat(d);
        if (v.get_den() != 1)
            throw std::invalid_argument("element does not define a mod-d character");
        Int val = v.get_num() % d;
        if (val < 0) val += d;
        chi.values.push_back(val.get_si());
    }
    return chi;
}

}  // namespace concord
