#include "concord/metabolizer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace concord {

namespace {

using Element = std::vector<Int>;

Element zero_element(const LinkedAbelianGroup& g) {
    return Element(g.orders.size(), Int(0));
}

Element add_elements(const LinkedAbelianGroup& g, const Element& a, const Element& b) {
    Element r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return normalize_element(g, r);
}

// Closure of the subgroup `s` together with one more element: the union of
// the cosets s + k*gen over all multiples of gen.
std::set<Element> subgroup_closure(const LinkedAbelianGroup& g, const std::set<Element>& s,
                                   const Element& gen) {
    std::set<Element> r;
    Element acc = zero_element(g);
    do {
        for (const auto& e : s) r.insert(add_elements(g, e, acc));
        acc = add_elements(g, acc, gen);
    } while (!(acc == zero_element(g)));
    return r;
}

std::vector<Element> all_elements(const LinkedAbelianGroup& g) {
    std::vector<Element> out;
    Element cur = zero_element(g);
    while (true) {
        out.push_back(cur);
        std::size_t i = 0;
        for (; i < cur.size(); ++i) {
            cur[i] += 1;
            if (cur[i] < g.orders[i]) break;
            cur[i] = 0;
        }
        if (i == cur.size()) break;
    }
    return out;
}

bool isotropic(const LinkedAbelianGroup& g, const Element& e) {
    return linking_eval(g, e, e) == 0;
}

void extend(const LinkedAbelianGroup& g, const std::vector<Element>& universe,
            const std::set<Element>& sub, const Int& target,
            std::set<std::set<Element>>& seen, std::vector<std::set<Element>>& hits) {
    if (Int(sub.size()) == target) {
        hits.push_back(sub);
        return;
    }
    for (const auto& e : universe) {
        if (sub.count(e) || !isotropic(g, e)) continue;
        bool orthogonal = true;
        for (const auto& s : sub)
            if (!(linking_eval(g, e, s) == 0)) {
                orthogonal = false;
                break;
            }
        if (!orthogonal) continue;
        std::set<Element> bigger = subgroup_closure(g, sub, e);
        if (Int(bigger.size()) > target || target % Int(bigger.size()) != 0) continue;
        if (!seen.insert(bigger).second) continue;
        extend(g, universe, bigger, target, seen, hits);
    }
}

std::vector<Element> minimal_generators(const LinkedAbelianGroup& g,
                                        const std::set<Element>& sub) {
    std::vector<Element> gens;
    std::set<Element> span{zero_element(g)};
    for (const auto& e : sub) {
        if (span.count(e)) continue;
        gens.push_back(e);
        span = subgroup_closure(g, span, e);
        if (span.size() == sub.size()) break;
    }
    return gens;
}

Metabolizer pack(const LinkedAbelianGroup& g, const std::set<Element>& sub, const Int& target) {
    if (Int(sub.size()) != target || !is_self_annihilating(g, {sub.begin(), sub.end()}))
        throw std::logic_error("enumerated subgroup fails the metabolizer invariants");
    Metabolizer m;
    m.generators = minimal_generators(g, sub);
    m.elements.assign(sub.begin(), sub.end());
    return m;
}

}  // namespace

bool is_self_annihilating(const LinkedAbelianGroup& g,
                          const std::vector<std::vector<Int>>& elements) {
    for (const auto& x : elements)
        for (const auto& y : elements)
            if (!(linking_eval(g, x, y) == 0)) return false;
    return true;
}

MetabolizerList enumerate_metabolizers(const LinkedAbelianGroup& g, bool force_generic) {
    validate_linked_group(g);
    MetabolizerList out;

    const Int order = group_order(g);
    Int target;
    if (!is_perfect_square(order, &target)) {
        out.reason = "group order " + order.get_str() + " is not a perfect square";
        return out;
    }

    // (Z/p)^2 with lk(e1,e2) = 0 and lk(e1,e1) = lk(e2,e2) != 0: a rank-one
    // subgroup <(x,y)> of order p is self-annihilating iff x^2 + y^2 = 0, and
    // the axes are ruled out by nonsingularity, so the generators are (1,a)
    // with 1 + a^2 = 0 mod p.
    if (!force_generic && g.orders.size() == 2 && g.orders[0] == g.orders[1] &&
        g.orders[0] % 2 == 1 && is_prime(g.orders[0])) {
        Element e1{Int(1), Int(0)}, e2{Int(0), Int(1)};
        Rat diag = linking_eval(g, e1, e1);
        if (linking_eval(g, e1, e2) == 0 && linking_eval(g, e2, e2) == diag && !(diag == 0)) {
            out.fast_path = true;
            const long p = g.orders[0].get_si();
            for (long a = 1; a < p; ++a) {
                Element h{Int(1), Int(a)};
                if (!(linking_eval(g, h, h) == 0)) continue;
                std::set<Element> sub = subgroup_closure(g, {zero_element(g)}, h);
                out.metabolizers.push_back(pack(g, sub, target));
            }
            if (out.metabolizers.empty())
                out.reason = "1 + a^2 = 0 has no solution mod " +
                             g.orders[0].get_str();
            return out;
        }
    }

    if (order > 10000)
        throw std::domain_error("generic metabolizer enumeration capped at |G| <= 10^4");

    std::vector<Element> universe = all_elements(g);
    std::set<std::set<Element>> seen;
    std::vector<std::set<Element>> hits;
    std::set<Element> trivial{zero_element(g)};
    extend(g, universe, trivial, target, seen, hits);

    std::sort(hits.begin(), hits.end());
    for (const auto& sub : hits) out.metabolizers.push_back(pack(g, sub, target));
    if (out.metabolizers.empty())
        out.reason = "no self-annihilating subgroup of order " + target.get_str();
    return out;
}

}  // namespace concord
