#include "concord/knot.hpp"

#include <stdexcept>

#include "concord/laurent_det.hpp"
#include "concord/two_bridge.hpp"
#include "concord/twisted.hpp"

namespace concord {

void validate_diagram(const CrossingDiagram& d) {
    if (d.num_arcs < 1) throw std::invalid_argument("diagram needs at least one arc");
    if (d.crossings.empty()) {
        if (d.num_arcs != 1) throw std::invalid_argument("crossingless diagram must be a circle");
        return;
    }
    if (static_cast<int>(d.crossings.size()) != d.num_arcs)
        throw std::invalid_argument("a knot diagram has as many arcs as crossings");
    std::vector<int> in_count(d.num_arcs + 1, 0), out_count(d.num_arcs + 1, 0);
    for (const auto& c : d.crossings) {
        for (int arc : {c.over, c.under_in, c.under_out})
            if (arc < 1 || arc > d.num_arcs)
                throw std::invalid_argument("crossing references an arc out of range");
        if (c.sign != 1 && c.sign != -1)
            throw std::invalid_argument("crossing sign must be +1 or -1");
        ++in_count[c.under_in];
        ++out_count[c.under_out];
    }
    for (int a = 1; a <= d.num_arcs; ++a)
        if (in_count[a] != 1 || out_count[a] != 1)
            throw std::invalid_argument("arcs must chain through undercrossings exactly once");
}

Presentation wirtinger_presentation(const CrossingDiagram& d) {
    validate_diagram(d);
    Presentation p;
    p.num_generators = d.num_arcs;
    for (std::size_t i = 0; i + 1 < d.crossings.size(); ++i) {
        const Crossing& c = d.crossings[i];
        Word r{-c.under_out, c.sign * c.over, c.under_in, -c.sign * c.over};
        p.relators.push_back(reduce_word(std::move(r)));
    }
    compute_degree_map(p);
    for (long e : p.eta)
        if (e != 1) throw std::invalid_argument("diagram arcs are not all meridians");
    return p;
}

namespace {

LaurentUnitForm<Rat> to_rational_form(const LaurentUnitForm<Cyclotomic>& f) {
    LaurentUnitForm<Rat> out;
    out.shift = f.shift;
    out.scalar = f.scalar.rational_value();
    for (const auto& [e, c] : f.canonical.terms()) out.canonical.set(e, c.rational_value());
    return out;
}

}  // namespace

LaurentUnitForm<Rat> alexander_from_presentation(const Presentation& p) {
    Presentation pres = p;
    if (pres.eta.empty()) compute_degree_map(pres);
    std::vector<long> trivial(static_cast<std::size_t>(pres.num_generators), 0);
    return to_rational_form(wada_invariant(pres, 1, trivial));
}

LaurentUnitForm<Rat> alexander_from_seifert(const IntMatrix& v) {
    if (v.rows() != v.cols()) throw std::invalid_argument("Seifert matrix must be square");
    const std::size_t n = v.rows();
    std::vector<std::vector<Laurent<Rat>>> m(n, std::vector<Laurent<Rat>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j].add(0, Rat(v(i, j)));
            m[i][j].add(1, -Rat(v(j, i)));
        }
    Laurent<Rat> det = laurent_det(m);
    if (det.is_zero()) throw ZeroDeterminant();
    return laurent_normalize(det);
}

LaurentUnitForm<Rat> alexander_polynomial(const KnotRecord& k) {
    std::vector<LaurentUnitForm<Rat>> routes;
    if (k.presentation) routes.push_back(alexander_from_presentation(*k.presentation));
    if (k.diagram) routes.push_back(alexander_from_presentation(wirtinger_presentation(*k.diagram)));
    if (k.seifert) routes.push_back(alexander_from_seifert(*k.seifert));
    if (routes.empty()) throw std::invalid_argument("knot record has no representation");
    for (std::size_t i = 1; i < routes.size(); ++i)
        if (!(routes[i].canonical == routes[0].canonical))
            throw std::logic_error("Alexander polynomial mismatch between representations of " +
                                   k.name);
    return routes[0];
}

Laurent<Rat> integral_form(const LaurentUnitForm<Rat>& f) {
    Int den(1);
    for (const auto& [e, c] : f.canonical.terms()) den = lcm(den, c.get_den());
    Int content(0);
    for (const auto& [e, c] : f.canonical.terms())
        content = gcd(content, Int(c.get_num() * (den / c.get_den())));
    Laurent<Rat> out;
    for (const auto& [e, c] : f.canonical.terms())
        out.set(e, Rat(c.get_num() * (den / c.get_den()) / content));
    return out;
}

LinkedAbelianGroup branched_homology_from_seifert(const IntMatrix& v) {
    if (v.rows() != v.cols()) throw std::invalid_argument("Seifert matrix must be square");
    const std::size_t n = v.rows();
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = v(i, j) + v(j, i);
    SmithForm snf = smith_normal_form(a);
    if (snf.rank != n) throw std::domain_error("double branched cover is not a homology sphere");

    // lambda(g_i, g_j) = ((U A U^T)^-1)_ij for the generators g_i = U^-1 e_i
    IntMatrix w = snf.u * a * snf.u.transposed();
    std::vector<std::vector<Rat>> wq(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) wq[i][j] = Rat(w(i, j));
    std::vector<std::vector<Rat>> b = rat_inverse(wq);

    LinkedAbelianGroup g;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (snf.diagonal[i] > 1) {
            keep.push_back(i);
            g.orders.push_back(snf.diagonal[i]);
        }
    g.linking.assign(keep.size(), std::vector<Rat>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) {
            Rat raw = b[keep[i]][keep[j]];
            Int num = raw.get_num() % raw.get_den();
            if (num < 0) num += raw.get_den();
            g.linking[i][j] = make_rat(num, raw.get_den());
        }
    validate_linked_group(g);
    return g;
}

LinkedAbelianGroup branched_homology_from_presentation(const Presentation& p, long n) {
    CoverPresentation cov = cyclic_cover_presentation(p, n);
    Abelianization ab = abelianize(branched_quotient(cov));
    LinkedAbelianGroup g;
    for (const auto& o : ab.orders) {
        if (o == 0)
            throw std::domain_error("branched cover has positive betti number");
        g.orders.push_back(o);
    }
    if (g.orders.empty()) return g;
    if (g.orders.size() > 1)
        throw std::domain_error(
            "linking form unavailable: presentation route needs cyclic homology");
    g.linking = {{make_rat(Int(1), g.orders[0])}};
    g.linking_assumed = true;
    validate_linked_group(g);
    return g;
}

LinkedAbelianGroup branched_cover_homology(const KnotRecord& k, long n) {
    Presentation pres;
    bool have_pres = false;
    if (k.presentation) {
        pres = *k.presentation;
        have_pres = true;
    } else if (k.diagram) {
        pres = wirtinger_presentation(*k.diagram);
        have_pres = true;
    }
    if (n == 2 && k.seifert) {
        LinkedAbelianGroup g = branched_homology_from_seifert(*k.seifert);
        if (have_pres) {
            Abelianization ab =
                abelianize(branched_quotient(cyclic_cover_presentation(pres, 2)));
            std::vector<Int> orders(ab.orders.begin(), ab.orders.end());
            if (orders != g.orders)
                throw std::logic_error("branched homology mismatch between representations of " +
                                       k.name);
        }
        return g;
    }
    if (!have_pres) throw std::invalid_argument("no route to the branched cover homology");
    return branched_homology_from_presentation(pres, n);
}

KnotRecord twist_knot_model(long k) {
    if (k < 1) throw std::invalid_argument("twist parameter must be positive");
    KnotRecord rec;
    rec.name = "twist-" + std::to_string(k);
    IntMatrix v(2, 2);
    v(0, 0) = -1;
    v(0, 1) = 1;
    v(1, 0) = 0;
    v(1, 1) = k;
    rec.seifert = v;
    rec.presentation = two_bridge_presentation(4 * k + 1, 2 * k);
    rec.diagram = two_bridge_diagram(4 * k + 1, 2 * k);
    return rec;
}

int twist_knot_algebraic_order(long k) {
    Int n = Int(4) * k + 1;
    if (is_perfect_square(n)) return 1;
    Int m = n;
    for (Int p(3); p * p <= m; p += 2) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e % 2 == 1 && p % 4 == 3) return 4;
    }
    if (m > 1 && m % 4 == 3) return 4;  // leftover prime factor
    return 2;
}

}  // namespace concord
