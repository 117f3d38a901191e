#include "concord/presentation.hpp"

#include <cstdlib>
#include <stdexcept>

namespace concord {

void validate_presentation(const Presentation& p) {
    if (p.num_generators < 0) throw std::invalid_argument("negative generator count");
    for (const auto& r : p.relators)
        for (int letter : r) {
            int idx = std::abs(letter);
            if (idx < 1 || idx > p.num_generators)
                throw std::invalid_argument("relator letter out of range");
        }
    if (!p.eta.empty()) {
        if (p.eta.size() != static_cast<std::size_t>(p.num_generators))
            throw std::invalid_argument("degree map size mismatch");
        for (const auto& r : p.relators) {
            long total = 0;
            for (int letter : r)
                total += letter > 0 ? p.eta[letter - 1] : -p.eta[-letter - 1];
            if (total != 0) throw std::invalid_argument("relator has nonzero degree");
        }
    }
}

IntMatrix relation_matrix(const Presentation& p) {
    IntMatrix m(p.relators.size(), static_cast<std::size_t>(p.num_generators));
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        for (int letter : p.relators[r]) {
            std::size_t j = static_cast<std::size_t>(std::abs(letter)) - 1;
            m(r, j) += letter > 0 ? 1 : -1;
        }
    return m;
}

Abelianization abelianize(const Presentation& p) {
    validate_presentation(p);
    const std::size_t g = static_cast<std::size_t>(p.num_generators);
    SmithForm snf = smith_normal_form(relation_matrix(p));

    // Z^g / (row lattice) = Z^g / D'Z^g after the change of basis w = V^T x,
    // so generator x_k lands on row k of V, coordinate i taken mod diagonal[i].
    std::vector<Int> full_orders(g, Int(0));
    for (std::size_t i = 0; i < snf.diagonal.size() && i < g; ++i)
        full_orders[i] = snf.diagonal[i];

    Abelianization ab;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < g; ++i)
        if (full_orders[i] != 1) {
            keep.push_back(i);
            ab.orders.push_back(full_orders[i]);
        }
    ab.generator_images.assign(g, std::vector<Int>(keep.size(), Int(0)));
    for (std::size_t k = 0; k < g; ++k)
        for (std::size_t c = 0; c < keep.size(); ++c) {
            Int v = snf.v(k, keep[c]);
            if (ab.orders[c] != 0) {
                v %= ab.orders[c];
                if (v < 0) v += ab.orders[c];
            }
            ab.generator_images[k][c] = v;
        }
    return ab;
}

void compute_degree_map(Presentation& p) {
    Abelianization ab = abelianize(p);
    std::size_t free_coord = 0, free_count = 0;
    for (std::size_t i = 0; i < ab.orders.size(); ++i)
        if (ab.orders[i] == 0) {
            free_coord = i;
            ++free_count;
        }
    if (free_count != 1)
        throw std::invalid_argument("degree map needs H1 of free rank one");
    std::vector<long> eta(static_cast<std::size_t>(p.num_generators), 0);
    long first_nonzero = 0;
    for (std::size_t k = 0; k < eta.size(); ++k) {
        const Int& v = ab.generator_images[k][free_coord];
        if (!v.fits_slong_p()) throw std::overflow_error("degree map entry too large");
        eta[k] = v.get_si();
        if (first_nonzero == 0) first_nonzero = eta[k];
    }
    if (first_nonzero < 0)
        for (auto& e : eta) e = -e;
    p.eta = std::move(eta);
    validate_presentation(p);
}

void group_ring_add(GroupRingElement& e, const Word& w, const Int& coeff) {
    if (coeff == 0) return;
    Word r = reduce_word(w);  // keys stay reduced even for unreduced input
    auto it = e.find(r);
    if (it == e.end()) {
        e.emplace(std::move(r), coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) e.erase(it);
}

GroupRingElement fox_derivative(const Word& w, int generator) {
    GroupRingElement out;
    Word prefix;
    for (int letter : w) {
        if (letter == generator) {
            group_ring_add(out, prefix, Int(1));
        } else if (letter == -generator) {
            Word p = prefix;
            p.push_back(letter);
            group_ring_add(out, p, Int(-1));
        }
        prefix.push_back(letter);
    }
    return out;
}

std::vector<std::vector<GroupRingElement>> fox_jacobian(const Presentation& p) {
    std::vector<std::vector<GroupRingElement>> jac(p.relators.size());
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
        jac[r].resize(static_cast<std::size_t>(p.num_generators));
        for (int j = 1; j <= p.num_generators; ++j)
            jac[r][static_cast<std::size_t>(j - 1)] = fox_derivative(p.relators[r], j);
    }
    return jac;
}

Laurent<Cyclotomic> evaluate_group_ring(const GroupRingElement& e, long d,
                                        const std::vector<long>& chi,
                                        const std::vector<long>& eta) {
    if (d < 1) throw std::invalid_argument("character modulus must be positive");
    if (chi.size() != eta.size()) throw std::invalid_argument("chi/eta size mismatch");
    Laurent<Cyclotomic> out;
    for (const auto& [w, coeff] : e) {
        long zexp = 0, texp = 0;
        for (int letter : w) {
            std::size_t j = static_cast<std::size_t>(std::abs(letter)) - 1;
            if (j >= chi.size()) throw std::invalid_argument("word letter out of range");
            long s = letter > 0 ? 1 : -1;
            zexp = mod_norm(zexp + s * chi[j], d);
            texp += s * eta[j];
        }
        out.add(texp, Cyclotomic::zeta_power(d, zexp) * Cyclotomic(Rat(coeff)));
    }
    return out;
}

}  // namespace concord
