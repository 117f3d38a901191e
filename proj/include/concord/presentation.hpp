#pragma once

#include <map>
#include <vector>

#include "concord/cyclotomic.hpp"
#include "concord/intmatrix.hpp"
#include "concord/laurent.hpp"
#include "concord/word.hpp"

namespace concord {

// Finite group presentation together with a degree map to Z (one value per
// generator).  eta may be left empty and filled later by compute_degree_map.
struct Presentation {
    int num_generators = 0;
    std::vector<Word> relators;
    std::vector<long> eta;
};

// Checks letter ranges and, when present, the size of eta and the vanishing
// of the degree of every relator.  Throws std::invalid_argument on failure.
void validate_presentation(const Presentation& p);

// Exponent-sum matrix, one row per relator, one column per generator.
IntMatrix relation_matrix(const Presentation& p);

// H1 of the presented group as a direct sum of cyclic factors (order 0 means
// an infinite-cyclic summand; order-1 factors are dropped), plus the image of
// each generator in coordinates aligned with `orders`.
struct Abelianization {
    std::vector<Int> orders;
    std::vector<std::vector<Int>> generator_images;
};
Abelianization abelianize(const Presentation& p);

// Fills p.eta from the abelianization.  Requires H1 = Z (+ torsion); the sign
// is normalized so the first generator of nonzero degree has positive degree.
void compute_degree_map(Presentation& p);

// Integral group ring of the free group: finitely supported Z-combination of
// reduced words.
using GroupRingElement = std::map<Word, Int>;

void group_ring_add(GroupRingElement& e, const Word& w, const Int& coeff);

GroupRingElement fox_derivative(const Word& w, int generator);

// Rows indexed by relators, columns by generators.
std::vector<std::vector<GroupRingElement>> fox_jacobian(const Presentation& p);

// Ring map induced by x_k -> zeta_d^{chi[k]} * t^{eta[k]}.
Laurent<Cyclotomic> evaluate_group_ring(const GroupRingElement& e, long d,
                                        const std::vector<long>& chi,
                                        const std::vector<long>& eta);

}  // namespace concord
