#pragma once

#include <vector>

#include "concord/intmatrix.hpp"
#include "concord/rational.hpp"

namespace concord {

// Finite abelian group presented as a direct sum of cyclic factors carrying a
// Q/Z-valued linking form on the generators.  When only the isomorphism type
// of a cyclic group is known, the form defaults to 1/N on the generator and
// linking_assumed is set; every consumer here only depends on the form up to
// multiplication by a square unit, which that convention leaves free.
struct LinkedAbelianGroup {
    std::vector<Int> orders;                // cyclic factor orders, each > 1
    std::vector<std::vector<Rat>> linking;  // symmetric, entries taken mod 1
    bool linking_assumed = false;
};

void validate_linked_group(const LinkedAbelianGroup& g);
LinkedAbelianGroup direct_sum(const LinkedAbelianGroup& a, const LinkedAbelianGroup& b);
Int group_order(const LinkedAbelianGroup& g);

// Coordinates of elements are taken mod the factor orders.
std::vector<Int> normalize_element(const LinkedAbelianGroup& g, std::vector<Int> h);
Int element_order(const LinkedAbelianGroup& g, const std::vector<Int>& h);

// lambda(x, y) reduced into [0, 1)
Rat linking_eval(const LinkedAbelianGroup& g, const std::vector<Int>& x,
                 const std::vector<Int>& y);

struct Character {
    long modulus = 1;          // d
    std::vector<long> values;  // on the group generators, mod d
};

// chi_h = d * lambda(h, -): requires d * lambda(h, e_i) integral for all i.
Character character_from_element(const LinkedAbelianGroup& g, const std::vector<Int>& h,
                                 long d);

}  // namespace concord
