#pragma once

#include <string>
#include <vector>

#include "concord/abelian.hpp"

namespace concord {

// Subgroup M of a linked abelian group with |M|^2 = |G| on which the linking
// form vanishes identically.  Elements are coordinate vectors mod the factor
// orders; `elements` is the full sorted list, `generators` a minimal greedy
// generating set (so cyclic metabolizers carry exactly one generator).
struct Metabolizer {
    std::vector<std::vector<Int>> generators;
    std::vector<std::vector<Int>> elements;
};

struct MetabolizerList {
    std::vector<Metabolizer> metabolizers;
    bool fast_path = false;
    std::string reason;  // set when the list is empty for a structural reason
};

// All metabolizers of (G, lambda), sorted by generator list.  (Z/p)^2 with
// the same nonzero diagonal linking value on both factors reduces to
// 1 + a^2 = 0 mod p and returns the subgroups <(1,a)>; any other shape is
// enumerated by closing subgroups under addition (|G| <= 10^4).  Every
// returned subgroup is re-verified self-annihilating and of order sqrt|G|.
MetabolizerList enumerate_metabolizers(const LinkedAbelianGroup& g,
                                       bool force_generic = false);

// lambda(x, y) = 0 for every pair of listed elements.
bool is_self_annihilating(const LinkedAbelianGroup& g,
                          const std::vector<std::vector<Int>>& elements);

}  // namespace concord
