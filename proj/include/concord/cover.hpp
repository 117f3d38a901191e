#pragma once

#include <utility>
#include <vector>

#include "concord/presentation.hpp"

namespace concord {

// Presentation of the kernel of (degree map mod n), computed with a Schreier
// transversal {1, x_b, ..., x_b^{n-1}} for the first generator b of degree 1.
// Trivial transversal generators are eliminated; the surviving generator
// equal to x_b^n is the lifted meridian.  pres.eta holds the degree map of
// the cover normalized so the lifted meridian has degree 1.
struct CoverPresentation {
    Presentation pres;
    long n = 1;
    int meridian = 0;        // 1-based index of the lifted meridian
    int base_generator = 0;  // 1-based index b downstairs
    // labels[k] = (j, c): cover generator k+1 is x_b^c x_j x_b^-((c+eta_j) mod n)
    std::vector<std::pair<int, long>> labels;
    std::vector<long> base_eta;           // degree map downstairs
    std::vector<std::vector<int>> index;  // index[j-1][c] -> cover generator, 0 if eliminated
};

CoverPresentation cyclic_cover_presentation(const Presentation& base, long n);

// Schreier rewriting of a base word starting at the given coset.  The word
// must return to its starting coset (degree sum divisible by n).
Word rewrite_in_cover(const CoverPresentation& cov, const Word& base_word, long start_coset);

}  // namespace concord
