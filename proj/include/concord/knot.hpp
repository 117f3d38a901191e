#pragma once

#include <optional>
#include <string>
#include <vector>

#include "concord/abelian.hpp"
#include "concord/intmatrix.hpp"
#include "concord/laurent.hpp"
#include "concord/presentation.hpp"

namespace concord {

// One crossing of an oriented knot diagram: the strand of arc `over` passes
// over the strand that enters as arc `under_in` and leaves as `under_out`.
// Arcs are numbered 1..num_arcs.
struct Crossing {
    int over = 0, under_in = 0, under_out = 0;
    int sign = 0;  // +1 or -1
};

struct CrossingDiagram {
    int num_arcs = 0;
    std::vector<Crossing> crossings;
};

// Structural checks: index ranges, signs, and that each arc starts and ends
// at exactly one undercrossing (so the arcs close into one circuit).
void validate_diagram(const CrossingDiagram& d);

struct KnotRecord {
    std::string name;
    std::optional<CrossingDiagram> diagram;
    std::optional<Presentation> presentation;
    std::optional<IntMatrix> seifert;
};

// Generators are the arcs; each crossing contributes the relator
// out^-1 over^sign in over^-sign, with the last crossing's relator dropped.
Presentation wirtinger_presentation(const CrossingDiagram& d);

LaurentUnitForm<Rat> alexander_from_presentation(const Presentation& p);
LaurentUnitForm<Rat> alexander_from_seifert(const IntMatrix& v);  // det(V - tV^T)

// Any available route; with several present they are cross-checked.
LaurentUnitForm<Rat> alexander_polynomial(const KnotRecord& k);

// Integer coefficients with content one and positive leading-from-below sign.
Laurent<Rat> integral_form(const LaurentUnitForm<Rat>& f);

// Homology of the n-fold cyclic branched cover.  The Seifert route (n = 2)
// carries the honest linking form -((V+V^T)^-1 reduced to the torsion basis);
// the presentation route knows the form only for cyclic homology, where it
// assumes 1/N on a generator and flags the assumption.
LinkedAbelianGroup branched_homology_from_seifert(const IntMatrix& v);
LinkedAbelianGroup branched_homology_from_presentation(const Presentation& p, long n);
LinkedAbelianGroup branched_cover_homology(const KnotRecord& k, long n);

// Genus-one model with Seifert matrix [[-1, 1], [0, k]], two-bridge diagram
// and presentation for b(4k+1, 2k).
KnotRecord twist_knot_model(long k);

// Order of the class in the rational algebraic concordance group: 1 when
// 4k+1 is a square, 4 when some prime 3 mod 4 divides 4k+1 an odd number of
// times, and 2 otherwise.
int twist_knot_algebraic_order(long k);

}  // namespace concord
