#pragma once

#include <map>
#include <vector>

#include "qh/diagram.hpp"
#include "qh/homology.hpp"
#include "qh/quandle.hpp"

namespace qh {

// Arc representative label -> quandle element.
using Coloring = std::map<int, int>;

struct ShadowColoring {
    Coloring arcs;
    std::vector<int> regions;  // indexed by region id
};

// All colorings satisfying the crossing relation, in lexicographic order over
// the sorted arc list.
std::vector<Coloring> enumerate_colorings(const Diagram& d, const Quandle& q);

// Tangle colorings whose boundary arcs all share one color; ordered by that
// color, then lexicographically.
std::vector<Coloring> enumerate_boundary_mono(const Diagram& t, const Quandle& q);

// The unique extension of a coloring to region colors with the given base
// region color. Throws if propagation is inconsistent (a convention bug, not
// a user error).
ShadowColoring shadow_extend(const Diagram& d, const Quandle& q, const Coloring& c,
                             int base_region, int base_color);

// Every coloring with every base color of region 0.
std::vector<ShadowColoring> enumerate_shadow(const Diagram& d, const Quandle& q);
std::vector<ShadowColoring> enumerate_boundary_mono_shadow(const Diagram& t, const Quandle& q);

// Signed sum of (x, y) over crossings, degenerate pairs dropped. With check
// set (links), throws if the result is not a cycle.
Chain coloring_cycle(const Diagram& d, const Quandle& q, const Coloring& c, bool check = true);

// Signed sum of (w, x, y) with w the source-region color.
Chain shadow_cycle(const Diagram& d, const Quandle& q, const ShadowColoring& s, bool check = true);

// Class of a boundary-monochromatic tangle coloring, via an
// orientation-consistent closure (independent of the closure chosen).
HomologyClass tangle_class(const Diagram& t, const Quandle& q, const Coloring& c,
                           const HomologyPresentation& pres);
HomologyClass tangle_shadow_class(const Diagram& t, const Quandle& q, const ShadowColoring& s,
                                  const HomologyPresentation& pres);

// Transports a boundary-monochromatic coloring to a closure link.
Coloring transport_coloring(const Diagram& t, const Closure& cl, const Coloring& c);

}  // namespace qh
