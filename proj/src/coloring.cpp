#include "qh/coloring.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace qh {

namespace {

// The over-arc's normal points from the src under-arc to the dst one, so the
// relation reads C(dst) = C(src) * C(over); which under-slot is src follows
// the crossing sign.
struct CrossingArcs {
    int src, dst, over, sign;
};

std::vector<CrossingArcs> crossing_arcs(const Diagram& d) {
    std::vector<CrossingArcs> out;
    for (const auto& x : d.crossings()) {
        int ui = d.arc_of(x.under_in()), uo = d.arc_of(x.under_out());
        int over = d.arc_of(x.over_in());
        if (x.sign > 0)
            out.push_back({ui, uo, over, x.sign});
        else
            out.push_back({uo, ui, over, x.sign});
    }
    return out;
}

// Forces colors through C(dst) = C(src) * C(over) and its inverse until
// nothing new follows. Returns false on contradiction.
bool propagate(const Quandle& q, const std::vector<CrossingArcs>& rels,
               std::map<int, int>& colors) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : rels) {
            auto src = colors.find(r.src);
            auto dst = colors.find(r.dst);
            auto ov = colors.find(r.over);
            if (ov == colors.end()) continue;
            if (src != colors.end()) {
                int forced = q.op(src->second, ov->second);
                if (dst == colors.end()) {
                    colors[r.dst] = forced;
                    changed = true;
                } else if (dst->second != forced) {
                    return false;
                }
            } else if (dst != colors.end()) {
                colors[r.src] = q.op_inverse(dst->second, ov->second);
                changed = true;
            }
        }
    }
    return true;
}

void search(const Quandle& q, const std::vector<int>& arcs,
            const std::vector<CrossingArcs>& rels, std::map<int, int>& colors,
            std::vector<Coloring>& out) {
    auto it = std::find_if(arcs.begin(), arcs.end(),
                           [&](int a) { return !colors.count(a); });
    if (it == arcs.end()) {
        out.push_back(colors);
        return;
    }
    for (int v = 0; v < q.order(); ++v) {
        std::map<int, int> trial = colors;
        trial[*it] = v;
        if (propagate(q, rels, trial)) search(q, arcs, rels, trial, out);
    }
}

}  // namespace

std::vector<Coloring> enumerate_colorings(const Diagram& d, const Quandle& q) {
    auto rels = crossing_arcs(d);
    std::map<int, int> colors;
    std::vector<Coloring> out;
    if (propagate(q, rels, colors)) search(q, d.arcs(), rels, colors, out);
    return out;
}

std::vector<Coloring> enumerate_boundary_mono(const Diagram& t, const Quandle& q) {
    if (!t.is_tangle()) throw std::runtime_error("boundary-monochromatic colorings need a tangle");
    auto rels = crossing_arcs(t);
    std::vector<Coloring> out;
    for (int m = 0; m < q.order(); ++m) {
        std::map<int, int> colors;
        for (const auto& b : t.boundary()) colors[t.arc_of(b.edge)] = m;
        if (propagate(q, rels, colors)) search(q, t.arcs(), rels, colors, out);
    }
    return out;
}

ShadowColoring shadow_extend(const Diagram& d, const Quandle& q, const Coloring& c,
                             int base_region, int base_color) {
    ShadowColoring s;
    s.arcs = c;
    s.regions.assign(d.num_regions(), -1);
    if (base_region < 0 || base_region >= d.num_regions())
        throw std::runtime_error("shadow_extend: no such region");
    s.regions[base_region] = base_color;
    // spanning-tree propagation over the wall graph, then a full re-check
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& w : d.walls()) {
            if (w.right_region < 0 || w.left_region < 0) continue;
            int x = c.at(w.arc);
            int& r = s.regions[w.right_region];
            int& l = s.regions[w.left_region];
            if (r >= 0 && l < 0) {
                l = q.op(r, x);
                changed = true;
            } else if (l >= 0 && r < 0) {
                r = q.op_inverse(l, x);
                changed = true;
            }
        }
    }
    for (int w : s.regions)
        if (w < 0) throw std::runtime_error("shadow_extend: unreachable region");
    for (const auto& w : d.walls())
        if (w.right_region >= 0 && w.left_region >= 0 &&
            s.regions[w.left_region] != q.op(s.regions[w.right_region], c.at(w.arc)))
            throw std::runtime_error("shadow_extend: inconsistent region colors");
    return s;
}

std::vector<ShadowColoring> enumerate_shadow(const Diagram& d, const Quandle& q) {
    std::vector<ShadowColoring> out;
    for (const auto& c : enumerate_colorings(d, q))
        for (int w = 0; w < q.order(); ++w) out.push_back(shadow_extend(d, q, c, 0, w));
    return out;
}

std::vector<ShadowColoring> enumerate_boundary_mono_shadow(const Diagram& t, const Quandle& q) {
    std::vector<ShadowColoring> out;
    for (const auto& c : enumerate_boundary_mono(t, q))
        for (int w = 0; w < q.order(); ++w) out.push_back(shadow_extend(t, q, c, 0, w));
    return out;
}

namespace {

void check_cycle(const Quandle& q, const Chain& z) {
    Chain dz = boundary(q, Theory::quandle, z);
    if (!dz.empty())
        throw std::runtime_error("coloring chain is not a cycle; boundary = " + dz.to_string());
}

}  // namespace

Chain coloring_cycle(const Diagram& d, const Quandle& q, const Coloring& c, bool check) {
    Chain z(2);
    for (const auto& x : d.crossings()) {
        int y = c.at(d.arc_of(x.over_in()));
        // the source under-arc is the one the over-strand's normal leaves
        int src = x.sign > 0 ? c.at(d.arc_of(x.under_in())) : c.at(d.arc_of(x.under_out()));
        if (src != y) z.add({src, y}, Int(x.sign));
    }
    if (check && !d.is_tangle()) check_cycle(q, z);
    return z;
}

Chain shadow_cycle(const Diagram& d, const Quandle& q, const ShadowColoring& s, bool check) {
    Chain z(3);
    const auto& cr = d.crossings();
    for (int i = 0; i < int(cr.size()); ++i) {
        const auto& x = cr[i];
        int y = s.arcs.at(d.arc_of(x.over_in()));
        // source region: both strand normals point away from it — the corner
        // after the incoming under-strand for positive crossings, the next
        // corner for negative ones
        int w, src;
        if (x.sign > 0) {
            w = s.regions[d.corner_region(i, 0)];
            src = s.arcs.at(d.arc_of(x.under_in()));
        } else {
            w = s.regions[d.corner_region(i, 1)];
            src = s.arcs.at(d.arc_of(x.under_out()));
        }
        Tuple t{w, src, y};
        if (!tuple_degenerate(t)) z.add(t, Int(x.sign));
    }
    if (check && !d.is_tangle()) check_cycle(q, z);
    return z;
}

Coloring transport_coloring(const Diagram& t, const Closure& cl, const Coloring& c) {
    int m = -1;
    for (const auto& b : t.boundary()) {
        int col = c.at(t.arc_of(b.edge));
        if (m >= 0 && col != m)
            throw std::runtime_error("coloring is not boundary-monochromatic");
        m = col;
    }
    Coloring out;
    for (const auto& [label, mapped] : cl.edge_map) {
        int link_arc = cl.link.arc_of(mapped);
        int col = c.count(t.arc_of(label)) ? c.at(t.arc_of(label)) : m;
        auto [it, fresh] = out.emplace(link_arc, col);
        if (!fresh && it->second != col)
            throw std::runtime_error("closure transport produced a conflict");
    }
    return out;
}

namespace {

const Closure& first_closure(const Diagram& t, std::vector<Closure>& storage) {
    storage = closures(t);
    if (storage.empty())
        throw std::runtime_error("tangle admits no orientation-consistent closure");
    return storage.front();
}

}  // namespace

HomologyClass tangle_class(const Diagram& t, const Quandle& q, const Coloring& c,
                           const HomologyPresentation& pres) {
    std::vector<Closure> storage;
    const Closure& cl = first_closure(t, storage);
    Coloring lc = transport_coloring(t, cl, c);
    return pres.reduce_cycle(coloring_cycle(cl.link, q, lc));
}

HomologyClass tangle_shadow_class(const Diagram& t, const Quandle& q, const ShadowColoring& s,
                                  const HomologyPresentation& pres) {
    std::vector<Closure> storage;
    const Closure& cl = first_closure(t, storage);
    Coloring lc = transport_coloring(t, cl, s.arcs);
    if (t.crossings().empty()) return pres.reduce_cycle(Chain(3));
    // anchor the closure's region colors at a crossing corner shared with the
    // tangle, then check every corner agrees
    int anchor = s.regions[t.corner_region(0, 0)];
    ShadowColoring ls = shadow_extend(cl.link, q, lc, cl.link.corner_region(0, 0), anchor);
    for (int i = 0; i < int(t.crossings().size()); ++i)
        for (int slot = 0; slot < 4; ++slot)
            if (ls.regions[cl.link.corner_region(i, slot)] !=
                s.regions[t.corner_region(i, slot)])
                throw std::runtime_error("closure transport changed an interior region color");
    return pres.reduce_cycle(shadow_cycle(cl.link, q, ls));
}

}  // namespace qh
