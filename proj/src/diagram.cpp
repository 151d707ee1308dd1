#include "qh/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qh {

namespace {

struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int a) { while (p[a] != a) a = p[a] = p[p[a]]; return a; }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

[[noreturn]] void bad(const std::string& msg) {
    throw std::runtime_error("diagram: " + msg);
}

}  // namespace

// --- construction ----------------------------------------------------------

Diagram Diagram::from_parts(bool tangle, std::vector<CrossingRecord> crossings,
                            std::vector<std::vector<int>> closed_loops,
                            std::vector<BoundaryPoint> boundary) {
    Diagram d;
    d.is_tangle_ = tangle;
    d.crossings_ = std::move(crossings);
    d.closed_loops_ = std::move(closed_loops);
    d.boundary_ = std::move(boundary);
    d.build();
    return d;
}

Diagram Diagram::parse(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("type")) bad("missing \"type\"");
    std::string type = j.at("type").get<std::string>();
    if (type != "link" && type != "tangle") bad("type must be \"link\" or \"tangle\"");

    std::vector<CrossingRecord> crossings;
    for (const auto& c : j.value("crossings", nlohmann::json::array())) {
        CrossingRecord rec{};
        rec.sign = c.at("sign").get<int>();
        auto arcs = c.at("arcs");
        if (!arcs.is_array() || arcs.size() != 4) bad("crossing needs 4 arc labels");
        for (int s = 0; s < 4; ++s) rec.edges[s] = arcs[s].get<int>();
        crossings.push_back(rec);
    }
    std::vector<std::vector<int>> loops;
    for (const auto& l : j.value("closed_components", nlohmann::json::array()))
        loops.push_back(l.get<std::vector<int>>());
    std::vector<BoundaryPoint> boundary;
    for (const auto& b : j.value("boundary", nlohmann::json::array())) {
        std::string dir = b.at("dir").get<std::string>();
        if (dir != "in" && dir != "out") bad("boundary dir must be \"in\" or \"out\"");
        boundary.push_back({b.at("arc").get<int>(), dir == "in"});
    }
    if (type == "link" && !boundary.empty()) bad("a link may not have boundary points");
    if (type == "tangle" && boundary.empty()) bad("a tangle needs boundary points");
    return from_parts(type == "tangle", std::move(crossings), std::move(loops),
                      std::move(boundary));
}

std::string Diagram::to_json() const {
    nlohmann::json j;
    j["type"] = is_tangle_ ? "tangle" : "link";
    j["crossings"] = nlohmann::json::array();
    for (const auto& c : crossings_) {
        j["crossings"].push_back({{"sign", c.sign},
                                  {"arcs", {c.edges[0], c.edges[1], c.edges[2], c.edges[3]}}});
    }
    if (!closed_loops_.empty()) j["closed_components"] = closed_loops_;
    if (is_tangle_) {
        j["boundary"] = nlohmann::json::array();
        for (const auto& b : boundary_)
            j["boundary"].push_back({{"arc", b.edge}, {"dir", b.in ? "in" : "out"}});
    }
    return j.dump(2);
}

// --- the combinatorial map -------------------------------------------------

void Diagram::build() {
    // One incidence per edge end: (vertex, slot, is_head).
    struct Incidence { int vertex; int slot; bool head; };
    std::map<int, std::vector<Incidence>> inc;

    const int C = int(crossings_.size());
    const int B = int(boundary_.size());
    for (int c = 0; c < C; ++c) {
        const auto& x = crossings_[c];
        if (x.sign != 1 && x.sign != -1) bad("crossing sign must be +1 or -1");
        // slot 0 arrives, slot 2 leaves; the over strand direction follows the sign
        inc[x.edges[0]].push_back({c, 0, true});
        inc[x.edges[2]].push_back({c, 2, false});
        inc[x.edges[1]].push_back({c, 1, x.sign < 0});
        inc[x.edges[3]].push_back({c, 3, x.sign > 0});
    }
    int in_count = 0;
    for (int i = 0; i < B; ++i) {
        // endpoint vertex slots: 0 = forward circle segment, 1 = the strand,
        // 2 = backward circle segment (counterclockwise, interior inward)
        inc[boundary_[i].edge].push_back({C + i, 1, !boundary_[i].in});
        in_count += boundary_[i].in ? 1 : 0;
    }
    if (in_count * 2 != B) bad("boundary must have as many \"in\" as \"out\" points");

    int next_vertex = C + B;
    std::vector<int> vertex_degree(next_vertex, 0);
    for (int c = 0; c < C; ++c) vertex_degree[c] = 4;
    for (int i = 0; i < B; ++i) vertex_degree[C + i] = 3;
    for (const auto& loop : closed_loops_) {
        if (loop.empty()) bad("empty closed component");
        int k = int(loop.size());
        for (int i = 0; i < k; ++i) {
            // 2-valent vertex before loop[i]: slot 0 outgoing, slot 1 incoming
            if (inc.count(loop[i]) && !inc[loop[i]].empty())
                bad("closed component label " + std::to_string(loop[i]) +
                    " also appears elsewhere");
        }
        for (int i = 0; i < k; ++i) {
            int v = next_vertex + i;
            int w = next_vertex + (i + 1) % k;
            inc[loop[i]].push_back({v, 0, false});
            inc[loop[i]].push_back({w, 1, true});
        }
        for (int i = 0; i < k; ++i) vertex_degree.push_back(2);
        next_vertex += k;
    }

    std::vector<int> labels;
    for (const auto& [label, ends] : inc) {
        if (ends.size() != 2) bad("arc label " + std::to_string(label) + " used " +
                                  std::to_string(ends.size()) + " times, expected 2");
        if (ends[0].head == ends[1].head)
            bad("arc label " + std::to_string(label) + " has inconsistent orientation");
        labels.push_back(label);
    }

    // Internal edge table: labeled strand edges first, then circle segments.
    // Edge end 0 is the tail, end 1 the head.
    struct End { int vertex; int slot; };
    struct Edge { int label; End e[2]; };
    std::vector<Edge> edges;
    std::map<int, int> edge_index;
    for (int label : labels) {
        const auto& ends = inc[label];
        Edge e{};
        e.label = label;
        for (const auto& d : ends) e.e[d.head ? 1 : 0] = {d.vertex, d.slot};
        edge_index[label] = int(edges.size());
        edges.push_back(e);
    }
    const int first_segment = int(edges.size());
    for (int i = 0; i < B; ++i) {
        // segment i runs counterclockwise from endpoint i to endpoint i+1
        Edge e{};
        e.label = -1;
        e.e[0] = {C + i, 0};
        e.e[1] = {C + (i + 1) % B, 2};
        edges.push_back(e);
    }

    std::vector<std::vector<std::pair<int, int>>> slots(next_vertex);  // (edge, end)
    for (int v = 0; v < next_vertex; ++v) slots[v].assign(vertex_degree[v], {-1, -1});
    for (int ei = 0; ei < int(edges.size()); ++ei)
        for (int k = 0; k < 2; ++k) {
            const End& end = edges[ei].e[k];
            if (slots[end.vertex][end.slot].first != -1) bad("two strands share a slot");
            slots[end.vertex][end.slot] = {ei, k};
        }
    for (int v = 0; v < next_vertex; ++v)
        for (const auto& s : slots[v])
            if (s.first == -1) bad("vertex with an unused slot");

    // Face tracing: each dart keeps its face on the left.  Arriving at a
    // vertex through slot s, the face continues out through slot s-1.
    const int E = int(edges.size());
    auto dart_id = [](int edge, int end) { return 2 * edge + end; };
    std::vector<int> face_of(2 * E, -1);
    std::vector<std::vector<Dart>> faces;
    for (int e0 = 0; e0 < E; ++e0)
        for (int k0 = 0; k0 < 2; ++k0) {
            if (face_of[dart_id(e0, k0)] != -1) continue;
            int f = int(faces.size());
            faces.emplace_back();
            int e = e0, k = k0;
            while (face_of[dart_id(e, k)] == -1) {
                face_of[dart_id(e, k)] = f;
                faces[f].push_back({e, k});
                int v = edges[e].e[k].vertex;
                int s = edges[e].e[k].slot;
                int deg = vertex_degree[v];
                auto [e2, k2] = slots[v][(s + deg - 1) % deg];
                e = e2;
                k = 1 - k2;  // leave the vertex toward the other end
            }
        }

    // Connected components of the underlying graph, with a per-component
    // Euler check (V - E + F = 2) to reject non-planar gluing data.
    UF comp(next_vertex);
    for (const auto& e : edges) comp.unite(e.e[0].vertex, e.e[1].vertex);
    std::map<int, std::array<int, 3>> euler;  // rep -> {V, E, F}
    for (int v = 0; v < next_vertex; ++v) euler[comp.find(v)][0]++;
    for (const auto& e : edges) euler[comp.find(e.e[0].vertex)][1]++;
    std::vector<int> face_comp(faces.size());
    for (int f = 0; f < int(faces.size()); ++f) {
        face_comp[f] = comp.find(edges[faces[f][0].edge].e[0].vertex);
        euler[face_comp[f]][2]++;
    }
    for (const auto& [rep, vef] : euler)
        if (vef[0] - vef[1] + vef[2] != 2)
            bad("component fails the Euler check; the gluing data is not planar");

    // A split diagram: nest every extra component inside one base face of the
    // component containing vertex 0.  Any face of an extra component can face
    // outward; we pick the one traced first, which is deterministic.
    int base_rep = next_vertex > 0 ? comp.find(0) : -1;
    int outer_face = -1;
    if (is_tangle_) {
        // the face left of a clockwise circle segment dart is outside the disk
        outer_face = face_of[dart_id(first_segment, 0)];
        base_rep = face_comp[outer_face];
    }
    int base_face = -1;
    for (int f = 0; f < int(faces.size()) && base_face == -1; ++f)
        if (face_comp[f] == base_rep && f != outer_face) base_face = f;

    UF fuse(int(faces.size()));
    std::set<int> seen{base_rep};
    for (int f = 0; f < int(faces.size()); ++f)
        if (seen.insert(face_comp[f]).second) fuse.unite(f, base_face);

    // Number the regions by first appearance; a tangle's outer face is not a
    // region and reads as -1.
    std::vector<int> region_of(faces.size(), -2);
    if (outer_face != -1) region_of[fuse.find(outer_face)] = -1;
    for (int f = 0; f < int(faces.size()); ++f) {
        int r = fuse.find(f);
        if (region_of[r] == -2) {
            region_of[r] = int(regions_.size());
            regions_.emplace_back();
        }
        region_of[f] = region_of[r];
        if (region_of[f] >= 0)
            for (const Dart& d : faces[f]) regions_[region_of[f]].push_back(d);
    }
    auto region_of_dart = [&](int e, int k) { return region_of[face_of[dart_id(e, k)]]; };

    // Strand arcs: over-strand labels merge across each crossing; an
    // under-strand breaks.  Components additionally merge across under-passes.
    std::map<int, int> pos;
    for (int i = 0; i < int(labels.size()); ++i) pos[labels[i]] = i;
    UF arc_uf(int(labels.size())), comp_uf(int(labels.size()));
    for (const auto& x : crossings_) {
        arc_uf.unite(pos[x.over_in()], pos[x.over_out()]);
        comp_uf.unite(pos[x.over_in()], pos[x.over_out()]);
        comp_uf.unite(pos[x.under_in()], pos[x.under_out()]);
    }
    for (const auto& loop : closed_loops_)
        for (int i = 1; i < int(loop.size()); ++i) {
            arc_uf.unite(pos[loop[0]], pos[loop[i]]);
            comp_uf.unite(pos[loop[0]], pos[loop[i]]);
        }
    std::map<int, int> arc_rep, comp_rep;
    for (int label : labels) {
        int& a = arc_rep.emplace(arc_uf.find(pos[label]), label).first->second;
        a = std::min(a, label);
        int& c = comp_rep.emplace(comp_uf.find(pos[label]), label).first->second;
        c = std::min(c, label);
    }
    for (int label : labels) edge_arc_[label] = arc_rep[arc_uf.find(pos[label])];
    for (const auto& [rep, label] : arc_rep) arc_ids_.push_back(label);
    std::sort(arc_ids_.begin(), arc_ids_.end());
    std::vector<int> comp_labels;
    for (const auto& [rep, label] : comp_rep) comp_labels.push_back(label);
    std::sort(comp_labels.begin(), comp_labels.end());
    num_components_ = int(comp_labels.size());
    std::map<int, int> comp_number;
    for (int i = 0; i < num_components_; ++i) comp_number[comp_labels[i]] = i;
    for (int label : labels)
        edge_component_[label] = comp_number[comp_rep[comp_uf.find(pos[label])]];

    for (int label : labels) {
        int ei = edge_index[label];
        walls_.push_back({region_of_dart(ei, 0), region_of_dart(ei, 1), edge_arc_[label]});
    }
    for (int c = 0; c < C; ++c)
        for (int s = 0; s < 4; ++s) {
            auto [e, k] = slots[c][s];
            corner_region_[{c, s}] = region_of_dart(e, 1 - k);
        }
}

int Diagram::arc_of(int edge) const {
    auto it = edge_arc_.find(edge);
    if (it == edge_arc_.end()) bad("unknown arc label " + std::to_string(edge));
    return it->second;
}

int Diagram::component_of(int edge) const {
    auto it = edge_component_.find(edge);
    if (it == edge_component_.end()) bad("unknown arc label " + std::to_string(edge));
    return it->second;
}

int Diagram::corner_region(int crossing, int slot) const {
    return corner_region_.at({crossing, slot});
}

// --- linking matrix --------------------------------------------------------

std::vector<std::vector<int>> linking_matrix_mod2(const Diagram& d) {
    int n = d.num_components();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (const auto& x : d.crossings()) {
        int u = d.component_of(x.under_in());
        int o = d.component_of(x.over_in());
        if (u != o) m[u][o] ^= 1;  // counts crossings of u under o; symmetric mod 2
    }
    return m;
}

// --- tangle closures -------------------------------------------------------

namespace {

void noncrossing(const std::vector<int>& positions,
                 std::vector<std::pair<int, int>>& current,
                 std::vector<std::vector<std::pair<int, int>>>& out) {
    if (positions.empty()) {
        out.push_back(current);
        return;
    }
    for (int k = 1; k < int(positions.size()); k += 2) {
        current.push_back({positions[0], positions[k]});
        std::vector<int> inside(positions.begin() + 1, positions.begin() + k);
        std::vector<int> rest(positions.begin() + k + 1, positions.end());
        // a chord splits the remaining endpoints into independent halves
        auto saved = current;
        std::vector<std::vector<std::pair<int, int>>> left;
        std::vector<std::pair<int, int>> tmp;
        noncrossing(inside, tmp, left);
        for (const auto& ins : left) {
            current = saved;
            current.insert(current.end(), ins.begin(), ins.end());
            noncrossing(rest, current, out);
        }
        current = saved;
        current.pop_back();
    }
}

}  // namespace

std::vector<Closure> closures(const Diagram& tangle) {
    if (!tangle.is_tangle()) bad("closures need a tangle");
    const auto& bd = tangle.boundary();
    int B = int(bd.size());
    std::vector<int> positions(B);
    std::iota(positions.begin(), positions.end(), 0);
    std::vector<std::vector<std::pair<int, int>>> matchings;
    std::vector<std::pair<int, int>> tmp;
    noncrossing(positions, tmp, matchings);

    std::set<int> labels;
    for (const auto& x : tangle.crossings())
        for (int s = 0; s < 4; ++s) labels.insert(x.edges[s]);
    for (const auto& loop : tangle.closed_loops())
        labels.insert(loop.begin(), loop.end());
    for (const auto& b : bd) labels.insert(b.edge);

    std::vector<Closure> result;
    for (const auto& matching : matchings) {
        bool ok = true;
        for (const auto& [i, j] : matching)
            if (bd[i].in == bd[j].in) { ok = false; break; }
        if (!ok) continue;  // a join must carry one strand out and back in

        std::map<int, int> rep;
        for (int l : labels) rep[l] = l;
        std::function<int(int)> find = [&](int a) {
            while (rep[a] != a) a = rep[a] = rep[rep[a]];
            return a;
        };
        for (const auto& [i, j] : matching) {
            int a = find(bd[i].edge), b = find(bd[j].edge);
            rep[std::max(a, b)] = std::min(a, b);
        }

        Closure cl;
        for (int l : labels) cl.edge_map[l] = find(l);
        std::vector<CrossingRecord> crossings;
        std::set<int> at_crossings;
        for (const auto& x : tangle.crossings()) {
            CrossingRecord y = x;
            for (int s = 0; s < 4; ++s) {
                y.edges[s] = cl.edge_map[x.edges[s]];
                at_crossings.insert(y.edges[s]);
            }
            crossings.push_back(y);
        }
        std::vector<std::vector<int>> loops;
        for (const auto& loop : tangle.closed_loops()) loops.push_back(loop);
        std::set<int> looped;
        for (const auto& loop : loops) looped.insert(loop.begin(), loop.end());
        for (const auto& [l, r] : cl.edge_map)
            if (l == r && !at_crossings.count(l) && !looped.count(l)) {
                // a strand that never meets a crossing closes into a circle
                bool is_class_rep = false;
                for (const auto& b : bd)
                    if (find(b.edge) == l) is_class_rep = true;
                if (is_class_rep) loops.push_back({l});
            }
        cl.joins = matching;
        cl.link = Diagram::from_parts(false, std::move(crossings), std::move(loops), {});
        result.push_back(std::move(cl));
    }
    return result;
}

}  // namespace qh
