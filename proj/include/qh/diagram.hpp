#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace qh {

// Slot convention: arcs listed counterclockwise starting from the incoming
// under-strand. Slots 0 (in) and 2 (out) carry the under-strand; slots 1 and 3
// the over-strand. sign +1 means the over-strand runs slot 3 -> slot 1,
// sign -1 means slot 1 -> slot 3.
struct CrossingRecord {
    int sign;                   // +1 or -1
    std::array<int, 4> edges;   // PD edge labels by slot

    int under_in() const { return edges[0]; }
    int under_out() const { return edges[2]; }
    int over_in() const { return sign > 0 ? edges[3] : edges[1]; }
    int over_out() const { return sign > 0 ? edges[1] : edges[3]; }
};

struct BoundaryPoint {
    int edge;
    bool in;  // true: strand enters the disk here (edge tail at the boundary)
};

// A dart is a directed edge end; faces are traced so that each dart's face
// lies to its left.
struct Dart {
    int edge;   // index into the internal edge table (includes circle segments)
    int end;    // 0 or 1, the end the dart points toward
    bool operator<(const Dart& o) const { return edge != o.edge ? edge < o.edge : end < o.end; }
    bool operator==(const Dart& o) const { return edge == o.edge && end == o.end; }
};

class Diagram {
public:
    // Parses and validates the JSON diagram format.
    static Diagram parse(const std::string& json_text);
    static Diagram from_parts(bool tangle, std::vector<CrossingRecord> crossings,
                              std::vector<std::vector<int>> closed_loops,
                              std::vector<BoundaryPoint> boundary);

    bool is_tangle() const { return is_tangle_; }
    const std::vector<CrossingRecord>& crossings() const { return crossings_; }
    const std::vector<BoundaryPoint>& boundary() const { return boundary_; }
    const std::vector<std::vector<int>>& closed_loops() const { return closed_loops_; }

    // Arcs are PD edges merged along over-strand passes: the colorable strands.
    const std::vector<int>& arcs() const { return arc_ids_; }       // sorted representative labels
    int arc_of(int edge) const;                                     // representative label
    int component_of(int edge) const;                               // component index
    int num_components() const { return num_components_; }

    // Faces of the underlying 4-valent plane graph (plus, for tangles, the
    // boundary circle). Regions for shadow colorings exclude the outer face of
    // a tangle. Crossingless loops each contribute one region.
    int num_regions() const { return int(regions_.size()); }
    // Region pairs (right, left) across each PD edge, with the arc label;
    // the shadow rule is color(left) = color(right) * color(arc).
    struct Wall { int right_region; int left_region; int arc; };
    const std::vector<Wall>& walls() const { return walls_; }

    // Region to the left of the dart leaving crossing c through slot s, i.e.
    // the corner region between slots s and s+1. -1 for the tangle outer face.
    int corner_region(int crossing, int slot) const;

    std::string to_json() const;

    Diagram() = default;  // empty diagram; fill via parse/from_parts

private:
    void build();

    bool is_tangle_ = false;
    std::vector<CrossingRecord> crossings_;
    std::vector<BoundaryPoint> boundary_;
    std::vector<std::vector<int>> closed_loops_;

    std::map<int, int> edge_arc_;
    std::vector<int> arc_ids_;
    std::map<int, int> edge_component_;
    int num_components_ = 0;

    std::vector<std::vector<Dart>> regions_;       // darts whose left face is the region
    std::vector<Wall> walls_;
    std::map<std::pair<int, int>, int> corner_region_;  // (crossing, slot) -> region
};

// All orientation-consistent non-crossing closures of a tangle.
struct Closure {
    Diagram link;
    std::vector<std::pair<int, int>> joins;  // boundary position pairs
    std::map<int, int> edge_map;             // tangle edge -> closure edge label
};
std::vector<Closure> closures(const Diagram& tangle);

// Symmetric 0/1 matrix over components; entry (i,j) is the linking number of
// components i and j reduced mod 2.
std::vector<std::vector<int>> linking_matrix_mod2(const Diagram& d);

}  // namespace qh
