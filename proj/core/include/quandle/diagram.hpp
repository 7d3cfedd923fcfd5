#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quandle/errors.hpp"

namespace qdl {

// One crossing as a PD 4-tuple: edge labels counterclockwise starting
// from the incoming under-edge.  The under strand runs slot 0 -> slot 2;
// the over strand occupies slots 1 and 3, running 1 -> 3 at a positive
// crossing and 3 -> 1 at a negative one.
using PdTuple = std::array<int, 4>;

struct DiagramMove;

// Darts are encoded as 4*crossing + slot; the dart (c, p) is the arrival
// at crossing c through slot p.  The face of a dart is the region
// counterclockwise-before that arrival, so each face is a dart cycle.
class OrientedDiagram {
public:
    static OrientedDiagram parse_pd(const std::string& text);
    static OrientedDiagram from_pd(std::vector<PdTuple> pd);
    static OrientedDiagram unknot(int circles = 1);
    static OrientedDiagram from_json(const std::string& text);
    std::string to_pd_string() const;
    std::string to_json() const;

    int crossings() const { return static_cast<int>(pd_.size()); }
    const std::vector<PdTuple>& pd() const { return pd_; }
    int zero_circles() const { return zero_circles_; }
    const std::vector<int>& signs() const { return sign_; }
    int writhe() const;
    const std::vector<int>& edges() const { return edges_; }

    int num_faces() const { return static_cast<int>(faces_.size()); }
    const std::vector<std::vector<int>>& faces() const { return faces_; }
    int face_of(int crossing, int slot) const;
    // edge bounding the face side of a dart
    int dart_edge(int dart) const;
    std::vector<int> face_edges(int face) const;
    // (N, P): the co-orientation normal of the edge points from N to P
    std::pair<int, int> np_faces(int edge) const;
    int source_face(int crossing) const;
    int source_dart(int crossing) const;

    int arc_of(int edge) const;
    const std::vector<int>& arcs() const { return arcs_; }
    int num_components() const { return static_cast<int>(components_.size()); }
    const std::vector<std::vector<int>>& components() const { return components_; }
    int component_of(int edge) const;
    int next_edge(int edge) const;

    int unbounded_face() const { return unbounded_; }
    void set_unbounded_face(int f);
    // face -> integer; unbounded face 0, +1 stepping from N to P
    std::vector<int> alexander_numbering() const;

    using MoveResult = DiagramMove;
    MoveResult apply_r1(int edge, int handedness) const;
    MoveResult undo_r1(int crossing) const;
    MoveResult apply_r2(int over_edge, int under_edge) const;
    MoveResult undo_r2(int c1, int c2) const;
    MoveResult apply_r3(int face) const;
    std::vector<int> r3_sites() const;

private:
    void derive();
    void solve_directions();
    void trace_faces();
    void find_components();
    void find_arcs();
    void euler_check() const;
    int default_unbounded() const;
    MoveResult finish_move(std::vector<PdTuple> raw, std::map<int, int> succ,
                           const std::map<int, int>& survivors,
                           const std::vector<int>& site_edges) const;

    std::vector<PdTuple> pd_;
    int zero_circles_ = 0;
    std::vector<int> edges_;
    std::vector<int> sign_;
    std::map<int, int> head_;  // edge -> dart where it arrives
    std::map<int, int> tail_;  // edge -> dart where it departs
    std::vector<std::vector<int>> faces_;
    std::map<int, int> face_of_dart_;
    std::vector<std::vector<int>> components_;
    std::map<int, int> comp_of_;
    std::map<int, int> arc_of_;
    std::vector<int> arcs_;
    int unbounded_ = 0;
};

struct DiagramMove {
    OrientedDiagram diagram;
    // surviving old edge label -> new edge label
    std::map<int, int> edge_map;
};

} // namespace qdl
