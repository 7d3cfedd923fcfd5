#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "quandle/diagram.hpp"
#include "quandle/quandle.hpp"

namespace qdl {

// arc representative edge -> quandle element
struct Coloring {
    std::map<int, int> arc;

    int at(const OrientedDiagram& d, int edge) const { return arc.at(d.arc_of(edge)); }
    bool operator==(const Coloring& o) const { return arc == o.arc; }
    bool operator<(const Coloring& o) const { return arc < o.arc; }
};

struct ShadowColoring {
    Coloring col;
    std::vector<int> face;  // face id -> element of X (or of the X-set carrier)
};

// generators are arc indices 0..g-1; a relation (i, j, k) reads x_i * x_j = x_k
struct QuandlePresentation {
    int generators = 0;
    std::vector<std::array<int, 3>> relations;
};

// All colorings in canonical (lexicographic by arc colors) order.
// kei_mode checks the kei axiom and then treats crossings without
// co-orientation (the two crossing rules coincide for a kei).
std::vector<Coloring> enumerate_colorings(const OrientedDiagram& d,
                                          const FiniteQuandle& q,
                                          bool kei_mode = false);

// Independent dense enumeration over all |X|^arcs assignments.
std::vector<Coloring> brute_force_colorings(const OrientedDiagram& d,
                                            const FiniteQuandle& q);

// Unique shadow extension with base_color on the unbounded face; with an
// X-set, faces take colors in the carrier of E and step by its action.
ShadowColoring extend_to_shadow(const OrientedDiagram& d, const FiniteQuandle& q,
                                const Coloring& col, int base_color,
                                const XSet* xset = nullptr);

std::vector<ShadowColoring> enumerate_shadow_colorings(const OrientedDiagram& d,
                                                       const FiniteQuandle& q);

QuandlePresentation fundamental_presentation(const OrientedDiagram& d);
QuandlePresentation shadow_presentation(const OrientedDiagram& d);

// number of quandle homomorphisms presentation -> q (dense search)
long long count_homs(const QuandlePresentation& p, const FiniteQuandle& q);

Coloring act_on_coloring(const Coloring& col, const FiniteQuandle& q, int x);

// partition of indices into the given canonical-ordered coloring list
std::vector<std::vector<int>> coloring_orbits(const std::vector<Coloring>& cols,
                                              const FiniteQuandle& q);

} // namespace qdl
