#include "quandle/coloring.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace qdl {

namespace {

struct CrossingRel {
    int in_arc, over_arc, out_arc, sign;
};

std::vector<CrossingRel> crossing_relations(const OrientedDiagram& d) {
    std::vector<CrossingRel> rels;
    for (int ci = 0; ci < d.crossings(); ++ci) {
        const auto& x = d.pd()[ci];
        rels.push_back({d.arc_of(x[0]), d.arc_of(x[1]), d.arc_of(x[2]),
                        d.signs()[ci]});
    }
    return rels;
}

bool relation_holds(const FiniteQuandle& q, const CrossingRel& r,
                    const std::map<int, int>& col) {
    const int a = col.at(r.in_arc), b = col.at(r.over_arc), c = col.at(r.out_arc);
    return r.sign > 0 ? q.op(a, b) == c : q.op(c, b) == a;
}

} // namespace

std::vector<Coloring> enumerate_colorings(const OrientedDiagram& d,
                                          const FiniteQuandle& q, bool kei_mode) {
    if (kei_mode)
        q.require_kei("kei-mode coloring");
    else
        q.require_rack("coloring");
    const auto rels = crossing_relations(d);
    const auto& arcs = d.arcs();
    const int k = q.size();
    std::vector<Coloring> out;
    std::map<int, int> col;

    // backtrack over arcs in canonical order; after each assignment,
    // propagate values forced through crossings
    std::function<void(size_t)> go = [&](size_t i) {
        while (i < arcs.size() && col.count(arcs[i])) ++i;
        if (i == arcs.size()) {
            for (const auto& r : rels)
                if (!relation_holds(q, r, col)) return;
            out.push_back({col});
            return;
        }
        const int arc = arcs[i];
        for (int v = 0; v < k; ++v) {
            std::map<int, int> saved = col;
            col[arc] = v;
            bool ok = true, changed = true;
            while (ok && changed) {
                changed = false;
                for (const auto& r : rels) {
                    const bool ha = col.count(r.in_arc), hb = col.count(r.over_arc),
                               hc = col.count(r.out_arc);
                    if (!hb) continue;
                    const int b = col[r.over_arc];
                    if (ha && !hc) {
                        col[r.out_arc] = r.sign > 0 ? q.op(col[r.in_arc], b)
                                                    : q.inv_op(col[r.in_arc], b);
                        changed = true;
                    } else if (hc && !ha) {
                        col[r.in_arc] = r.sign > 0 ? q.inv_op(col[r.out_arc], b)
                                                   : q.op(col[r.out_arc], b);
                        changed = true;
                    } else if (ha && hc && !relation_holds(q, r, col)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) go(i + 1);
            col = std::move(saved);
        }
    };
    go(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Coloring> brute_force_colorings(const OrientedDiagram& d,
                                            const FiniteQuandle& q) {
    const auto rels = crossing_relations(d);
    const auto& arcs = d.arcs();
    const int k = q.size();
    double total = 1;
    for (size_t i = 0; i < arcs.size(); ++i) total *= k;
    if (total > 1e6) throw resource_error("brute-force coloring space too large");
    std::vector<Coloring> out;
    std::vector<int> v(arcs.size(), 0);
    for (;;) {
        std::map<int, int> col;
        for (size_t i = 0; i < arcs.size(); ++i) col[arcs[i]] = v[i];
        bool ok = true;
        for (const auto& r : rels)
            if (!relation_holds(q, r, col)) {
                ok = false;
                break;
            }
        if (ok) out.push_back({std::move(col)});
        size_t i = 0;
        while (i < v.size() && ++v[i] == k) v[i++] = 0;
        if (i == v.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

ShadowColoring extend_to_shadow(const OrientedDiagram& d, const FiniteQuandle& q,
                                const Coloring& col, int base_color,
                                const XSet* xset) {
    q.require_rack("shadow extension");
    const int carrier = xset ? xset->carrier_size() : q.size();
    if (base_color < 0 || base_color >= carrier)
        throw parameter_error("base color outside the carrier");
    std::vector<std::vector<int>> inverse;
    if (xset) {
        if (!xset->is_rack_set())
            throw parameter_error("shadow extension needs a rack-set action");
        inverse.assign(carrier, std::vector<int>(q.size(), -1));
        for (int e = 0; e < carrier; ++e)
            for (int x = 0; x < q.size(); ++x) inverse[xset->action[e][x]][x] = e;
    }
    auto step = [&](int face_color, int edge_color) {
        return xset ? xset->action[face_color][edge_color]
                    : q.op(face_color, edge_color);
    };
    auto step_back = [&](int face_color, int edge_color) {
        return xset ? inverse[face_color][edge_color]
                    : q.inv_op(face_color, edge_color);
    };

    ShadowColoring sh;
    sh.col = col;
    sh.face.assign(d.num_faces(), -1);
    sh.face[d.unbounded_face()] = base_color;
    std::vector<int> queue{d.unbounded_face()};
    std::vector<std::vector<std::array<int, 3>>> adj(d.num_faces());
    for (int e : d.edges()) {
        auto [nf, pf] = d.np_faces(e);
        const int c = col.arc.at(d.arc_of(e));
        adj[nf].push_back({pf, c, 1});
        adj[pf].push_back({nf, c, -1});
    }
    while (!queue.empty()) {
        const int f = queue.back();
        queue.pop_back();
        for (const auto& [g, c, dir] : adj[f]) {
            const int want = dir > 0 ? step(sh.face[f], c) : step_back(sh.face[f], c);
            if (sh.face[g] < 0) {
                sh.face[g] = want;
                queue.push_back(g);
            } else if (sh.face[g] != want) {
                throw error("shadow coloring failed to close up (diagram or rack bug)");
            }
        }
    }
    for (int v : sh.face)
        if (v < 0) throw error("shadow extension did not reach every face");
    return sh;
}

std::vector<ShadowColoring> enumerate_shadow_colorings(const OrientedDiagram& d,
                                                       const FiniteQuandle& q) {
    std::vector<ShadowColoring> out;
    for (const auto& col : enumerate_colorings(d, q))
        for (int base = 0; base < q.size(); ++base)
            out.push_back(extend_to_shadow(d, q, col, base));
    return out;
}

QuandlePresentation fundamental_presentation(const OrientedDiagram& d) {
    QuandlePresentation p;
    const auto& arcs = d.arcs();
    p.generators = static_cast<int>(arcs.size());
    std::map<int, int> idx;
    for (int i = 0; i < p.generators; ++i) idx[arcs[i]] = i;
    for (int ci = 0; ci < d.crossings(); ++ci) {
        const auto& x = d.pd()[ci];
        const int a = idx[d.arc_of(x[0])], b = idx[d.arc_of(x[1])],
                  c = idx[d.arc_of(x[2])];
        if (d.signs()[ci] > 0)
            p.relations.push_back({a, b, c});
        else
            p.relations.push_back({c, b, a});
    }
    return p;
}

QuandlePresentation shadow_presentation(const OrientedDiagram& d) {
    auto p = fundamental_presentation(d);
    ++p.generators;  // one free shadow generator, no new relations
    return p;
}

long long count_homs(const QuandlePresentation& p, const FiniteQuandle& q) {
    const int k = q.size();
    double total = 1;
    for (int i = 0; i < p.generators; ++i) total *= k;
    if (total > 2e7) throw resource_error("homomorphism search space too large");
    std::vector<int> v(p.generators, 0);
    long long count = 0;
    for (;;) {
        bool ok = true;
        for (const auto& r : p.relations)
            if (q.op(v[r[0]], v[r[1]]) != v[r[2]]) {
                ok = false;
                break;
            }
        count += ok;
        int i = 0;
        while (i < p.generators && ++v[i] == k) v[i++] = 0;
        if (i == p.generators) break;
    }
    return count;
}

Coloring act_on_coloring(const Coloring& col, const FiniteQuandle& q, int x) {
    q.require_shelf("coloring action");
    Coloring out;
    for (const auto& [arc, v] : col.arc) out.arc[arc] = q.op(v, x);
    return out;
}

std::vector<std::vector<int>> coloring_orbits(const std::vector<Coloring>& cols,
                                              const FiniteQuandle& q) {
    std::map<Coloring, int> index;
    for (size_t i = 0; i < cols.size(); ++i) index[cols[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> orbits;
    std::set<int> seen;
    for (size_t i = 0; i < cols.size(); ++i) {
        if (seen.count(static_cast<int>(i))) continue;
        std::vector<int> orbit;
        std::vector<int> stack{static_cast<int>(i)};
        while (!stack.empty()) {
            const int cur = stack.back();
            stack.pop_back();
            if (seen.count(cur)) continue;
            seen.insert(cur);
            orbit.push_back(cur);
            for (int x = 0; x < q.size(); ++x) {
                auto next = act_on_coloring(cols[cur], q, x);
                auto it = index.find(next);
                if (it == index.end())
                    throw error("coloring action left the coloring set");
                stack.push_back(it->second);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

} // namespace qdl
