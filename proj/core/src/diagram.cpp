#include "quandle/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qdl {

namespace {

int slot_of(const PdTuple& x, int edge, int skip_slot = -1) {
    for (int p = 0; p < 4; ++p)
        if (x[p] == edge && p != skip_slot) return p;
    return -1;
}

bool is_under_slot(int p) { return p == 0 || p == 2; }

} // namespace

// ---------------------------------------------------------------------------
// construction

OrientedDiagram OrientedDiagram::unknot(int circles) {
    if (circles < 1) throw parameter_error("unknot needs at least one circle");
    OrientedDiagram d;
    d.zero_circles_ = circles;
    for (int i = 1; i <= circles; ++i) {
        d.edges_.push_back(i);
        d.components_.push_back({i});
        d.comp_of_[i] = i - 1;
        d.arc_of_[i] = i;
        d.arcs_.push_back(i);
    }
    // face 0 unbounded, face i inside circle i
    d.faces_.assign(circles + 1, {});
    d.unbounded_ = 0;
    return d;
}

OrientedDiagram OrientedDiagram::from_pd(std::vector<PdTuple> pd) {
    if (pd.empty()) throw format_error("no crossings (use the literal \"U\" for the unknot)");
    OrientedDiagram d;
    d.pd_ = std::move(pd);
    d.derive();
    return d;
}

OrientedDiagram OrientedDiagram::parse_pd(const std::string& text) {
    std::vector<PdTuple> pd;
    int circles = 0;
    std::string tok;
    std::vector<std::string> toks;
    for (char ch : text) {
        if (ch == ';') {
            toks.push_back(tok);
            tok.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            tok += ch;
        }
    }
    toks.push_back(tok);
    for (const auto& t : toks) {
        if (t.empty()) continue;
        if (t == "U") {
            ++circles;
            continue;
        }
        if (t.size() < 4 || t[0] != 'X' || t[1] != '(' || t.back() != ')')
            throw format_error("bad PD token: " + t);
        PdTuple x{};
        std::string body = t.substr(2, t.size() - 3);
        std::replace(body.begin(), body.end(), ',', ' ');
        std::istringstream is(body);
        for (int i = 0; i < 4; ++i)
            if (!(is >> x[i]) || x[i] < 1)
                throw format_error("bad PD token: " + t);
        int extra;
        if (is >> extra) throw format_error("bad PD token: " + t);
        pd.push_back(x);
    }
    if (circles && !pd.empty())
        throw format_error("mixing U circles with crossings is not supported");
    if (circles) return unknot(circles);
    if (pd.empty()) throw format_error("no crossings (use the literal \"U\" for the unknot)");
    return from_pd(std::move(pd));
}

void OrientedDiagram::derive() {
    std::map<int, std::vector<int>> occ;
    for (int ci = 0; ci < crossings(); ++ci)
        for (int p = 0; p < 4; ++p) occ[pd_[ci][p]].push_back(4 * ci + p);
    edges_.clear();
    for (const auto& [e, slots] : occ) {
        if (slots.size() != 2)
            throw format_error("edge " + std::to_string(e) + " appears " +
                               std::to_string(slots.size()) + " times");
        edges_.push_back(e);
    }
    solve_directions();
    trace_faces();
    find_components();
    find_arcs();
    euler_check();
    unbounded_ = default_unbounded();
}

void OrientedDiagram::solve_directions() {
    head_.clear();
    tail_.clear();
    auto set_head = [&](int e, int dart) {
        if (head_.count(e))
            throw format_error("orientation inconsistency: edge " + std::to_string(e) +
                               " has two heads");
        head_[e] = dart;
    };
    auto set_tail = [&](int e, int dart) {
        if (tail_.count(e))
            throw format_error("orientation inconsistency: edge " + std::to_string(e) +
                               " has two tails");
        tail_[e] = dart;
    };
    for (int ci = 0; ci < crossings(); ++ci) {
        set_head(pd_[ci][0], 4 * ci + 0);
        set_tail(pd_[ci][2], 4 * ci + 2);
    }
    std::vector<int> pos(crossings(), -1);  // 1: over runs slot 1 -> 3
    auto commit = [&](int ci, bool p) {
        pos[ci] = p ? 1 : 0;
        const auto& x = pd_[ci];
        if (p) {
            set_head(x[1], 4 * ci + 1);
            set_tail(x[3], 4 * ci + 3);
        } else {
            set_head(x[3], 4 * ci + 3);
            set_tail(x[1], 4 * ci + 1);
        }
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int ci = 0; ci < crossings(); ++ci) {
            if (pos[ci] >= 0) continue;
            const int b = pd_[ci][1], dd = pd_[ci][3];
            if (head_.count(dd) || tail_.count(b)) {
                commit(ci, true);
                changed = true;
            } else if (head_.count(b) || tail_.count(dd)) {
                commit(ci, false);
                changed = true;
            }
        }
    }
    for (int ci = 0; ci < crossings(); ++ci) {
        if (pos[ci] >= 0) continue;
        // labels increase along components; wrap back to the smaller label
        const int b = pd_[ci][1], dd = pd_[ci][3];
        commit(ci, dd == b + 1 || dd < b - 1);
    }
    for (int e : edges_)
        if (!head_.count(e) || !tail_.count(e))
            throw format_error("orientation inconsistency at edge " + std::to_string(e));
    sign_.clear();
    for (int ci = 0; ci < crossings(); ++ci) sign_.push_back(pos[ci] ? 1 : -1);
}

void OrientedDiagram::trace_faces() {
    std::map<int, std::vector<int>> occ;
    for (int ci = 0; ci < crossings(); ++ci)
        for (int p = 0; p < 4; ++p) occ[pd_[ci][p]].push_back(4 * ci + p);
    std::map<int, int> nxt;
    for (int ci = 0; ci < crossings(); ++ci)
        for (int p = 0; p < 4; ++p) {
            const int p2 = (p + 3) % 4;
            const auto& slots = occ[pd_[ci][p2]];
            nxt[4 * ci + p] = (slots[0] == 4 * ci + p2) ? slots[1] : slots[0];
        }
    faces_.clear();
    face_of_dart_.clear();
    for (int ci = 0; ci < crossings(); ++ci)
        for (int p = 0; p < 4; ++p) {
            int d = 4 * ci + p;
            if (face_of_dart_.count(d)) continue;
            std::vector<int> f;
            while (!face_of_dart_.count(d)) {
                face_of_dart_[d] = static_cast<int>(faces_.size());
                f.push_back(d);
                d = nxt[d];
            }
            faces_.push_back(std::move(f));
        }
}

void OrientedDiagram::find_components() {
    components_.clear();
    comp_of_.clear();
    for (int e : edges_) {
        if (comp_of_.count(e)) continue;
        std::vector<int> cyc;
        int x = e;
        while (!comp_of_.count(x)) {
            comp_of_[x] = static_cast<int>(components_.size());
            cyc.push_back(x);
            x = next_edge(x);
        }
        components_.push_back(std::move(cyc));
    }
}

int OrientedDiagram::next_edge(int edge) const {
    if (zero_circles_) return edge;
    auto it = head_.find(edge);
    if (it == head_.end()) throw parameter_error("unknown edge " + std::to_string(edge));
    const int ci = it->second / 4, p = it->second % 4;
    if (p == 0) return pd_[ci][2];
    if (p == 1) return pd_[ci][3];
    return pd_[ci][1];
}

void OrientedDiagram::find_arcs() {
    std::map<int, int> parent;
    for (int e : edges_) parent[e] = e;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int ci = 0; ci < crossings(); ++ci) {
        int a = find(pd_[ci][1]), b = find(pd_[ci][3]);  // over strand continues
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    arc_of_.clear();
    arcs_.clear();
    std::set<int> reps;
    for (int e : edges_) {
        arc_of_[e] = find(e);
        reps.insert(arc_of_[e]);
    }
    arcs_.assign(reps.begin(), reps.end());
}

void OrientedDiagram::euler_check() const {
    // union crossings sharing an edge; V - E + F = 1 + #graph components
    const int n = crossings();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::map<int, int> first_at;
    for (int ci = 0; ci < n; ++ci)
        for (int p = 0; p < 4; ++p) {
            auto [it, fresh] = first_at.emplace(pd_[ci][p], ci);
            if (!fresh) parent[find(ci)] = find(it->second);
        }
    std::set<int> comps;
    for (int ci = 0; ci < n; ++ci) comps.insert(find(ci));
    const int expected = 1 + static_cast<int>(comps.size());
    if (n - 2 * n + num_faces() != expected)
        throw format_error("Euler check failed: not a planar diagram");
}

int OrientedDiagram::default_unbounded() const {
    int best = 0;
    for (int f = 1; f < num_faces(); ++f)
        if (faces_[f].size() > faces_[best].size()) best = f;
    return best;
}

// ---------------------------------------------------------------------------
// accessors

int OrientedDiagram::writhe() const {
    return std::accumulate(sign_.begin(), sign_.end(), 0);
}

int OrientedDiagram::face_of(int crossing, int slot) const {
    auto it = face_of_dart_.find(4 * crossing + slot);
    if (it == face_of_dart_.end()) throw parameter_error("bad dart");
    return it->second;
}

int OrientedDiagram::dart_edge(int dart) const {
    const int ci = dart / 4, p = dart % 4;
    if (ci < 0 || ci >= crossings()) throw parameter_error("bad dart");
    return pd_[ci][(p + 3) % 4];
}

std::vector<int> OrientedDiagram::face_edges(int face) const {
    if (zero_circles_) {
        if (face == 0) return edges_;
        if (face >= 1 && face <= zero_circles_) return {face};
        throw parameter_error("bad face");
    }
    if (face < 0 || face >= num_faces()) throw parameter_error("bad face");
    std::set<int> out;
    for (int d : faces_[face]) out.insert(dart_edge(d));
    return {out.begin(), out.end()};
}

std::pair<int, int> OrientedDiagram::np_faces(int edge) const {
    if (zero_circles_) {
        if (edge < 1 || edge > zero_circles_) throw parameter_error("bad edge");
        return {0, edge};  // normal points into the circle
    }
    auto h = head_.find(edge), t = tail_.find(edge);
    if (h == head_.end()) throw parameter_error("unknown edge " + std::to_string(edge));
    return {face_of_dart_.at(h->second), face_of_dart_.at(t->second)};
}

int OrientedDiagram::source_dart(int crossing) const {
    if (crossing < 0 || crossing >= crossings()) throw parameter_error("bad crossing");
    return 4 * crossing + (sign_[crossing] > 0 ? 0 : 3);
}

int OrientedDiagram::source_face(int crossing) const {
    return face_of_dart_.at(source_dart(crossing));
}

int OrientedDiagram::arc_of(int edge) const {
    auto it = arc_of_.find(edge);
    if (it == arc_of_.end()) throw parameter_error("unknown edge " + std::to_string(edge));
    return it->second;
}

int OrientedDiagram::component_of(int edge) const {
    auto it = comp_of_.find(edge);
    if (it == comp_of_.end()) throw parameter_error("unknown edge " + std::to_string(edge));
    return it->second;
}

void OrientedDiagram::set_unbounded_face(int f) {
    if (f < 0 || f >= num_faces()) throw parameter_error("bad face");
    unbounded_ = f;
}

std::vector<int> OrientedDiagram::alexander_numbering() const {
    std::vector<int> k(num_faces(), 0);
    if (zero_circles_) {
        for (int f = 1; f < num_faces(); ++f) k[f] = 1;
        if (unbounded_ != 0) throw error("zero-circle diagrams pin the outer face to 0");
        return k;
    }
    std::vector<char> known(num_faces(), 0);
    std::vector<std::vector<std::pair<int, int>>> adj(num_faces());
    for (int e : edges_) {
        auto [nf, pf] = np_faces(e);
        adj[nf].emplace_back(pf, 1);
        adj[pf].emplace_back(nf, -1);
    }
    known[unbounded_] = 1;
    std::vector<int> queue{unbounded_};
    while (!queue.empty()) {
        int f = queue.back();
        queue.pop_back();
        for (auto [g, step] : adj[f]) {
            if (known[g]) {
                if (k[g] != k[f] + step)
                    throw error("inconsistent Alexander numbering (diagram bug)");
            } else {
                known[g] = 1;
                k[g] = k[f] + step;
                queue.push_back(g);
            }
        }
    }
    for (char c : known)
        if (!c) throw error("Alexander numbering did not reach every face");
    return k;
}

// ---------------------------------------------------------------------------
// serialization

std::string OrientedDiagram::to_pd_string() const {
    if (zero_circles_) {
        std::string s;
        for (int i = 0; i < zero_circles_; ++i) s += (i ? ";U" : "U");
        return s;
    }
    std::ostringstream os;
    for (int ci = 0; ci < crossings(); ++ci) {
        if (ci) os << ";";
        os << "X(" << pd_[ci][0] << "," << pd_[ci][1] << "," << pd_[ci][2] << ","
           << pd_[ci][3] << ")";
    }
    return os.str();
}

std::string OrientedDiagram::to_json() const {
    nlohmann::json j;
    j["pd"] = nlohmann::json::array();
    if (zero_circles_) {
        j["unknots"] = zero_circles_;
    } else {
        for (const auto& x : pd_) j["pd"].push_back({x[0], x[1], x[2], x[3]});
        j["unbounded_face"] = face_edges(unbounded_);
    }
    return j.dump();
}

OrientedDiagram OrientedDiagram::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw format_error(std::string("bad diagram JSON: ") + e.what());
    }
    if (!j.contains("pd") || !j["pd"].is_array())
        throw format_error("diagram JSON needs a \"pd\" array");
    if (j["pd"].empty()) return unknot(j.value("unknots", 1));
    std::vector<PdTuple> pd;
    for (const auto& row : j["pd"]) {
        if (!row.is_array() || row.size() != 4)
            throw format_error("each pd entry must be a 4-tuple");
        pd.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<int>(),
                      row[3].get<int>()});
    }
    auto d = from_pd(std::move(pd));
    if (j.contains("unbounded_face")) {
        std::vector<int> want = j["unbounded_face"].get<std::vector<int>>();
        std::sort(want.begin(), want.end());
        want.erase(std::unique(want.begin(), want.end()), want.end());
        int found = -1;
        for (int f = 0; f < d.num_faces() && found < 0; ++f)
            if (d.face_edges(f) == want) found = f;
        if (found < 0) throw format_error("unbounded_face does not match any face");
        d.unbounded_ = found;
    }
    return d;
}

// ---------------------------------------------------------------------------
// Reidemeister moves

OrientedDiagram::MoveResult OrientedDiagram::finish_move(
    std::vector<PdTuple> raw, std::map<int, int> succ,
    const std::map<int, int>& survivors, const std::vector<int>& site_edges) const {
    MoveResult res;
    if (raw.empty()) {
        // everything spliced away: pure unknot circles, one per succ cycle
        std::map<int, int> circle_of;
        int circles = 0;
        for (const auto& [e, _] : succ) {
            if (circle_of.count(e)) continue;
            ++circles;
            int x = e;
            while (!circle_of.count(x)) {
                circle_of[x] = circles;
                auto it = succ.find(x);
                x = (it == succ.end()) ? x : it->second;
            }
        }
        if (!circles) throw move_error("move result is empty");
        res.diagram = unknot(circles);
        for (const auto& [olde, rawe] : survivors) res.edge_map[olde] = circle_of.at(rawe);
        return res;
    }
    // labels present in the surgered code
    std::set<int> present;
    for (const auto& x : raw)
        for (int e : x) present.insert(e);
    for (int e : present)
        if (!succ.count(e))
            throw move_error("internal: no orientation for edge " + std::to_string(e));
    // relabel 1..E following orientation, components ordered by minimal label
    std::map<int, int> relab;
    std::set<int> seen;
    int next_label = 1;
    for (const auto& [e0, _] : succ) {
        if (seen.count(e0)) continue;
        std::vector<int> cyc;
        int x = e0;
        do {
            seen.insert(x);
            if (present.count(x)) cyc.push_back(x);
            x = succ.at(x);
        } while (x != e0);
        if (cyc.empty()) throw move_error("move leaves a closed component with no crossings");
        int start = static_cast<int>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
        for (size_t i = 0; i < cyc.size(); ++i)
            relab[cyc[(start + i) % cyc.size()]] = next_label++;
    }
    for (int e : present)
        if (!relab.count(e))
            throw move_error("internal: orientation does not cover the move result");
    for (auto& x : raw)
        for (int& e : x) e = relab.at(e);
    res.diagram = from_pd(std::move(raw));
    for (const auto& [olde, rawe] : survivors) {
        auto it = relab.find(rawe);
        if (it != relab.end()) res.edge_map[olde] = it->second;
    }
    // carry the unbounded-face designation through an untouched anchor edge
    if (!zero_circles_) {
        std::set<int> site(site_edges.begin(), site_edges.end());
        for (int e : face_edges(unbounded_)) {
            if (site.count(e) || !res.edge_map.count(e)) continue;
            auto [n_old, p_old] = np_faces(e);
            if (n_old != unbounded_ && p_old != unbounded_) continue;
            auto [n_new, p_new] = res.diagram.np_faces(res.edge_map.at(e));
            res.diagram.unbounded_ = (n_old == unbounded_) ? n_new : p_new;
            break;
        }
    }
    return res;
}

namespace {

PdTuple make_crossing(int under_in, int under_out, int over_in, int over_out, int sgn) {
    if (sgn > 0) return {under_in, over_in, under_out, over_out};
    return {under_in, over_out, under_out, over_in};
}

} // namespace

OrientedDiagram::MoveResult OrientedDiagram::apply_r1(int edge, int handedness) const {
    if (handedness != 1 && handedness != -1)
        throw parameter_error("handedness must be +1 or -1");
    if (!std::count(edges_.begin(), edges_.end(), edge))
        throw move_error("unknown edge " + std::to_string(edge));
    const int fresh = (edges_.empty() ? 0 : *std::max_element(edges_.begin(), edges_.end()));
    const int g1 = fresh + 1, g2 = fresh + 2;
    std::vector<PdTuple> raw = pd_;
    std::map<int, int> succ;
    for (int e : edges_) succ[e] = next_edge(e);
    if (zero_circles_) {
        // the circle closes straight back onto the kink
        raw.push_back(make_crossing(edge, g1, g1, edge, handedness));
        succ[edge] = g1;
        succ[g1] = edge;
    } else {
        const int h = head_.at(edge);
        raw[h / 4][h % 4] = g2;
        // strand: edge -> under -> g1 -> loop -> over -> g2
        raw.push_back(make_crossing(edge, g1, g1, g2, handedness));
        succ[g2] = succ[edge];
        succ[edge] = g1;
        succ[g1] = g2;
    }
    std::map<int, int> survivors;
    for (int e : edges_) survivors[e] = e;
    auto res = finish_move(std::move(raw), std::move(succ), survivors, {edge});
    if (res.diagram.writhe() != writhe() + handedness ||
        res.diagram.num_components() != num_components())
        throw move_error("internal: R1 invariants violated");
    return res;
}

OrientedDiagram::MoveResult OrientedDiagram::undo_r1(int crossing) const {
    if (crossing < 0 || crossing >= crossings()) throw move_error("bad crossing");
    const auto& x = pd_[crossing];
    bool kink = false;
    for (int p = 0; p < 4 && !kink; ++p)
        kink = slot_of(x, x[p], p) >= 0;
    if (!kink) throw move_error("crossing is not a kink");
    // splice the crossing away
    std::map<int, int> parent;
    for (int e : edges_) parent[e] = e;
    std::function<int(int)> find = [&](int y) {
        while (parent[y] != y) y = parent[y] = parent[parent[y]];
        return y;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    unite(x[0], x[2]);
    unite(x[1], x[3]);
    std::vector<PdTuple> raw;
    for (int ci = 0; ci < crossings(); ++ci) {
        if (ci == crossing) continue;
        PdTuple y = pd_[ci];
        for (int& e : y) e = find(e);
        raw.push_back(y);
    }
    std::map<int, int> succ;
    for (int e : edges_) {
        int a = find(e), b = find(next_edge(e));
        if (a != b) succ[a] = b;
    }
    for (int e : edges_)
        if (!succ.count(find(e))) succ[find(e)] = find(e);
    std::map<int, int> survivors;
    for (int e : edges_) survivors[e] = find(e);
    std::vector<int> site(x.begin(), x.end());
    auto res = finish_move(std::move(raw), std::move(succ), survivors, site);
    if (res.diagram.writhe() != writhe() - sign_[crossing])
        throw move_error("internal: R1 undo changed the writhe wrongly");
    return res;
}

OrientedDiagram::MoveResult OrientedDiagram::apply_r2(int over_edge, int under_edge) const {
    auto has_edge = [&](int e) {
        return std::count(edges_.begin(), edges_.end(), e) > 0;
    };
    if (!has_edge(over_edge) || !has_edge(under_edge)) throw move_error("unknown edge");
    bool common = zero_circles_ > 0;  // every circle borders the outer face
    for (int f = 0; f < num_faces() && !common; ++f) {
        auto fe = face_edges(f);
        common = std::count(fe.begin(), fe.end(), over_edge) &&
                 std::count(fe.begin(), fe.end(), under_edge);
    }
    if (!common) throw move_error("edges do not border a common face");

    const int fresh = *std::max_element(edges_.begin(), edges_.end());
    std::map<int, int> succ0;
    for (int e : edges_) succ0[e] = next_edge(e);
    std::map<int, int> survivors;
    for (int e : edges_) survivors[e] = e;

    auto try_candidate = [&](std::vector<PdTuple> raw, std::map<int, int> succ,
                             const std::vector<int>& site) -> std::optional<MoveResult> {
        try {
            auto res = finish_move(std::move(raw), std::move(succ), survivors, site);
            if (res.diagram.writhe() != writhe() ||
                res.diagram.crossings() != crossings() + 2)
                return std::nullopt;
            return res;
        } catch (const error&) {
            return std::nullopt;
        }
    };

    if (over_edge == under_edge) {
        // poke a single zero-crossing circle across itself
        if (!zero_circles_ || crossings() || zero_circles_ != 1)
            throw move_error("self-poke is only supported on a lone unknot circle");
        const int p1 = over_edge, p2 = fresh + 1, p3 = fresh + 2, p4 = fresh + 3;
        for (int s : {1, -1}) {
            std::vector<PdTuple> raw{make_crossing(p1, p2, p4, p1, s),
                                     make_crossing(p2, p3, p3, p4, -s)};
            std::map<int, int> succ{{p1, p2}, {p2, p3}, {p3, p4}, {p4, p1}};
            if (auto res = try_candidate(std::move(raw), std::move(succ), {p1}))
                return *res;
        }
        throw move_error("no planar R2 arrangement found");
    }

    const int m1 = fresh + 1, u2 = fresh + 2, m2 = fresh + 3, v2 = fresh + 4;
    const int u = over_edge, v = under_edge;
    for (int order : {0, 1}) {
        for (int s : {1, -1}) {
            std::vector<PdTuple> raw = pd_;
            if (!zero_circles_) {
                raw[head_.at(u) / 4][head_.at(u) % 4] = u2;
                raw[head_.at(v) / 4][head_.at(v) % 4] = v2;
            }
            if (order == 0) {
                raw.push_back(make_crossing(v, m2, u, m1, s));
                raw.push_back(make_crossing(m2, v2, m1, u2, -s));
            } else {
                raw.push_back(make_crossing(m2, v2, u, m1, s));
                raw.push_back(make_crossing(v, m2, m1, u2, -s));
            }
            std::map<int, int> succ = succ0;
            succ[u2] = succ[u];
            succ[u] = m1;
            succ[m1] = u2;
            succ[v2] = succ[v];
            succ[v] = m2;
            succ[m2] = v2;
            if (auto res = try_candidate(std::move(raw), std::move(succ), {u, v}))
                return *res;
        }
    }
    throw move_error("no planar R2 arrangement found");
}

OrientedDiagram::MoveResult OrientedDiagram::undo_r2(int c1, int c2) const {
    if (c1 < 0 || c2 < 0 || c1 >= crossings() || c2 >= crossings() || c1 == c2)
        throw move_error("bad crossing pair");
    const auto &x = pd_[c1], &y = pd_[c2];
    std::set<int> xs(x.begin(), x.end()), shared;
    for (int e : y)
        if (xs.count(e)) shared.insert(e);
    if (shared.size() != 2) throw move_error("crossings do not bound a bigon");
    auto it = shared.begin();
    int s1 = *it++, s2 = *it;
    auto role = [&](const PdTuple& t, int e) {
        int p = slot_of(t, e);
        return is_under_slot(p);  // true: under
    };
    bool s1_under = role(x, s1), s2_under = role(x, s2);
    if (role(y, s1) != s1_under || role(y, s2) != s2_under || s1_under == s2_under)
        throw move_error("crossings do not form an R2 bigon pattern");
    if (sign_[c1] + sign_[c2] != 0) throw move_error("bigon crossings must have opposite signs");
    bool bigon = false;
    for (int f = 0; f < num_faces() && !bigon; ++f) {
        if (faces_[f].size() != 2) continue;
        auto fe = face_edges(f);
        bigon = (fe == std::vector<int>{std::min(s1, s2), std::max(s1, s2)});
    }
    if (!bigon) throw move_error("shared edges do not bound a bigon face");

    std::map<int, int> parent;
    for (int e : edges_) parent[e] = e;
    std::function<int(int)> find = [&](int z) {
        while (parent[z] != z) z = parent[z] = parent[parent[z]];
        return z;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (int ci : {c1, c2}) {
        unite(pd_[ci][0], pd_[ci][2]);
        unite(pd_[ci][1], pd_[ci][3]);
    }
    std::vector<PdTuple> raw;
    for (int ci = 0; ci < crossings(); ++ci) {
        if (ci == c1 || ci == c2) continue;
        PdTuple t = pd_[ci];
        for (int& e : t) e = find(e);
        raw.push_back(t);
    }
    std::map<int, int> succ;
    for (int e : edges_) {
        int a = find(e), b = find(next_edge(e));
        if (a != b) succ[a] = b;
    }
    for (int e : edges_)
        if (!succ.count(find(e))) succ[find(e)] = find(e);
    std::map<int, int> survivors;
    for (int e : edges_) survivors[e] = find(e);
    std::vector<int> site(x.begin(), x.end());
    site.insert(site.end(), y.begin(), y.end());
    auto res = finish_move(std::move(raw), std::move(succ), survivors, site);
    if (res.diagram.writhe() != writhe())
        throw move_error("internal: R2 undo changed the writhe");
    return res;
}

std::vector<int> OrientedDiagram::r3_sites() const {
    std::vector<int> out;
    for (int f = 0; f < num_faces(); ++f) {
        if (zero_circles_ || faces_[f].size() != 3) continue;
        try {
            apply_r3(f);
            out.push_back(f);
        } catch (const move_error&) {
        }
    }
    return out;
}

OrientedDiagram::MoveResult OrientedDiagram::apply_r3(int face) const {
    if (zero_circles_ || face < 0 || face >= num_faces())
        throw move_error("bad face");
    if (faces_[face].size() != 3) throw move_error("face is not a triangle");
    std::array<int, 3> corner{}, mid{};
    for (int i = 0; i < 3; ++i) {
        corner[i] = faces_[face][i] / 4;
        mid[i] = dart_edge(faces_[face][i]);
    }
    if (std::set<int>(corner.begin(), corner.end()).size() != 3 ||
        std::set<int>(mid.begin(), mid.end()).size() != 3)
        throw move_error("triangle must have three distinct crossings and sides");
    // each side must be over at both corners (top strand), under at both
    // (bottom strand), or mixed (middle strand)
    int n_over = 0, n_under = 0, n_mixed = 0;
    for (int e : mid) {
        int cu = head_.at(e), cv = tail_.at(e);
        bool hu = is_under_slot(cu % 4), tu = is_under_slot(cv % 4);
        if (std::count(corner.begin(), corner.end(), cu / 4) == 0 ||
            std::count(corner.begin(), corner.end(), cv / 4) == 0)
            throw move_error("triangle side leaves the triangle");
        if (!hu && !tu) ++n_over;
        else if (hu && tu) ++n_under;
        else ++n_mixed;
    }
    if (n_over != 1 || n_under != 1 || n_mixed != 1)
        throw move_error("triangle lacks the pass-move over/under pattern");

    std::vector<PdTuple> raw = pd_;
    for (int e : mid) {
        // strand runs s_in -> X -> e -> Y -> s_out; after the move the
        // crossing order along the strand swaps
        const int X = tail_.at(e) / 4, Y = head_.at(e) / 4;
        // slots of the strand at X (e departs) and at Y (e arrives)
        const int out_slot_X = tail_.at(e) % 4;
        const int in_slot_Y = head_.at(e) % 4;
        int in_slot_X, out_slot_Y;
        if (is_under_slot(out_slot_X)) in_slot_X = 0;
        else in_slot_X = (out_slot_X == 3) ? 1 : 3;
        if (is_under_slot(in_slot_Y)) out_slot_Y = 2;
        else out_slot_Y = (in_slot_Y == 1) ? 3 : 1;
        const int s_in = pd_[X][in_slot_X];
        const int s_out = pd_[Y][out_slot_Y];
        raw[X][in_slot_X] = e;
        raw[X][out_slot_X] = s_out;
        raw[Y][in_slot_Y] = s_in;
        raw[Y][out_slot_Y] = e;
    }
    MoveResult res;
    try {
        res.diagram = from_pd(std::move(raw));
    } catch (const format_error& e) {
        throw move_error(std::string("R3 produced an invalid diagram: ") + e.what());
    }
    for (int e : edges_) res.edge_map[e] = e;
    if (res.diagram.writhe() != writhe() ||
        res.diagram.num_faces() != num_faces() ||
        res.diagram.num_components() != num_components())
        throw move_error("internal: R3 invariants violated");
    // reanchor the unbounded face
    std::set<int> site(mid.begin(), mid.end());
    for (int i = 0; i < 3; ++i)
        for (int e : pd_[corner[i]]) site.insert(e);
    for (int e : face_edges(unbounded_)) {
        if (site.count(e)) continue;
        auto [n_old, p_old] = np_faces(e);
        if (n_old != unbounded_ && p_old != unbounded_) continue;
        auto [n_new, p_new] = res.diagram.np_faces(e);
        res.diagram.unbounded_ = (n_old == unbounded_) ? n_new : p_new;
        break;
    }
    return res;
}

} // namespace qdl
