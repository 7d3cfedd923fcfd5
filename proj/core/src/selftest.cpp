#include "quandle/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "quandle/invariants.hpp"

namespace qdl {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw format_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

struct Corpus {
    std::vector<std::pair<std::string, OrientedDiagram>> diagrams;
    std::vector<std::pair<std::string, MovePair>> pairs;
    Cocycle cocycle3;
    json oracle;
};

Corpus load(const std::string& oracle_path, const std::string& dir) {
    Corpus c;
    for (const char* name :
         {"unknot_0", "unknot_1", "unknot_2", "trefoil", "trefoil_6", "fig8",
          "hopf_pp", "hopf_mm"})
        c.diagrams.emplace_back(
            name, OrientedDiagram::from_json(slurp(dir + "/" + name + ".json")));
    for (const char* name :
         {"pair_r1_plus_trefoil", "pair_r1_minus_trefoil", "pair_r2_trefoil",
          "pair_r2_unknot", "pair_r3_trefoil", "pair_r1_hopf", "pair_r2_hopf"})
        c.pairs.emplace_back(name,
                             MovePair::from_json(slurp(dir + "/" + name + ".json")));
    c.cocycle3 = Cocycle::from_json(slurp(dir + "/cocycle_d3_deg3.json"));
    c.oracle = json::parse(slurp(oracle_path));
    return c;
}

// ------------------------------------------------------------------ 1
std::pair<bool, std::string> crit_boundary_squares() {
    long long tuples = 0;
    LaurentRing ring(3, {1, 1, 1});
    for (const auto& q : catalog()) {
        for (Theory th : {Theory::R, Theory::D, Theory::Q}) {
            for (bool tw : {false, true}) {
                ComplexSpec spec{&q, th, tw, 0,
                                 tw ? std::optional<LaurentRing>(ring) : std::nullopt};
                for (int n = 2; n <= 5; ++n) {
                    for (std::uint64_t key : complex_basis(spec, n)) {
                        ++tuples;
                        if (!tw) {
                            Chain c(n, q.size());
                            c.add_key(key, 1);
                            if (!boundary(spec, boundary(spec, c)).is_zero())
                                return {false, q.name() + " " + theory_name(th) +
                                                   " degree " + std::to_string(n)};
                        } else {
                            TwistedChain c(n, q.size(), ring);
                            c.add_key(key, ring.one());
                            if (!boundary(spec, boundary(spec, c)).is_zero())
                                return {false, q.name() + " " + theory_name(th) +
                                                   " twisted degree " +
                                                   std::to_string(n)};
                        }
                    }
                }
            }
        }
    }
    return {true, std::to_string(tuples) + " basis tuples, degrees 2..5"};
}

// ------------------------------------------------------------------ 2
std::pair<bool, std::string> crit_simplicial_identities() {
    long long checks = 0;
    for (const auto& q : catalog()) {
        const int k = q.size();
        for (int n = 2; n <= 4; ++n) {
            std::uint64_t total = 1;
            for (int i = 0; i < n; ++i) total *= k;
            for (std::uint64_t key = 0; key < total; ++key) {
                auto t = unpack_tuple(key, n, k);
                for (int i = 1; i <= n - 1; ++i)
                    for (int j = i + 1; j <= n; ++j) {
                        ++checks;
                        if (face_star0_tuple(i, face_star0_tuple(j, t)) !=
                                face_star0_tuple(j - 1, face_star0_tuple(i, t)) ||
                            face_star_tuple(q, i, face_star_tuple(q, j, t)) !=
                                face_star_tuple(q, j - 1, face_star_tuple(q, i, t)))
                            return {false, "(1) fails on " + q.name()};
                    }
                for (int i = 1; i <= n; ++i)
                    for (int j = i; j <= n; ++j) {
                        ++checks;
                        if (degeneracy_tuple(i, degeneracy_tuple(j, t)) !=
                            degeneracy_tuple(j + 1, degeneracy_tuple(i, t)))
                            return {false, "(2) fails on " + q.name()};
                    }
                for (int i = 1; i <= n + 1; ++i)
                    for (int j = 1; j <= n; ++j) {
                        if (i == j || i == j + 1) continue;
                        ++checks;
                        auto l0 = face_star0_tuple(i, degeneracy_tuple(j, t));
                        auto l1 = face_star_tuple(q, i, degeneracy_tuple(j, t));
                        bool ok =
                            i < j ? (l0 == degeneracy_tuple(j - 1,
                                                            face_star0_tuple(i, t)) &&
                                     l1 == degeneracy_tuple(
                                               j - 1, face_star_tuple(q, i, t)))
                                  : (l0 == degeneracy_tuple(
                                               j, face_star0_tuple(i - 1, t)) &&
                                     l1 == degeneracy_tuple(
                                               j, face_star_tuple(q, i - 1, t)));
                        if (!ok) return {false, "(3) fails on " + q.name()};
                    }
                for (int i = 1; i <= n; ++i) {
                    ++checks;
                    if (face_star0_tuple(i, degeneracy_tuple(i, t)) !=
                            face_star0_tuple(i + 1, degeneracy_tuple(i, t)) ||
                        face_star_tuple(q, i, degeneracy_tuple(i, t)) !=
                            face_star_tuple(q, i + 1, degeneracy_tuple(i, t)))
                        return {false, "(4') fails on " + q.name()};
                }
            }
        }
    }
    return {true, std::to_string(checks) + " identity instances"};
}

// ------------------------------------------------------------------ 3
std::pair<bool, std::string> crit_splitting() {
    int audited = 0;
    for (const auto& q : catalog()) {
        struct Part {
            long long free_rank;
            std::vector<BigInt> torsion;
        };
        std::map<std::pair<int, int>, Part> h;  // (theory index, n)
        const Theory ths[3] = {Theory::R, Theory::D, Theory::Q};
        for (int ti = 0; ti < 3; ++ti) {
            ComplexSpec spec{&q, ths[ti], false, 0, std::nullopt};
            // SNFs of boundary matrices 1..4, each computed once
            std::vector<std::vector<BigInt>> diags(5);
            std::vector<int> dims(5, 0);
            for (int n = 1; n <= 4; ++n) {
                auto m = boundary_matrix(spec, n);
                dims[n] = m.cols;
                diags[n] = snf_diagonal(m);
            }
            for (int n = 1; n <= 3; ++n) {
                Part p;
                const long long rank_n = static_cast<long long>(diags[n].size());
                const long long rank_n1 = static_cast<long long>(diags[n + 1].size());
                p.free_rank = dims[n] - rank_n - rank_n1;
                for (const auto& d : diags[n + 1])
                    if (d > 1) p.torsion.push_back(d);
                std::sort(p.torsion.begin(), p.torsion.end());
                h[{ti, n}] = std::move(p);
            }
        }
        for (int n = 1; n <= 3; ++n) {
            const auto &r = h[{0, n}], &d = h[{1, n}], &qq = h[{2, n}];
            auto merged = d.torsion;
            merged.insert(merged.end(), qq.torsion.begin(), qq.torsion.end());
            std::sort(merged.begin(), merged.end());
            if (r.free_rank != d.free_rank + qq.free_rank || r.torsion != merged)
                return {false, q.name() + " degree " + std::to_string(n)};
            ++audited;
        }
    }
    return {true, std::to_string(audited) + " splittings"};
}

// ------------------------------------------------------------------ 4
std::pair<bool, std::string> crit_trivial_baselines() {
    auto t1 = make_trivial(1);
    ComplexSpec s1{&t1, Theory::R, false, 0, std::nullopt};
    for (int n = 1; n <= 5; ++n) {
        auto h = homology(s1, n);
        if (h.free_rank != 1 || !h.torsion.empty())
            return {false, "H_" + std::to_string(n) + "^R(trivial(1)) = " +
                               h.to_string()};
    }
    auto t2 = make_trivial(2);
    ComplexSpec s2{&t2, Theory::R, false, 0, std::nullopt};
    auto h1 = homology(s2, 1);
    if (h1.free_rank != 2 || !h1.torsion.empty())
        return {false, "H_1^R(trivial(2)) = " + h1.to_string()};
    return {true, "Z and Z^2 as expected"};
}

// ------------------------------------------------------------------ 5
std::pair<bool, std::string> crit_coloring_counts(const Corpus& c) {
    auto d3 = make_dihedral(3);
    auto d5 = make_dihedral(5);
    auto find = [&](const char* name) -> const OrientedDiagram& {
        for (const auto& [n, d] : c.diagrams)
            if (n == name) return d;
        throw format_error("corpus misses diagram");
    };
    if (enumerate_colorings(find("trefoil"), d3).size() != 9)
        return {false, "trefoil/dihedral(3)"};
    if (enumerate_colorings(find("fig8"), d3).size() != 3)
        return {false, "fig8/dihedral(3)"};
    if (enumerate_colorings(find("fig8"), d5).size() != 25)
        return {false, "fig8/dihedral(5)"};
    for (const auto& [name, d] : c.diagrams)
        for (int k = 1; k <= 4; ++k) {
            double want = 1;
            for (int i = 0; i < d.num_components(); ++i) want *= k;
            if (static_cast<double>(
                    enumerate_colorings(d, make_trivial(k)).size()) != want)
                return {false, name + "/trivial(" + std::to_string(k) + ")"};
        }
    return {true, "pinned counts and k^components law"};
}

// ------------------------------------------------------------------ 6
std::pair<bool, std::string> crit_shadow_law(const Corpus& c) {
    long long cases = 0;
    for (const auto& q : catalog())
        for (const auto& [name, d] : c.diagrams) {
            auto cols = enumerate_colorings(d, q);
            if (enumerate_shadow_colorings(d, q).size() != q.size() * cols.size())
                return {false, name + " x " + q.name()};
            ++cases;
        }
    return {true, std::to_string(cases) + " diagram/rack combinations"};
}

// ------------------------------------------------------------------ 7
std::pair<bool, std::string> crit_cycles(const Corpus& c) {
    long long checked = 0;
    for (const auto& q : catalog()) {
        ComplexSpec spec{&q, Theory::Q, false, 0, std::nullopt};
        for (const auto& [name, d] : c.diagrams)
            for (const auto& col : enumerate_colorings(d, q)) {
                auto z2 = colored_cycle(d, q, col);
                if (!boundary(spec, z2).is_zero())
                    return {false, "c2 not a cycle: " + name + " x " + q.name()};
                for (int base = 0; base < q.size(); ++base) {
                    auto z3 = shadow_cycle(d, q, extend_to_shadow(d, q, col, base));
                    if (!boundary(spec, z3).is_zero())
                        return {false, "c3 not a cycle: " + name + " x " + q.name()};
                    if (!(gamma_truncate(z3) == z2))
                        return {false, "gamma(c3) != c2: " + name + " x " + q.name()};
                    ++checked;
                }
            }
    }
    return {true, std::to_string(checked) + " shadow states"};
}

// ------------------------------------------------------------------ 8
std::pair<bool, std::string> crit_moves(const Corpus& c) {
    auto d3 = make_dihedral(3);
    ComplexSpec spec{&d3, Theory::Q, false, 0, std::nullopt};
    // a degree-2 cocycle mod 3 (necessarily a coboundary: H^2 = 0)
    auto cb = cocycle_basis(spec, 2, 3);
    Cocycle f2;
    f2.degree = 2;
    f2.modulus = 3;
    if (!cb.cocycles.empty())
        f2 = cocycle_from_vector(spec, 2, 3, cb.cocycles.front());
    for (const auto& [name, pair] : c.pairs) {
        for (const Cocycle* f : {&c.cocycle3, const_cast<const Cocycle*>(&f2)}) {
            auto rep = verify_move_invariance(pair, d3, f);
            if (!rep.ok()) return {false, name + ": " + rep.failures.front()};
        }
        // set-valued variant: supports of the histograms coincide
        StateSumOptions so;
        so.shadow = true;
        auto a = state_sum(pair.before, d3, c.cocycle3, so);
        auto b = state_sum(pair.after, d3, c.cocycle3, so);
        std::set<long long> sa, sb;
        for (const auto& [v, n] : a.histogram) sa.insert(v);
        for (const auto& [v, n] : b.histogram) sb.insert(v);
        if (sa != sb) return {false, name + ": value sets differ"};
    }
    return {true, std::to_string(c.pairs.size()) + " move pairs verified"};
}

// ------------------------------------------------------------------ 9
std::pair<bool, std::string> crit_twisted(const Corpus& c) {
    auto d3 = make_dihedral(3);
    LaurentRing ring(3, {1, 1, 1});
    ComplexSpec spec{&d3, Theory::Q, true, 0, ring};

    // (a) fundamental twisted chains are partial^T-cycles
    for (const auto& [name, d] : c.diagrams)
        for (const auto& col : enumerate_colorings(d, d3)) {
            auto data = extract_crossing_data(d, col);
            if (!boundary(spec, build_twisted_cycle(data, 1, 3, ring, false))
                     .is_zero())
                return {false, "twisted cycle fails on " + name};
        }

    // (b) solve for a twisted 2-cocycle over the ring and check state-sum
    // invariance across the pair corpus.  Ring-linearity of f turns
    // f . partial^T = 0 into a Z_3 system whose (i,j) block is the
    // multiplication matrix of the boundary coefficient — swap the block
    // indices of the companion expansion, keeping each block's orientation.
    auto basis2 = complex_basis(spec, 2);
    const int e = ring.deg();
    auto m3 = twisted_boundary_matrix_modp(spec, 3);
    SparseIntMat sys;
    sys.rows = m3.cols;
    sys.cols = m3.rows;
    sys.col.assign(sys.cols, {});
    for (int col = 0; col < m3.cols; ++col)
        for (const auto& [row, v] : m3.col[col])
            sys.col[e * (row / e) + col % e].push_back(
                {e * (col / e) + row % e, v});
    for (auto& cc : sys.col) std::sort(cc.begin(), cc.end());
    auto kernel = kernel_basis_mod(sys, 3);
    TwistedCocycle tf;
    tf.degree = 2;
    tf.ring = ring;
    bool nonzero = false;
    if (!kernel.empty()) {
        const auto& v = kernel.front();
        for (size_t j = 0; j < basis2.size(); ++j) {
            LaurentElement val{{v[e * j] % 3, v[e * j + 1] % 3}};
            if (!val.is_zero()) {
                tf.values[unpack_tuple(basis2[j], 2, 3)] = val;
                nonzero = true;
            }
        }
    }
    if (!nonzero) return {false, "no nonzero twisted 2-cocycle found"};
    for (const auto& [name, pair] : c.pairs) {
        for (bool reduced : {false, true}) {
            auto a = twisted_state_sum(pair.before, d3, tf, false, reduced);
            auto b = twisted_state_sum(pair.after, d3, tf, false, reduced);
            if (!(a == b))
                return {false, name + ": twisted state sums differ (reduced=" +
                                   std::to_string(reduced) + ")"};
        }
    }

    // (c) a weight that keeps degenerate tuples breaks R1 invariance
    TwistedCocycle bad;
    bad.degree = 2;
    bad.ring = ring;
    for (int a = 0; a < 3; ++a) bad.values[{a, a}] = ring.one();
    const MovePair* r1 = nullptr;
    for (const auto& [name, pair] : c.pairs)
        if (pair.move == "r1") r1 = &pair;
    auto sa = twisted_state_sum(r1->before, d3, bad, false);
    auto sb = twisted_state_sum(r1->after, d3, bad, false);
    if (!sa.rack_mode || sa == sb)
        return {false, "degenerate-supported weights unexpectedly invariant"};
    return {true, "cycles, invariance, and the rack-mode warning path"};
}

// ------------------------------------------------------------------ 10
std::pair<bool, std::string> crit_oracle(const Corpus& c) {
    auto d3 = make_dihedral(3);
    ComplexSpec spec{&d3, Theory::Q, false, 0, std::nullopt};
    auto h2 = homology(spec, 2);
    auto h3 = homology(spec, 3);
    auto want2 = c.oracle["H2_Q_dihedral3"], want3 = c.oracle["H3_Q_dihedral3"];
    auto tors = [](const HomologyGroup& h) {
        std::vector<long long> t;
        for (const auto& d : h.torsion) t.push_back(d.convert_to<long long>());
        return t;
    };
    if (h2.free_rank != want2["free_rank"].get<long long>() ||
        tors(h2) != want2["torsion"].get<std::vector<long long>>())
        return {false, "H_2^Q(dihedral(3)) = " + h2.to_string()};
    if (h3.free_rank != want3["free_rank"].get<long long>() ||
        tors(h3) != want3["torsion"].get<std::vector<long long>>())
        return {false, "H_3^Q(dihedral(3)) = " + h3.to_string()};
    auto cb2 = cocycle_basis(spec, 2, 3);
    auto cb3 = cocycle_basis(spec, 3, 3);
    const int dim2 = static_cast<int>(cb2.cocycles.size()) - cb2.coboundary_rank;
    const int dim3 = static_cast<int>(cb3.cocycles.size()) - cb3.coboundary_rank;
    if (dim2 != c.oracle["dim_H2_Q_dihedral3_mod3"].get<int>())
        return {false, "dim H^2 = " + std::to_string(dim2)};
    if (dim3 != c.oracle["dim_H3_Q_dihedral3_mod3"].get<int>())
        return {false, "dim H^3 = " + std::to_string(dim3)};

    auto hist = [&](const char* key) {
        std::map<long long, long long> h;
        for (const auto& [k, v] : c.oracle[key].items())
            h[std::stoll(k)] = v.get<long long>();
        return h;
    };
    StateSumOptions so;
    so.shadow = true;
    for (const auto& [name, d] : c.diagrams) {
        if (name == "trefoil" &&
            state_sum(d, d3, c.cocycle3, so).histogram !=
                hist("trefoil_shadow_statesum_pinned"))
            return {false, "trefoil state sum off the pinned value"};
        if (name == "unknot_0" &&
            state_sum(d, d3, c.cocycle3, so).histogram !=
                hist("unknot_shadow_statesum_pinned"))
            return {false, "unknot state sum off the pinned value"};
    }
    return {true, "homology, cohomology dims, and pinned state sums"};
}

} // namespace

std::vector<CriterionResult> run_acceptance(const std::string& oracle_path,
                                            const std::string& corpus_dir,
                                            std::uint64_t) {
    Corpus corpus = load(oracle_path, corpus_dir);
    struct Entry {
        const char* name;
        double budget;
        std::function<std::pair<bool, std::string>()> fn;
    };
    std::vector<Entry> entries{
        {"chain-complex axioms (dd = 0, all theories, twisted)", 60,
         [&] { return crit_boundary_squares(); }},
        {"weak-simplicial identities", 30,
         [&] { return crit_simplicial_identities(); }},
        {"rack = degenerate + quandle splitting", 120,
         [&] { return crit_splitting(); }},
        {"trivial-quandle baselines", 1, [&] { return crit_trivial_baselines(); }},
        {"coloring counts", 5, [&] { return crit_coloring_counts(corpus); }},
        {"shadow count law", 10, [&] { return crit_shadow_law(corpus); }},
        {"fundamental cycles and gamma", 10, [&] { return crit_cycles(corpus); }},
        {"move invariance suite", 60, [&] { return crit_moves(corpus); }},
        {"twisted suite", 30, [&] { return crit_twisted(corpus); }},
        {"oracle-pinned homology and state sums", 120,
         [&] { return crit_oracle(corpus); }},
    };
    std::vector<CriterionResult> out;
    for (size_t i = 0; i < entries.size(); ++i) {
        CriterionResult r;
        r.number = static_cast<int>(i) + 1;
        r.name = entries[i].name;
        r.budget = entries[i].budget;
        auto t0 = Clock::now();
        try {
            auto [ok, detail] = entries[i].fn();
            r.pass = ok;
            r.detail = detail;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (r.seconds > r.budget) {
            r.pass = false;
            r.detail += " [over budget]";
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_results(const std::vector<CriterionResult>& rs) {
    std::ostringstream out;
    for (const auto& r : rs) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.1fs of %.0fs", r.seconds, r.budget);
        out << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.number << ": "
            << r.name << " (" << buf << ") — " << r.detail << "\n";
    }
    return out.str();
}

bool all_pass(const std::vector<CriterionResult>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

} // namespace qdl
