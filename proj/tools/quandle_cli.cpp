// quandle: command-line surface over libquandle_core.
// Exit codes: 0 success, 1 domain error, 2 usage error.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "quandle/homology.hpp"
#include "quandle/invariants.hpp"
#include "quandle/selftest.hpp"

using namespace qdl;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw format_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// "dihedral:3", "file:q.json", or a bare path to a JSON table
FiniteQuandle load_quandle(const std::string& spec) {
    if (std::filesystem::exists(spec)) return FiniteQuandle::from_json(slurp(spec));
    return parse_quandle_spec(spec);
}

Theory theory_flag(const std::string& s) { return theory_from_string(s); }

json homology_json(const HomologyGroup& h) {
    json torsion = json::array();
    for (const auto& d : h.torsion) torsion.push_back(d.convert_to<long long>());
    return {{"free_rank", h.free_rank}, {"torsion", torsion}};
}

json statesum_json(const StateSum& s) {
    json hist = json::object();
    for (const auto& [v, c] : s.histogram) hist[std::to_string(v)] = c;
    return {{"modulus", s.modulus}, {"histogram", hist}, {"rack_mode", s.rack_mode}};
}

TwistedCocycle load_twisted_cocycle(const std::string& path, const LaurentRing& ring) {
    json j = json::parse(slurp(path));
    TwistedCocycle f;
    f.degree = j.value("degree", 2);
    f.ring = ring;
    for (const auto& [key, val] : j.at("values").items()) {
        std::vector<int> tuple;
        std::istringstream in(key);
        std::string part;
        while (std::getline(in, part, ',')) tuple.push_back(std::stoi(part));
        if (static_cast<int>(tuple.size()) != f.degree)
            throw format_error("cocycle key arity does not match degree: " + key);
        f.values[tuple] = val.is_string() ? ring.parse(val.get<std::string>())
                                          : ring.from_int(val.get<long long>());
    }
    return f;
}

LaurentRing load_ring(const std::string& path) {
    json j = json::parse(slurp(path));
    return LaurentRing(j.at("modulus").get<int>(),
                       j.at("poly").get<std::vector<int>>());
}

// ------------------------------------------------------------------ validate
int cmd_validate(const std::string& spec, bool as_json) {
    auto q = load_quandle(spec);
    const auto& c = q.cls();
    if (as_json) {
        std::cout << json{{"name", q.name()},
                          {"order", q.size()},
                          {"shelf", c.shelf},
                          {"spindle", c.spindle},
                          {"rack", c.rack},
                          {"quandle", c.quandle},
                          {"kei", c.kei}}
                         .dump()
                  << "\n";
    } else {
        std::cout << (q.name().empty() ? std::string("(unnamed)") : q.name())
                  << ": order " << q.size() << ", shelf=" << c.shelf
                  << " spindle=" << c.spindle << " rack=" << c.rack
                  << " quandle=" << c.quandle << " kei=" << c.kei << "\n";
    }
    if (!c.quandle) {
        std::cerr << "not a quandle\n";
        return 1;
    }
    return 0;
}

// ------------------------------------------------------------------ homology
int cmd_homology(const std::string& spec, const std::string& theory, int degree,
                 const std::string& ring_path, bool as_json) {
    auto q = load_quandle(spec);
    Theory th = theory_flag(theory);
    ComplexSpec cs{&q, th, false, 0, std::nullopt};
    if (!ring_path.empty()) {
        cs.twisted = true;
        cs.ring = load_ring(ring_path);
    }
    auto h = cs.twisted ? twisted_homology(cs, degree) : homology(cs, degree);
    if (as_json)
        std::cout << homology_json(h).dump() << "\n";
    else
        std::cout << "H_" << degree << "^" << theory_name(th)
                  << (cs.twisted ? "T" : "") << " = " << h.to_string() << "\n";
    return 0;
}

// ------------------------------------------------------------------ diagram
int cmd_diagram_info(const std::string& path, bool as_json) {
    auto d = OrientedDiagram::from_json(slurp(path));
    if (as_json) {
        std::cout << json{{"crossings", d.crossings()},
                          {"arcs", d.arcs().size()},
                          {"edges", d.edges().size()},
                          {"faces", d.num_faces()},
                          {"components", d.num_components()},
                          {"signs", d.signs()},
                          {"writhe", d.writhe()},
                          {"unbounded_face", d.unbounded_face()}}
                         .dump()
                  << "\n";
        return 0;
    }
    std::cout << "crossings: " << d.crossings() << "\narcs: " << d.arcs().size()
              << "\nfaces: " << d.num_faces()
              << "\ncomponents: " << d.num_components() << "\nsigns:";
    for (int s : d.signs()) std::cout << " " << (s > 0 ? "+" : "-");
    std::cout << "\nwrithe: " << d.writhe() << "\npd: " << d.to_pd_string() << "\n";
    return 0;
}

// ------------------------------------------------------------------ color
int cmd_color(const std::string& diagram, const std::string& spec, bool shadow,
              bool orbits, bool list, bool as_json) {
    auto d = OrientedDiagram::from_json(slurp(diagram));
    auto q = load_quandle(spec);
    auto cols = enumerate_colorings(d, q);
    json out{{"colorings", cols.size()}};
    std::ostringstream text;
    text << "colorings: " << cols.size();
    if (orbits) {
        auto ob = coloring_orbits(cols, q);
        text << ", orbits: " << ob.size();
        out["orbits"] = ob.size();
    }
    if (shadow) {
        auto sh = enumerate_shadow_colorings(d, q);
        text << ", shadow colorings: " << sh.size();
        out["shadow_colorings"] = sh.size();
    }
    if (list) {
        json jl = json::array();
        for (const auto& c : cols) {
            json jc = json::object();
            for (const auto& [arc, x] : c.arc) jc[std::to_string(arc)] = x;
            jl.push_back(jc);
            text << "\n ";
            for (const auto& [arc, x] : c.arc) text << " " << arc << "->" << x;
        }
        out["list"] = jl;
    }
    std::cout << (as_json ? out.dump() : text.str()) << "\n";
    return 0;
}

// ------------------------------------------------------------------ invariant
int cmd_invariant(const std::string& diagram, const std::string& spec,
                  const std::string& cocycle, const std::string& crossing_data,
                  int degree, bool shadow, bool reduced,
                  const std::string& ring_path, int component, bool set_valued,
                  bool as_json) {
    auto q = load_quandle(spec);

    if (!crossing_data.empty()) {
        // generic abstract data: report the chain and its cycle status
        auto data = crossing_data_from_json(slurp(crossing_data));
        auto rep = build_generic_chain(degree, q, data, shadow);
        if (as_json)
            std::cout << json{{"degree", rep.chain.degree()},
                              {"is_cycle", rep.is_cycle},
                              {"chain", json::parse(rep.chain.to_json())},
                              {"boundary", json::parse(rep.boundary.to_json())}}
                             .dump()
                      << "\n";
        else
            std::cout << "chain degree " << rep.chain.degree() << ", "
                      << (rep.is_cycle ? "a cycle" : "NOT a cycle (boundary " +
                                                         rep.boundary.to_json() + ")")
                      << "\n";
        return 0;
    }

    auto d = OrientedDiagram::from_json(slurp(diagram));
    if (!ring_path.empty()) {
        auto ring = load_ring(ring_path);
        auto f = load_twisted_cocycle(cocycle, ring);
        auto s = twisted_state_sum(d, q, f, shadow, reduced);
        if (as_json) {
            json hist = json::object();
            for (const auto& [v, c] : s.histogram) hist[v] = c;
            std::cout << json{{"ring", ring.to_string()},
                              {"histogram", hist},
                              {"rack_mode", s.rack_mode}}
                             .dump()
                      << "\n";
        } else {
            std::cout << ring.to_string() << ": " << s.to_string() << "\n";
        }
        return 0;
    }

    auto f = Cocycle::from_json(slurp(cocycle));
    StateSumOptions opt;
    opt.shadow = shadow;
    opt.reduced = reduced;
    opt.component = component;
    auto s = state_sum(d, q, f, opt);
    if (set_valued) {
        std::set<long long> vals;
        for (const auto& [v, c] : s.histogram) vals.insert(v);
        if (as_json)
            std::cout << json{{"modulus", s.modulus}, {"values", vals}}.dump() << "\n";
        else {
            std::cout << "values mod " << s.modulus << ":";
            for (long long v : vals) std::cout << " " << v;
            std::cout << "\n";
        }
        return 0;
    }
    std::cout << (as_json ? statesum_json(s).dump() : s.to_string()) << "\n";
    return 0;
}

// ------------------------------------------------------------------ verify
int cmd_verify_moves(const std::string& pair_path, const std::string& spec,
                     const std::string& cocycle, bool as_json) {
    auto pair = MovePair::from_json(slurp(pair_path));
    auto q = load_quandle(spec);
    std::optional<Cocycle> f;
    if (!cocycle.empty()) f = Cocycle::from_json(slurp(cocycle));
    auto rep = verify_move_invariance(pair, q, f ? &*f : nullptr);
    if (as_json) {
        std::cout << json{{"move", pair.move},
                          {"ok", rep.ok()},
                          {"colorings_bijective", rep.colorings_bijective},
                          {"classes_agree", rep.classes_agree},
                          {"shadow_classes_agree", rep.shadow_classes_agree},
                          {"state_sums_agree", rep.state_sums_agree},
                          {"move_identity", rep.move_identity},
                          {"per_component_boundary", rep.per_component_boundary},
                          {"failures", rep.failures}}
                         .dump()
                  << "\n";
    } else {
        std::cout << pair.move << ": " << rep.to_string() << "\n";
    }
    return rep.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite rack/quandle homology and cocycle knot invariants"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    std::uint64_t seed = 1;
    app.add_flag("--json", as_json, "JSON output");
    app.add_option("--seed", seed, "seed for randomized checks (default 1)");

    std::string v_spec;
    auto* sc_validate = app.add_subcommand(
        "validate", "classify a quandle table (file path or spec)");
    sc_validate->add_option("quandle", v_spec,
                            "table file or spec like dihedral:3")->required();

    std::string h_spec, h_theory = "Q", h_ring;
    int h_degree = 2;
    auto* sc_hom = app.add_subcommand("homology", "rack/quandle homology groups");
    sc_hom->add_option("--quandle", h_spec, "quandle spec (name[:param]* or file:path)")
        ->required();
    sc_hom->add_option("--theory", h_theory, "R, D or Q (default Q)");
    sc_hom->add_option("--degree", h_degree, "homological degree")->required();
    sc_hom->add_option("--twisted", h_ring, "ring file for twisted homology");

    std::string d_path;
    auto* sc_diagram = app.add_subcommand("diagram", "diagram utilities");
    auto* sc_info = sc_diagram->add_subcommand("info", "print diagram statistics");
    sc_info->add_option("file", d_path, "diagram JSON file")->required();
    sc_diagram->require_subcommand(1);

    std::string c_diagram, c_spec;
    bool c_shadow = false, c_orbits = false, c_list = false;
    auto* sc_color = app.add_subcommand("color", "count/list quandle colorings");
    sc_color->add_option("--diagram", c_diagram, "diagram JSON file")->required();
    sc_color->add_option("--quandle", c_spec, "quandle spec")->required();
    sc_color->add_flag("--shadow", c_shadow, "also count shadow colorings");
    sc_color->add_flag("--orbits", c_orbits, "also count coloring orbits");
    sc_color->add_flag("--list", c_list, "list all colorings");

    std::string i_diagram, i_spec, i_cocycle, i_data, i_ring;
    int i_degree = 2, i_component = -1;
    bool i_shadow = false, i_reduced = false, i_set = false;
    auto* sc_inv = app.add_subcommand("invariant", "cocycle state-sum invariants");
    sc_inv->add_option("--diagram", i_diagram, "diagram JSON file");
    sc_inv->add_option("--quandle", i_spec, "quandle spec")->required();
    sc_inv->add_option("--cocycle", i_cocycle, "cocycle JSON file");
    sc_inv->add_option("--crossing-data", i_data,
                       "generic crossing-data JSON (reports the chain instead)");
    sc_inv->add_option("--degree", i_degree, "chain degree for --crossing-data");
    sc_inv->add_flag("--shadow", i_shadow, "shadow (degree-3) state sum");
    sc_inv->add_flag("--reduced", i_reduced, "sum over orbit representatives");
    sc_inv->add_option("--twisted", i_ring, "ring file; cocycle values in the ring");
    sc_inv->add_option("--component", i_component, "restrict to one link component");
    sc_inv->add_flag("--set", i_set, "set-valued invariant (distinct values only)");

    std::string m_pair, m_spec, m_cocycle;
    auto* sc_moves = app.add_subcommand("verify-moves",
                                        "check invariance across a move pair");
    sc_moves->add_option("--pair", m_pair, "move-pair JSON file")->required();
    sc_moves->add_option("--quandle", m_spec, "quandle spec")->required();
    sc_moves->add_option("--cocycle", m_cocycle, "optional cocycle for state sums");

    std::string s_corpus = "corpus",
                s_oracle = "tests/data/oracle_values.json";
    auto* sc_self = app.add_subcommand("selftest", "run the full acceptance suite");
    sc_self->add_option("--corpus", s_corpus, "corpus directory");
    sc_self->add_option("--oracle", s_oracle, "oracle values file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*sc_validate) return cmd_validate(v_spec, as_json);
        if (*sc_hom)
            return cmd_homology(h_spec, h_theory, h_degree, h_ring, as_json);
        if (*sc_info) return cmd_diagram_info(d_path, as_json);
        if (*sc_color)
            return cmd_color(c_diagram, c_spec, c_shadow, c_orbits, c_list, as_json);
        if (*sc_inv) {
            if (i_data.empty() && (i_diagram.empty() || i_cocycle.empty())) {
                std::cerr << "invariant needs --diagram and --cocycle "
                             "(or --crossing-data)\n";
                return 2;
            }
            return cmd_invariant(i_diagram, i_spec, i_cocycle, i_data, i_degree,
                                 i_shadow, i_reduced, i_ring, i_component, i_set,
                                 as_json);
        }
        if (*sc_moves) return cmd_verify_moves(m_pair, m_spec, m_cocycle, as_json);
        if (*sc_self) {
            auto results = run_acceptance(s_oracle, s_corpus, seed);
            std::cout << format_results(results);
            return all_pass(results) ? 0 : 1;
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
