// Regenerates the shipped diagram/move-pair corpus.  Run from anywhere:
//   corpus_gen <output-dir>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "quandle/invariants.hpp"

using namespace qdl;

static const char* kTrefoil = "X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)";
static const char* kFig8 = "X(4,2,5,1);X(8,6,1,5);X(6,3,7,4);X(2,7,3,8)";
static const char* kHopfPP = "X(1,3,2,4);X(4,2,3,1)";

static void write(const std::filesystem::path& dir, const std::string& name,
                  const std::string& text) {
    std::ofstream out(dir / name);
    out << nlohmann::json::parse(text).dump(1) << "\n";
    std::cout << "wrote " << name << "\n";
}

static MovePair make_pair(const OrientedDiagram& before,
                          const OrientedDiagram::MoveResult& m,
                          const std::string& move,
                          const std::vector<int>& site_edges = {}) {
    MovePair p;
    p.before = before;
    p.after = m.diagram;
    p.move = move;
    p.edge_map = m.edge_map;
    for (int e : site_edges) p.edge_map.erase(e);
    return p;
}

// both crossings negative, two components: the reverse-oriented Hopf link
static OrientedDiagram find_hopf_mm() {
    // try all ways of filling two crossings with edges 1..4 (each twice)
    std::vector<int> perm{1, 1, 2, 2, 3, 3, 4, 4};
    std::sort(perm.begin(), perm.end());
    do {
        std::vector<PdTuple> pd{{perm[0], perm[1], perm[2], perm[3]},
                                {perm[4], perm[5], perm[6], perm[7]}};
        try {
            auto d = OrientedDiagram::from_pd(pd);
            if (d.num_components() == 2 && d.signs() == std::vector<int>{-1, -1})
                return d;
        } catch (const error&) {
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    throw error("no negative Hopf diagram found");
}

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "corpus";
    std::filesystem::create_directories(dir);

    auto u0 = OrientedDiagram::unknot();
    auto u1 = u0.apply_r1(1, 1);
    auto u2 = u0.apply_r2(1, 1);
    write(dir, "unknot_0.json", u0.to_json());
    write(dir, "unknot_1.json", u1.diagram.to_json());
    write(dir, "unknot_2.json", u2.diagram.to_json());

    auto tre = OrientedDiagram::parse_pd(kTrefoil);
    write(dir, "trefoil.json", tre.to_json());
    auto tre_r2 = tre.apply_r2(2, 4);
    auto tre6 = tre_r2.diagram.apply_r1(1, -1);
    write(dir, "trefoil_6.json", tre6.diagram.to_json());

    write(dir, "fig8.json", OrientedDiagram::parse_pd(kFig8).to_json());
    auto hopf = OrientedDiagram::parse_pd(kHopfPP);
    write(dir, "hopf_pp.json", hopf.to_json());
    write(dir, "hopf_mm.json", find_hopf_mm().to_json());

    write(dir, "pair_r1_plus_trefoil.json",
          make_pair(tre, tre.apply_r1(3, 1), "r1").to_json());
    write(dir, "pair_r1_minus_trefoil.json",
          make_pair(tre, tre.apply_r1(3, -1), "r1").to_json());
    write(dir, "pair_r2_trefoil.json", make_pair(tre, tre_r2, "r2").to_json());
    write(dir, "pair_r2_unknot.json", make_pair(u0, u2, "r2").to_json());

    // R3 host: trefoil after an R2 poke; pick a bounded triangle so the
    // move stays inside a disk
    const auto& host = tre_r2.diagram;
    int site = -1;
    for (int s : host.r3_sites())
        if (s != host.unbounded_face()) site = s;
    if (site < 0) throw error("no bounded R3 site on the trefoil host");
    write(dir, "pair_r3_trefoil.json",
          make_pair(host, host.apply_r3(site), "r3", host.face_edges(site))
              .to_json());

    write(dir, "pair_r1_hopf.json",
          make_pair(hopf, hopf.apply_r1(1, 1), "r1").to_json());
    // R2 poke between the two Hopf components (first valid site)
    {
        bool done = false;
        for (int u : hopf.edges())
            for (int v : hopf.edges()) {
                if (done || hopf.component_of(u) == hopf.component_of(v)) continue;
                try {
                    auto m = hopf.apply_r2(u, v);
                    write(dir, "pair_r2_hopf.json",
                          make_pair(hopf, m, "r2").to_json());
                    done = true;
                } catch (const move_error&) {
                }
            }
        if (!done) throw error("no inter-component R2 site on the Hopf link");
    }

    // evaluation data for the CLI: a nonzero quandle 3-cocycle of R_3 mod 3
    // (values pinned by tests/data/oracle_values.json) and a twisted ring
    write(dir, "cocycle_d3_deg3.json",
          "{\"degree\":3,\"modulus\":3,\"values\":{"
          "\"0,1,2\":1,\"0,2,1\":1,\"1,0,1\":1,\"1,0,2\":1,"
          "\"2,0,1\":1,\"2,0,2\":1}}");
    write(dir, "ring_z3_t2t1.json", "{\"modulus\":3,\"poly\":[1,1,1]}");
    return 0;
}
