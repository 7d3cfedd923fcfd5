#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quandle/chain.hpp"
#include "quandle/coloring.hpp"
#include "quandle/homology.hpp"

namespace qdl {

// Colors read at the source region of one crossing, bottom to top.
struct CrossingDatum {
    int sign = 1;
    std::vector<int> colors;            // (q_1, ..., q_{n+1})
    std::optional<int> shadow;          // q_0
    std::optional<int> component;       // component of the bottom strand
    std::optional<int> alexander;       // k(R_0) of the source region

    std::string to_json() const;
    static CrossingDatum from_json_value(const std::string& text);
};

std::string crossing_data_to_json(const std::vector<CrossingDatum>& data);
std::vector<CrossingDatum> crossing_data_from_json(const std::string& text);

// n = 1 extraction from a colored diagram; the shadow overload also fills
// q_0, the Alexander index of the source corner, and the bottom component.
std::vector<CrossingDatum> extract_crossing_data(const OrientedDiagram& d,
                                                 const Coloring& col);
std::vector<CrossingDatum> extract_crossing_data(const OrientedDiagram& d,
                                                 const ShadowColoring& sh);

enum class CycleMode { plain, shadow, per_component };

// Signed sum of source-region tuples; shadow mode prepends q_0,
// per_component keeps only crossings whose bottom strand is in the
// given component.
Chain build_cycle(const std::vector<CrossingDatum>& data, int n, int qsize,
                  CycleMode mode, int component = -1);
TwistedChain build_twisted_cycle(const std::vector<CrossingDatum>& data, int n,
                                 int qsize, const LaurentRing& ring, bool shadow);

Chain colored_cycle(const OrientedDiagram& d, const FiniteQuandle& q,
                    const Coloring& col);
Chain shadow_cycle(const OrientedDiagram& d, const FiniteQuandle& q,
                   const ShadowColoring& sh);

// homology coordinates of the fundamental cycle; h must carry classifier
// data for degree 2 (plain) or 3 (shadow) in theory Q over q
std::vector<BigInt> cycle_class(const OrientedDiagram& d, const FiniteQuandle& q,
                                const Coloring& col, const HomologyGroup& h);
std::vector<BigInt> cycle_class(const OrientedDiagram& d, const FiniteQuandle& q,
                                const ShadowColoring& sh, const HomologyGroup& h);

// A cochain X^degree -> Z_modulus, sparse over tuples.
struct Cocycle {
    int degree = 2;
    long long modulus = 2;
    std::map<std::vector<int>, long long> values;

    long long eval(const std::vector<int>& tuple) const;
    bool vanishes_on_degenerate() const;
    std::string to_json() const;
    static Cocycle from_json(const std::string& text);
};

// wrap a cochain given as a vector over the theory basis of C_n
Cocycle cocycle_from_vector(const ComplexSpec& spec, int n, long long m,
                            const std::vector<int>& f);

struct StateSum {
    long long modulus = 0;
    std::map<long long, long long> histogram;  // value -> multiplicity
    bool rack_mode = false;  // evaluating function kept degenerate tuples
    std::string to_string() const;
    bool operator==(const StateSum& o) const {
        return modulus == o.modulus && histogram == o.histogram;
    }
};

struct StateSumOptions {
    bool shadow = false;
    bool reduced = false;
    int component = -1;
};

StateSum state_sum(const OrientedDiagram& d, const FiniteQuandle& q,
                   const Cocycle& f, const StateSumOptions& opt = {});

// Twisted Boltzmann weights: values and weights live in Z_m[t]/(f).
struct TwistedCocycle {
    int degree = 2;
    LaurentRing ring{2, {1, 1}};
    std::map<std::vector<int>, LaurentElement> values;

    LaurentElement eval(const std::vector<int>& tuple) const;
    bool vanishes_on_degenerate() const;
};

struct TwistedStateSum {
    std::map<std::string, long long> histogram;  // formatted ring value -> count
    bool rack_mode = false;
    bool operator==(const TwistedStateSum& o) const { return histogram == o.histogram; }
    std::string to_string() const;
};

// reduced twisted sums normalize each value over multiplication by t^j
TwistedStateSum twisted_state_sum(const OrientedDiagram& d, const FiniteQuandle& q,
                                  const TwistedCocycle& f, bool shadow,
                                  bool reduced = false);

// Generic abstract crossing data for n >= 1; no geometric validation, the
// report simply states whether the built chain is a quandle-theory cycle.
struct GenericChainReport {
    Chain chain{2, 1};
    Chain boundary{1, 1};
    bool is_cycle = false;
};
GenericChainReport build_generic_chain(int n, const FiniteQuandle& q,
                                       const std::vector<CrossingDatum>& data,
                                       bool shadow);

// -------------------------------------------------------------------------
// move invariance

struct MovePair {
    OrientedDiagram before, after;
    std::string move;                 // "r1" | "r2" | "r3"
    std::map<int, int> edge_map;      // surviving before-edge -> after-edge

    std::string to_json() const;
    static MovePair from_json(const std::string& text);
};

// matched coloring indices (before index, after index); throws unless the
// restriction map is a bijection
std::vector<std::pair<int, int>> match_colorings(const MovePair& pair,
                                                 const std::vector<Coloring>& before,
                                                 const std::vector<Coloring>& after);

// is the chain a boundary in C^Q_*(q)?
bool is_boundary_q(const FiniteQuandle& q, const Chain& z);

struct MoveReport {
    bool colorings_bijective = false;
    bool classes_agree = false;
    bool shadow_classes_agree = false;
    bool state_sums_agree = false;
    bool move_identity = false;        // r1 degenerate / r2 zero / r3 Fig 4.1
    bool per_component_boundary = false;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    std::string to_string() const;
};

MoveReport verify_move_invariance(const MovePair& pair, const FiniteQuandle& q,
                                  const Cocycle* f = nullptr);

} // namespace qdl
