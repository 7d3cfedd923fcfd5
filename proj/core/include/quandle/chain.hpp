#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quandle/quandle.hpp"
#include "quandle/ring.hpp"

namespace qdl {

enum class Theory { R, D, Q };

Theory theory_from_string(const std::string& s);
std::string theory_name(Theory t);

// Tuples (x_1,...,x_n) pack as base-k integers with x_1 most significant,
// so numeric order of keys = lexicographic order of tuples.
std::uint64_t pack_tuple(const std::vector<int>& t, int k);
std::vector<int> unpack_tuple(std::uint64_t key, int n, int k);
bool tuple_degenerate(const std::vector<int>& t);  // some x_i == x_{i+1}

inline constexpr int kDegreeCap = 6;
inline constexpr std::uint64_t kDefaultMaxBasis = 10'000'000;
std::uint64_t max_basis_guard();  // QUANDLE_MAX_BASIS env override

struct ComplexSpec {
    const FiniteQuandle* q = nullptr;
    Theory theory = Theory::R;
    bool twisted = false;
    int modulus = 0;  // 0 = Z coefficients (untwisted chains)
    std::optional<LaurentRing> ring;  // required iff twisted
    void validate() const;
};

// Sparse formal integer combination of degree-n tuples over X.
class Chain {
public:
    Chain(int degree, int k) : degree_(degree), k_(k) {}
    int degree() const { return degree_; }
    int order() const { return k_; }
    const std::map<std::uint64_t, long long>& terms() const { return terms_; }

    void add_term(const std::vector<int>& t, long long c);
    void add_key(std::uint64_t key, long long c);
    long long coeff(const std::vector<int>& t) const;
    bool is_zero() const { return terms_.empty(); }
    Chain operator+(const Chain& o) const;
    Chain operator-(const Chain& o) const;
    Chain operator*(long long s) const;
    bool operator==(const Chain& o) const;

    // drop terms with a repeated adjacent entry (theory-Q reduction)
    Chain quandle_reduce() const;
    bool degenerate_only() const;  // support entirely on degenerate tuples

    std::string to_json() const;
    static Chain from_json(const std::string& text, int k);

private:
    int degree_;
    int k_;
    std::map<std::uint64_t, long long> terms_;
};

// The same over a Laurent ring.
class TwistedChain {
public:
    TwistedChain(int degree, int k, LaurentRing ring)
        : degree_(degree), k_(k), ring_(std::move(ring)) {}
    int degree() const { return degree_; }
    int order() const { return k_; }
    const LaurentRing& ring() const { return ring_; }
    const std::map<std::uint64_t, LaurentElement>& terms() const { return terms_; }

    void add_term(const std::vector<int>& t, const LaurentElement& c);
    void add_key(std::uint64_t key, const LaurentElement& c);
    bool is_zero() const { return terms_.empty(); }
    TwistedChain operator+(const TwistedChain& o) const;
    TwistedChain operator-(const TwistedChain& o) const;
    bool operator==(const TwistedChain& o) const;
    TwistedChain scale(const LaurentElement& s) const;
    TwistedChain quandle_reduce() const;

    std::string to_json() const;

private:
    int degree_;
    int k_;
    LaurentRing ring_;
    std::map<std::uint64_t, LaurentElement> terms_;
};

// Face maps, i = 1..n (Def 1.2 indexing; Def 1.7's 0-based identities are
// shifted by one in the tests).
//   d_i^{(*0)} deletes coordinate i;
//   d_i^{(*)}  maps (x_1,..,x_n) to (x_1*x_i,...,x_{i-1}*x_i,x_{i+1},..,x_n).
std::vector<int> face_star0_tuple(int i, const std::vector<int>& t);
std::vector<int> face_star_tuple(const FiniteQuandle& q, int i, const std::vector<int>& t);
Chain face_star0(int i, const Chain& c);
Chain face_star(const FiniteQuandle& q, int i, const Chain& c);

// s_i duplicates coordinate i
std::vector<int> degeneracy_tuple(int i, const std::vector<int>& t);
Chain degeneracy(int i, const Chain& c);

// Untwisted: sum_{i=2..n} (-1)^i (d_i^{(*0)} - d_i^{(*)});
// twisted:   sum_{i=1..n} (-1)^i (t d_i^{(*0)} - d_i^{(*)}).
// Theory Q reduces the result modulo degenerate tuples.
Chain boundary(const ComplexSpec& spec, const Chain& c);
TwistedChain boundary(const ComplexSpec& spec, const TwistedChain& c);

// x_1 (x) (x_2 - x_1) (x) ... (x) (x_n - x_{n-1}) expanded multilinearly:
// the splitting monomorphism C_n^Q -> C_n^R
Chain alpha_embed(const Chain& c);

// (x_1,...,x_n) -> (x_2,...,x_n); (-1)^n gamma is a chain map
Chain gamma_truncate(const Chain& c);
TwistedChain gamma_truncate(const TwistedChain& c);

// diagonal right action by x; a chain map inducing the identity on homology
Chain act_on_chain(const FiniteQuandle& q, const Chain& c, int x);
// the homotopy h_x appends x
Chain append_element(const Chain& c, int x);

// ordered basis of C_n for the theory (lex on tuples); guarded
std::vector<std::uint64_t> complex_basis(const ComplexSpec& spec, int n);

// columns of the boundary matrix from degree n to n-1 in the stated bases
struct SparseIntMat {
    int rows = 0;
    int cols = 0;
    // per column: sorted (row, coeff) entries
    std::vector<std::vector<std::pair<int, long long>>> col;
};
SparseIntMat boundary_matrix(const ComplexSpec& spec, int n);

// twisted boundary matrix expanded Z_p-linearly (each ring coefficient
// becomes a deg(f) x deg(f) block via the companion matrix); entries mod p
SparseIntMat twisted_boundary_matrix_modp(const ComplexSpec& spec, int n);

} // namespace qdl
