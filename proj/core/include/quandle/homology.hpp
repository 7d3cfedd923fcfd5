#pragma once
#include <optional>
#include <string>
#include <vector>

#include "quandle/chain.hpp"
#include "quandle/matrix.hpp"

namespace qdl {

// H_n = ker d_n / im d_{n+1} over Z, described by free rank and the
// torsion divisor chain.  With a classifier attached, cycles can be
// mapped to explicit homology coordinates.
struct HomologyGroup {
    int degree = 0;
    long long free_rank = 0;
    std::vector<BigInt> torsion;  // entries >= 2, d_i | d_{i+1}

    struct Classifier {
        std::vector<std::uint64_t> basis_n;  // ordered basis of C_n
        SnfFull snf_n;                       // SNF of d_n
        int cycle_dim = 0;                   // dim ker d_n
        SnfFull snf_rel;  // SNF of the image of d_{n+1} in kernel coordinates
    };
    std::optional<Classifier> classifier;

    std::string to_string() const;  // e.g. "Z^2 + Z_3"
};

HomologyGroup homology(const ComplexSpec& spec, int n, bool with_classifier = false);

// Coordinates of [z]: one entry per torsion divisor (reduced mod d_i),
// then free_rank integer entries.  Requires a classifier and d(z) = 0.
std::vector<BigInt> classify_cycle(const ComplexSpec& spec, const HomologyGroup& h,
                                   const Chain& z);

// Twisted homology over a field quotient Z_p[t]/(f): free_rank is the
// dimension over that field, torsion empty.
HomologyGroup twisted_homology(const ComplexSpec& spec, int n);

// Basis of ker(delta^n) over Z_m (m prime) together with the rank of
// im(delta^{n-1}); vectors are indexed by the theory basis of C_n.
struct CocycleBasis {
    int degree = 0;
    int modulus = 0;
    std::vector<std::uint64_t> basis;  // domain tuples (theory basis of C_n)
    std::vector<std::vector<int>> cocycles;
    int coboundary_rank = 0;
};

CocycleBasis cocycle_basis(const ComplexSpec& spec, int n, int m);
// f . d_{n+1} = 0 mod m (any m >= 2)
bool is_cocycle(const ComplexSpec& spec, int n, int m, const std::vector<int>& f);
// f = g . d_n for some (n-1)-cochain g mod m (prime m: span test;
// otherwise an integer-SNF congruence solve)
bool is_coboundary(const ComplexSpec& spec, int n, int m, const std::vector<int>& f);

} // namespace qdl
