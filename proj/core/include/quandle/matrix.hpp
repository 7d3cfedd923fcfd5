#pragma once
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "quandle/chain.hpp"

namespace qdl {

using BigInt = boost::multiprecision::cpp_int;
using DenseBig = std::vector<std::vector<BigInt>>;

// Diagonal of the Smith normal form (no transforms).  Fast int64 path
// with overflow detection; transparent arbitrary-precision fallback.
// Returns the nonzero diagonal entries d_1 | d_2 | ... (all positive).
std::vector<BigInt> snf_diagonal(const SparseIntMat& m);

inline int snf_rank(const SparseIntMat& m) {
    return static_cast<int>(snf_diagonal(m).size());
}

// Full SNF with unimodular transforms: U * M * V = S.
// Vinv is maintained alongside V (needed to express vectors in the new
// column coordinates).  diag holds min(rows,cols) entries, zeros included.
struct SnfFull {
    DenseBig U, V, Vinv;
    std::vector<BigInt> diag;
    int rank = 0;
};
// cols_hint disambiguates the width of a matrix with zero rows.
SnfFull snf_full(const DenseBig& m, int cols_hint = 0);

DenseBig to_dense(const SparseIntMat& m);
DenseBig mat_mul(const DenseBig& a, const DenseBig& b);
std::vector<BigInt> mat_vec(const DenseBig& a, const std::vector<BigInt>& v);

// Solve M x = v over Z.  Returns empty optional when unsolvable.
std::optional<std::vector<BigInt>> solve_integer(const SnfFull& snf,
                                                 const std::vector<BigInt>& v);
// Solve M x = v mod m (m >= 2) through the integer SNF.
bool solvable_mod(const SnfFull& snf, const std::vector<BigInt>& v, long long m);

// --- dense linear algebra mod a prime p ---------------------------------

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref_mod(std::vector<std::vector<int>>& rows, int p);
int rank_mod(const SparseIntMat& m, int p);
// canonical kernel basis (matrix acting on column vectors)
std::vector<std::vector<int>> kernel_basis_mod(const SparseIntMat& m, int p);
bool in_row_span_mod(const std::vector<std::vector<int>>& basis,
                     const std::vector<int>& v, int p);

bool is_prime(long long m);

} // namespace qdl
