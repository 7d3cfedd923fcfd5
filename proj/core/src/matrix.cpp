#include "quandle/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

namespace qdl {

namespace {

struct overflow_detected {};

inline long long chk_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_detected{};
    return r;
}
inline long long chk_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_detected{};
    return r;
}

template <typename I>
I abs_of(const I& v) {
    return v < 0 ? I(-v) : v;
}

// Diagonal-only Smith elimination.  Keeps the invariant that processed
// rows/columns are zero outside the diagonal, so clearing the pivot row
// by column operations only touches the pivot row itself.
template <typename I>
std::vector<I> snf_diag_impl(int rows, int cols, std::vector<std::vector<I>> m) {
    std::vector<I> diag;
    const int nmin = std::min(rows, cols);
    int r = 0;
    while (r < nmin) {
        // pivot: minimal absolute nonzero in the submatrix; early exit on 1
        int pi = -1, pj = -1;
        I best = 0;
        for (int i = r; i < rows && best != 1; ++i) {
            const auto& row = m[i];
            for (int j = r; j < cols; ++j) {
                if (row[j] == 0) continue;
                I a = abs_of(row[j]);
                if (pi < 0 || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                    if (best == 1) break;
                }
            }
        }
        if (pi < 0) break;
        std::swap(m[r], m[pi]);
        if (pj != r)
            for (int i = r; i < rows; ++i) std::swap(m[i][r], m[i][pj]);
        bool clean = true;
        // clear the pivot column by row operations
        for (int i = r + 1; i < rows; ++i) {
            if (m[i][r] == 0) continue;
            I q = m[i][r] / m[r][r];
            if (q != 0) {
                auto& dst = m[i];
                const auto& src = m[r];
                if constexpr (std::is_same_v<I, long long>) {
                    for (int j = r; j < cols; ++j)
                        if (src[j] != 0) dst[j] = chk_sub(dst[j], chk_mul(q, src[j]));
                } else {
                    for (int j = r; j < cols; ++j)
                        if (src[j] != 0) dst[j] -= q * src[j];
                }
            }
            if (m[i][r] != 0) clean = false;
        }
        if (!clean) continue;  // remainders left; re-pick pivot
        // clear the pivot row by column operations (pivot column is zero
        // away from row r, so only row r changes)
        for (int j = r + 1; j < cols; ++j) {
            if (m[r][j] == 0) continue;
            I q = m[r][j] / m[r][r];
            if constexpr (std::is_same_v<I, long long>) {
                m[r][j] = chk_sub(m[r][j], chk_mul(q, m[r][r]));
            } else {
                m[r][j] -= q * m[r][r];
            }
            if (m[r][j] != 0) clean = false;
        }
        if (!clean) continue;
        diag.push_back(abs_of(m[r][r]));
        ++r;
    }
    return diag;
}

// SNF of a diagonal matrix: repeated pairwise gcd/lcm normalization.
template <typename I>
void normalize_divisors(std::vector<I>& d) {
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = i + 1; j < d.size(); ++j) {
            if (d[j] % d[i] == 0) continue;
            I g = boost::multiprecision::gcd(BigInt(d[i]), BigInt(d[j])).template convert_to<I>();
            I l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
}

template <>
void normalize_divisors<long long>(std::vector<long long>& d) {
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = i + 1; j < d.size(); ++j) {
            if (d[j] % d[i] == 0) continue;
            long long g = std::gcd(d[i], d[j]);
            long long l = chk_mul(d[i] / g, d[j]);
            d[i] = g;
            d[j] = l;
        }
}

} // namespace

std::vector<BigInt> snf_diagonal(const SparseIntMat& m) {
    // orient so the row count is the smaller dimension
    const bool transpose = m.rows > m.cols;
    const int R = transpose ? m.cols : m.rows;
    const int C = transpose ? m.rows : m.cols;
    auto fill = [&](auto& dense) {
        for (int j = 0; j < m.cols; ++j)
            for (const auto& [i, v] : m.col[j]) {
                if (transpose) dense[j][i] = v;
                else dense[i][j] = v;
            }
    };
    try {
        std::vector<std::vector<long long>> dense(R, std::vector<long long>(C, 0));
        fill(dense);
        auto d = snf_diag_impl<long long>(R, C, std::move(dense));
        normalize_divisors(d);
        std::vector<BigInt> out(d.begin(), d.end());
        return out;
    } catch (const overflow_detected&) {
        std::vector<std::vector<BigInt>> dense(R, std::vector<BigInt>(C, 0));
        fill(dense);
        auto d = snf_diag_impl<BigInt>(R, C, std::move(dense));
        normalize_divisors(d);
        return d;
    }
}

DenseBig to_dense(const SparseIntMat& m) {
    DenseBig dense(m.rows, std::vector<BigInt>(m.cols, 0));
    for (int j = 0; j < m.cols; ++j)
        for (const auto& [i, v] : m.col[j]) dense[i][j] = v;
    return dense;
}

DenseBig mat_mul(const DenseBig& a, const DenseBig& b) {
    const int R = static_cast<int>(a.size());
    const int K = R ? static_cast<int>(a[0].size()) : 0;
    const int C = K && !b.empty() ? static_cast<int>(b[0].size()) : 0;
    DenseBig r(R, std::vector<BigInt>(C, 0));
    for (int i = 0; i < R; ++i)
        for (int k = 0; k < K; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < C; ++j)
                if (b[k][j] != 0) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

std::vector<BigInt> mat_vec(const DenseBig& a, const std::vector<BigInt>& v) {
    std::vector<BigInt> r(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j)
            if (a[i][j] != 0 && v[j] != 0) r[i] += a[i][j] * v[j];
    return r;
}

SnfFull snf_full(const DenseBig& input, int cols_hint) {
    SnfFull out;
    const int R = static_cast<int>(input.size());
    const int C = R ? static_cast<int>(input[0].size()) : cols_hint;
    DenseBig m = input;
    auto identity = [](int n) {
        DenseBig id(n, std::vector<BigInt>(n, 0));
        for (int i = 0; i < n; ++i) id[i][i] = 1;
        return id;
    };
    out.U = identity(R);
    out.V = identity(C);
    out.Vinv = identity(C);
    auto row_op = [&](int i, int j, const BigInt& f) {
        // R_i -= f R_j on m and U
        for (int c = 0; c < C; ++c) m[i][c] -= f * m[j][c];
        for (int c = 0; c < R; ++c) out.U[i][c] -= f * out.U[j][c];
    };
    auto col_op = [&](int j, int i, const BigInt& f) {
        // C_j -= f C_i on m and V; R_i += f R_j on Vinv
        for (int r = 0; r < R; ++r) m[r][j] -= f * m[r][i];
        for (int r = 0; r < C; ++r) out.V[r][j] -= f * out.V[r][i];
        for (int c = 0; c < C; ++c) out.Vinv[i][c] += f * out.Vinv[j][c];
    };
    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        std::swap(m[i], m[j]);
        std::swap(out.U[i], out.U[j]);
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < R; ++r) std::swap(m[r][i], m[r][j]);
        for (int r = 0; r < C; ++r) std::swap(out.V[r][i], out.V[r][j]);
        std::swap(out.Vinv[i], out.Vinv[j]);
    };
    auto negate_row = [&](int i) {
        for (int c = 0; c < C; ++c) m[i][c] = -m[i][c];
        for (int c = 0; c < R; ++c) out.U[i][c] = -out.U[i][c];
    };
    const int nmin = std::min(R, C);
    int r = 0;
    while (r < nmin) {
        int pi = -1, pj = -1;
        BigInt best = 0;
        for (int i = r; i < R; ++i)
            for (int j = r; j < C; ++j) {
                if (m[i][j] == 0) continue;
                BigInt a = abs(m[i][j]);
                if (pi < 0 || a < best) {
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        swap_rows(r, pi);
        swap_cols(r, pj);
        bool clean = true;
        for (int i = r + 1; i < R; ++i) {
            if (m[i][r] == 0) continue;
            BigInt q = m[i][r] / m[r][r];
            if (q != 0) row_op(i, r, q);
            if (m[i][r] != 0) clean = false;
        }
        for (int j = r + 1; j < C; ++j) {
            if (m[r][j] == 0) continue;
            BigInt q = m[r][j] / m[r][r];
            if (q != 0) col_op(j, r, q);
            if (m[r][j] != 0) clean = false;
        }
        if (!clean) continue;
        // enforce divisibility into the remaining block
        bool divides = true;
        for (int i = r + 1; i < R && divides; ++i)
            for (int j = r + 1; j < C; ++j)
                if (m[i][j] % m[r][r] != 0) {
                    // fold row i into row r and restart this step
                    row_op(r, i, BigInt(-1));
                    divides = false;
                    break;
                }
        if (!divides) continue;
        if (m[r][r] < 0) negate_row(r);
        ++r;
    }
    out.rank = r;
    out.diag.assign(nmin, 0);
    for (int i = 0; i < r; ++i) out.diag[i] = m[i][i];
    return out;
}

std::optional<std::vector<BigInt>> solve_integer(const SnfFull& snf,
                                                 const std::vector<BigInt>& v) {
    const int R = static_cast<int>(snf.U.size());
    const int C = static_cast<int>(snf.V.size());
    if (static_cast<int>(v.size()) != R)
        throw precondition_error("solve: dimension mismatch");
    auto y = mat_vec(snf.U, v);
    std::vector<BigInt> x(C, 0);
    for (int i = 0; i < R; ++i) {
        if (i < snf.rank) {
            if (y[i] % snf.diag[i] != 0) return std::nullopt;
            if (i < C) x[i] = y[i] / snf.diag[i];
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return mat_vec(snf.V, x);
}

bool solvable_mod(const SnfFull& snf, const std::vector<BigInt>& v, long long m) {
    const int R = static_cast<int>(snf.U.size());
    if (static_cast<int>(v.size()) != R)
        throw precondition_error("solve: dimension mismatch");
    auto y = mat_vec(snf.U, v);
    BigInt mm = m;
    for (int i = 0; i < R; ++i) {
        BigInt rhs = ((y[i] % mm) + mm) % mm;
        if (i < snf.rank) {
            BigInt g = boost::multiprecision::gcd(snf.diag[i] % mm, mm);
            if (g == 0) g = mm;
            if (rhs % g != 0) return false;
        } else if (rhs != 0) {
            return false;
        }
    }
    return true;
}

std::vector<int> rref_mod(std::vector<std::vector<int>>& rows, int p) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const int C = static_cast<int>(rows[0].size());
    const int R = static_cast<int>(rows.size());
    auto inv = [&](long long a) {
        long long r = 1, b = ((a % p) + p) % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    int r = 0;
    for (int c = 0; c < C && r < R; ++c) {
        int piv = -1;
        for (int i = r; i < R; ++i)
            if (rows[i][c] % p != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        long long f = inv(rows[r][c]);
        for (int j = c; j < C; ++j)
            rows[r][j] = static_cast<int>((rows[r][j] % p + p) * f % p);
        for (int i = 0; i < R; ++i) {
            if (i == r) continue;
            long long g = ((rows[i][c] % p) + p) % p;
            if (!g) continue;
            for (int j = c; j < C; ++j)
                rows[i][j] = static_cast<int>(((rows[i][j] - g * rows[r][j]) % p + p) % p);
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(pivots.size(), std::vector<int>(C, 0));
    return pivots;
}

static std::vector<std::vector<int>> sparse_to_mod_rows(const SparseIntMat& m, int p) {
    std::vector<std::vector<int>> rows(m.rows, std::vector<int>(m.cols, 0));
    for (int j = 0; j < m.cols; ++j)
        for (const auto& [i, v] : m.col[j])
            rows[i][j] = static_cast<int>(((v % p) + p) % p);
    return rows;
}

int rank_mod(const SparseIntMat& m, int p) {
    auto rows = sparse_to_mod_rows(m, p);
    return static_cast<int>(rref_mod(rows, p).size());
}

std::vector<std::vector<int>> kernel_basis_mod(const SparseIntMat& m, int p) {
    auto rows = sparse_to_mod_rows(m, p);
    auto pivots = rref_mod(rows, p);
    std::vector<char> is_pivot(m.cols, 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<std::vector<int>> basis;
    for (int fc = 0; fc < m.cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<int> v(m.cols, 0);
        v[fc] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = (p - rows[r][fc]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_row_span_mod(const std::vector<std::vector<int>>& basis,
                     const std::vector<int>& v, int p) {
    bool nonzero = false;
    for (int x : v)
        if (x % p != 0) { nonzero = true; break; }
    if (basis.empty()) return !nonzero;
    auto a = basis;
    auto pivots_a = rref_mod(a, p);
    auto b = basis;
    b.push_back(v);
    auto pivots_b = rref_mod(b, p);
    return pivots_a.size() == pivots_b.size();
}

bool is_prime(long long m) {
    if (m < 2) return false;
    for (long long i = 2; i * i <= m; ++i)
        if (m % i == 0) return false;
    return true;
}

} // namespace qdl
