#include "quandle/homology.hpp"

#include <algorithm>
#include <sstream>

namespace qdl {

static SparseIntMat transpose(const SparseIntMat& m) {
    SparseIntMat t;
    t.rows = m.cols;
    t.cols = m.rows;
    t.col.resize(t.cols);
    for (int j = 0; j < m.cols; ++j)
        for (const auto& [i, v] : m.col[j]) t.col[i].emplace_back(j, v);
    for (auto& c : t.col) std::sort(c.begin(), c.end());
    return t;
}

std::string HomologyGroup::to_string() const {
    std::ostringstream os;
    bool any = false;
    if (free_rank > 0) {
        os << "Z";
        if (free_rank > 1) os << "^" << free_rank;
        any = true;
    }
    for (const auto& d : torsion) {
        if (any) os << " + ";
        os << "Z_" << d;
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

HomologyGroup homology(const ComplexSpec& spec, int n, bool with_classifier) {
    spec.validate();
    if (spec.twisted) return twisted_homology(spec, n);
    if (n < 1) throw precondition_error("homology needs degree >= 1");
    HomologyGroup h;
    h.degree = n;
    auto mn = boundary_matrix(spec, n);
    auto mn1 = boundary_matrix(spec, n + 1);
    if (!with_classifier) {
        const int rank_n = snf_rank(mn);
        auto divs = snf_diagonal(mn1);
        h.free_rank = mn.cols - rank_n - static_cast<long long>(divs.size());
        for (const auto& d : divs)
            if (d > 1) h.torsion.push_back(d);
        return h;
    }
    HomologyGroup::Classifier cls;
    cls.basis_n = complex_basis(spec, n);
    cls.snf_n = snf_full(to_dense(mn), mn.cols);
    cls.cycle_dim = mn.cols - cls.snf_n.rank;
    // image of d_{n+1} expressed in kernel coordinates: rows rank_n.. of
    // Vinv * M_{n+1}
    auto img = mat_mul(cls.snf_n.Vinv, to_dense(mn1));
    DenseBig rel(cls.cycle_dim, std::vector<BigInt>(mn1.cols, 0));
    for (int i = 0; i < cls.cycle_dim; ++i) rel[i] = img[cls.snf_n.rank + i];
    cls.snf_rel = snf_full(rel, mn1.cols);
    h.free_rank = cls.cycle_dim - cls.snf_rel.rank;
    for (int i = 0; i < cls.snf_rel.rank; ++i)
        if (cls.snf_rel.diag[i] > 1) h.torsion.push_back(cls.snf_rel.diag[i]);
    h.classifier = std::move(cls);
    return h;
}

std::vector<BigInt> classify_cycle(const ComplexSpec& spec, const HomologyGroup& h,
                                   const Chain& z) {
    if (!h.classifier)
        throw precondition_error("homology group carries no classifier data");
    if (z.degree() != h.degree)
        throw precondition_error("chain degree does not match homology degree");
    auto dz = boundary(spec, z);
    if (!dz.is_zero())
        throw precondition_error("not a cycle; boundary = " + dz.to_json());
    const auto& cls = *h.classifier;
    std::vector<BigInt> zvec(cls.basis_n.size(), 0);
    for (const auto& [key, c] : z.terms()) {
        auto it = std::lower_bound(cls.basis_n.begin(), cls.basis_n.end(), key);
        if (it == cls.basis_n.end() || *it != key)
            throw precondition_error("chain has support outside the theory basis");
        zvec[it - cls.basis_n.begin()] = c;
    }
    auto y = mat_vec(cls.snf_n.Vinv, zvec);
    std::vector<BigInt> yk(cls.cycle_dim);
    for (int i = 0; i < cls.cycle_dim; ++i) yk[i] = y[cls.snf_n.rank + i];
    auto w = mat_vec(cls.snf_rel.U, yk);
    std::vector<BigInt> coords;
    for (int i = 0; i < cls.snf_rel.rank; ++i) {
        const BigInt& d = cls.snf_rel.diag[i];
        if (d > 1) coords.push_back(((w[i] % d) + d) % d);
    }
    for (size_t i = cls.snf_rel.rank; i < w.size(); ++i) coords.push_back(w[i]);
    return coords;
}

HomologyGroup twisted_homology(const ComplexSpec& spec, int n) {
    spec.validate();
    if (!spec.twisted) throw precondition_error("spec is not twisted");
    const LaurentRing& ring = *spec.ring;
    if (!ring.is_field())
        throw parameter_error("twisted homology needs a field quotient; " +
                              ring.to_string() + " is not a field");
    const int p = ring.modulus();
    const int e = ring.deg();
    auto mn = twisted_boundary_matrix_modp(spec, n);
    auto mn1 = twisted_boundary_matrix_modp(spec, n + 1);
    HomologyGroup h;
    h.degree = n;
    long long nullity_p = mn.cols - rank_mod(mn, p);
    h.free_rank = (nullity_p - rank_mod(mn1, p)) / e;
    return h;
}

CocycleBasis cocycle_basis(const ComplexSpec& spec, int n, int m) {
    spec.validate();
    if (!is_prime(m))
        throw parameter_error("cocycle basis needs a prime modulus, got " +
                              std::to_string(m));
    CocycleBasis cb;
    cb.degree = n;
    cb.modulus = m;
    cb.basis = complex_basis(spec, n);
    auto delta_n = transpose(boundary_matrix(spec, n + 1));
    cb.cocycles = kernel_basis_mod(delta_n, m);
    auto delta_prev = transpose(boundary_matrix(spec, n));
    cb.coboundary_rank = rank_mod(delta_prev, m);
    return cb;
}

bool is_cocycle(const ComplexSpec& spec, int n, int m, const std::vector<int>& f) {
    spec.validate();
    if (m < 2) throw parameter_error("modulus must be >= 2");
    auto mn1 = boundary_matrix(spec, n + 1);
    if (static_cast<int>(f.size()) != mn1.rows)
        throw precondition_error("cochain vector has wrong length");
    for (int j = 0; j < mn1.cols; ++j) {
        long long acc = 0;
        for (const auto& [i, v] : mn1.col[j]) acc += v * f[i];
        if (((acc % m) + m) % m != 0) return false;
    }
    return true;
}

bool is_coboundary(const ComplexSpec& spec, int n, int m, const std::vector<int>& f) {
    spec.validate();
    if (m < 2) throw parameter_error("modulus must be >= 2");
    auto mn = boundary_matrix(spec, n);
    if (static_cast<int>(f.size()) != mn.cols)
        throw precondition_error("cochain vector has wrong length");
    if (is_prime(m)) {
        // the coboundary of the (n-1)-basis cochain e_i is row i of d_n
        std::vector<std::vector<int>> gens(mn.rows, std::vector<int>(mn.cols, 0));
        for (int j = 0; j < mn.cols; ++j)
            for (const auto& [i, v] : mn.col[j])
                gens[i][j] = static_cast<int>(((v % m) + m) % m);
        return in_row_span_mod(gens, f, m);
    }
    // non-prime: solve g . d_n = f, i.e. (d_n)^T g = f, mod m via integer SNF
    auto snf = snf_full(to_dense(transpose(mn)), mn.rows);
    std::vector<BigInt> v(f.begin(), f.end());
    return solvable_mod(snf, v, m);
}

} // namespace qdl
