#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include "quandle/homology.hpp"

using namespace qdl;

static nlohmann::json oracle() {
    static nlohmann::json j = [] {
        std::ifstream in(TESTS_DATA_DIR "/oracle_values.json");
        REQUIRE(in.good());
        nlohmann::json data;
        in >> data;
        return data;
    }();
    return j;
}

TEST_CASE("smith normal form: small examples") {
    SparseIntMat m;
    m.rows = 2;
    m.cols = 2;
    m.col = {{{0, 2}}, {{1, 3}}};
    auto d = snf_diagonal(m);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == 1);
    CHECK(d[1] == 6);

    SparseIntMat z;
    z.rows = 3;
    z.cols = 4;
    z.col.resize(4);
    CHECK(snf_diagonal(z).empty());
    auto full = snf_full(to_dense(z));
    CHECK(full.rank == 0);
}

TEST_CASE("smith normal form with transforms: U M V = S, transforms unimodular") {
    std::uint64_t s = 99;
    auto rnd = [&] {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long long>((s >> 33) % 19) - 9;
    };
    auto det = [](DenseBig a) {  // Bareiss fraction-free determinant
        const int n = static_cast<int>(a.size());
        BigInt prev = 1;
        int sign = 1;
        for (int k = 0; k < n - 1; ++k) {
            if (a[k][k] == 0) {
                int sw = -1;
                for (int i = k + 1; i < n; ++i)
                    if (a[i][k] != 0) { sw = i; break; }
                if (sw < 0) return BigInt(0);
                std::swap(a[k], a[sw]);
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j)
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            prev = a[k][k];
        }
        return BigInt(sign) * a[n - 1][n - 1];
    };
    for (int trial = 0; trial < 5; ++trial) {
        DenseBig m(8, std::vector<BigInt>(8));
        for (auto& row : m)
            for (auto& v : row) v = rnd();
        auto snf = snf_full(m);
        auto prod = mat_mul(mat_mul(snf.U, m), snf.V);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                CHECK(prod[i][j] == (i == j && i < snf.rank ? snf.diag[i] : BigInt(0)));
        CHECK(abs(det(snf.U)) == 1);
        CHECK(abs(det(snf.V)) == 1);
        // divisibility chain
        for (int i = 0; i + 1 < snf.rank; ++i)
            CHECK(snf.diag[i + 1] % snf.diag[i] == 0);
        // Vinv really inverts V
        auto vv = mat_mul(snf.Vinv, snf.V);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) CHECK(vv[i][j] == (i == j ? 1 : 0));
    }
}

TEST_CASE("trivial-quandle baselines") {
    auto t1 = make_trivial(1);
    ComplexSpec s1{&t1, Theory::R, false, 0, std::nullopt};
    for (int n = 1; n <= 5; ++n) {
        auto h = homology(s1, n);
        CHECK(h.free_rank == 1);
        CHECK(h.torsion.empty());
    }
    auto t2 = make_trivial(2);
    ComplexSpec s2{&t2, Theory::R, false, 0, std::nullopt};
    auto h1 = homology(s2, 1);
    CHECK(h1.free_rank == 2);
    CHECK(h1.torsion.empty());
}

TEST_CASE("oracle-pinned homology of dihedral(3)") {
    auto d3 = make_dihedral(3);
    ComplexSpec spec{&d3, Theory::Q, false, 0, std::nullopt};
    auto j = oracle();
    for (int n : {2, 3}) {
        auto h = homology(spec, n);
        auto expect = j["H" + std::to_string(n) + "_Q_dihedral3"];
        CHECK(h.free_rank == expect["free_rank"].get<long long>());
        REQUIRE(h.torsion.size() == expect["torsion"].size());
        for (size_t i = 0; i < h.torsion.size(); ++i)
            CHECK(h.torsion[i] == BigInt(expect["torsion"][i].get<long long>()));
    }
    CHECK(homology(spec, 3).to_string() == "Z_3");
}

TEST_CASE("classifier: boundaries are trivial, classes well defined") {
    auto d3 = make_dihedral(3);
    ComplexSpec spec{&d3, Theory::Q, false, 0, std::nullopt};
    auto h = homology(spec, 3, true);
    REQUIRE(h.classifier.has_value());
    CHECK(h.free_rank == 0);
    REQUIRE(h.torsion.size() == 1);

    std::uint64_t s = 5;
    auto rnd = [&](int n) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<int>((s >> 33) % n);
    };
    for (int it = 0; it < 10; ++it) {
        Chain w(4, 3);
        for (int t = 0; t < 4; ++t) {
            std::vector<int> tup{rnd(3), rnd(3), rnd(3), rnd(3)};
            if (tuple_degenerate(tup)) continue;
            w.add_term(tup, rnd(7) - 3);
        }
        auto z = boundary(spec, w);
        auto coords = classify_cycle(spec, h, z);
        for (const auto& c : coords) CHECK(c == 0);
    }
    // z and z + dw get equal coordinates; some kernel generator is nontrivial
    const auto& cls = *h.classifier;
    bool found_nonzero = false;
    for (size_t col = cls.snf_n.rank; col < cls.basis_n.size(); ++col) {
        Chain z(3, 3);
        for (size_t i = 0; i < cls.basis_n.size(); ++i)
            if (cls.snf_n.V[i][col] != 0)
                z.add_key(cls.basis_n[i], cls.snf_n.V[i][col].convert_to<long long>());
        auto coords = classify_cycle(spec, h, z);
        Chain w(4, 3);
        w.add_term({0, 1, 0, 2}, 2);
        auto coords2 = classify_cycle(spec, h, z + boundary(spec, w));
        CHECK(coords == coords2);
        for (const auto& c : coords) found_nonzero |= (c != 0);
    }
    CHECK(found_nonzero);
    Chain notcycle(3, 3);
    notcycle.add_term({0, 1, 2}, 1);
    CHECK_THROWS_AS(classify_cycle(spec, h, notcycle), precondition_error);
}

TEST_CASE("splitting audit on small quandles") {
    for (const auto* name : {"dihedral:3", "dihedral:4", "conj:z4", "trivial:2"}) {
        auto q = parse_quandle_spec(name);
        for (int n = 1; n <= 3; ++n) {
            ComplexSpec r{&q, Theory::R, false, 0, std::nullopt};
            ComplexSpec d{&q, Theory::D, false, 0, std::nullopt};
            ComplexSpec qq{&q, Theory::Q, false, 0, std::nullopt};
            auto hr = homology(r, n);
            auto hd = homology(d, n);
            auto hq = homology(qq, n);
            CHECK(hr.free_rank == hd.free_rank + hq.free_rank);
            std::vector<BigInt> lhs = hr.torsion;
            std::vector<BigInt> rhs = hd.torsion;
            rhs.insert(rhs.end(), hq.torsion.begin(), hq.torsion.end());
            std::sort(lhs.begin(), lhs.end());
            std::sort(rhs.begin(), rhs.end());
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("rank-nullity audit") {
    auto q = make_dihedral(3);
    for (Theory th : {Theory::R, Theory::D, Theory::Q}) {
        ComplexSpec spec{&q, th, false, 0, std::nullopt};
        for (int n = 1; n <= 3; ++n) {
            auto m = boundary_matrix(spec, n);
            auto snf = snf_full(to_dense(m));
            CHECK(m.cols == snf.rank + (m.cols - snf.rank));
            auto h = homology(spec, n, true);
            CHECK(h.classifier->cycle_dim == m.cols - snf.rank);
        }
    }
}

TEST_CASE("cohomology mod 3 of dihedral(3): oracle dims and pinned cocycle") {
    auto d3 = make_dihedral(3);
    ComplexSpec spec{&d3, Theory::Q, false, 0, std::nullopt};
    auto j = oracle();

    auto cb2 = cocycle_basis(spec, 2, 3);
    CHECK(static_cast<int>(cb2.cocycles.size()) - cb2.coboundary_rank ==
          j["dim_H2_Q_dihedral3_mod3"].get<int>());
    auto cb3 = cocycle_basis(spec, 3, 3);
    CHECK(static_cast<int>(cb3.cocycles.size()) - cb3.coboundary_rank ==
          j["dim_H3_Q_dihedral3_mod3"].get<int>());

    for (const auto& f : cb3.cocycles) CHECK(is_cocycle(spec, 3, 3, f));

    // pinned degree-3 cocycle: cocycle but not coboundary
    auto pin = j["pinned_cocycle_deg3_mod3"];
    std::vector<int> f(cb3.basis.size(), 0);
    for (size_t i = 0; i < pin["tuples"].size(); ++i) {
        auto tup = pin["tuples"][i].get<std::vector<int>>();
        auto key = pack_tuple(tup, 3);
        auto it = std::lower_bound(cb3.basis.begin(), cb3.basis.end(), key);
        REQUIRE(*it == key);
        f[it - cb3.basis.begin()] = pin["values"][i].get<int>();
    }
    CHECK(is_cocycle(spec, 3, 3, f));
    CHECK_FALSE(is_coboundary(spec, 3, 3, f));

    // zero function is both
    std::vector<int> zero(cb3.basis.size(), 0);
    CHECK(is_cocycle(spec, 3, 3, zero));
    CHECK(is_coboundary(spec, 3, 3, zero));

    // cocycles kill boundaries
    std::uint64_t s = 41;
    auto rnd = [&](int n) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<int>((s >> 33) % n);
    };
    for (int it = 0; it < 20; ++it) {
        Chain w(4, 3);
        std::vector<int> tup{rnd(3), rnd(3), rnd(3), rnd(3)};
        if (tuple_degenerate(tup)) continue;
        w.add_term(tup, rnd(5) - 2);
        auto b = boundary(spec, w);
        long long acc = 0;
        for (const auto& [key, c] : b.terms()) {
            auto it2 = std::lower_bound(cb3.basis.begin(), cb3.basis.end(), key);
            acc += c * f[it2 - cb3.basis.begin()];
        }
        CHECK(((acc % 3) + 3) % 3 == 0);
    }

    CHECK_THROWS_AS(cocycle_basis(spec, 2, 4), parameter_error);
}

TEST_CASE("coboundary membership over a non-prime modulus") {
    auto t2 = make_trivial(2);
    ComplexSpec spec{&t2, Theory::R, false, 0, std::nullopt};
    // all differentials vanish: only the zero function is a coboundary
    auto basis = complex_basis(spec, 2);
    std::vector<int> f(basis.size(), 0);
    CHECK(is_coboundary(spec, 2, 4, f));
    f[0] = 2;
    CHECK(is_cocycle(spec, 2, 4, f));
    CHECK_FALSE(is_coboundary(spec, 2, 4, f));
}

TEST_CASE("twisted homology needs a field quotient") {
    auto d3 = make_dihedral(3);
    LaurentRing notfield(3, {1, 1, 1});
    ComplexSpec bad{&d3, Theory::Q, true, 0, notfield};
    CHECK_THROWS_AS(twisted_homology(bad, 2), parameter_error);

    LaurentRing gf4(2, {1, 1, 1});
    ComplexSpec ok{&d3, Theory::Q, true, 0, gf4};
    auto h = twisted_homology(ok, 2);
    CHECK(h.free_rank >= 0);
    CHECK(h.torsion.empty());
}
