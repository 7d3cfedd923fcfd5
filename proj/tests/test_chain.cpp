#include <doctest.h>

#include <cstdlib>

#include "quandle/chain.hpp"

using namespace qdl;

namespace {

// deterministic pseudo-random chains
struct Lcg {
    std::uint64_t s;
    explicit Lcg(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() { return s = s * 6364136223846793005ULL + 1442695040888963407ULL; }
    int uniform(int n) { return static_cast<int>((next() >> 33) % n); }
};

Chain random_chain(Lcg& rng, int degree, int k, int nterms, bool nondeg = false) {
    Chain c(degree, k);
    for (int t = 0; t < nterms; ++t) {
        std::vector<int> tup(degree);
        do {
            for (int& x : tup) x = rng.uniform(k);
        } while (nondeg && tuple_degenerate(tup));
        c.add_term(tup, rng.uniform(9) - 4);
    }
    return c;
}

} // namespace

TEST_CASE("tuple packing is lexicographic") {
    CHECK(pack_tuple({0, 1, 2}, 3) == 5);
    CHECK(unpack_tuple(5, 3, 3) == std::vector<int>{0, 1, 2});
    CHECK(pack_tuple({2, 0}, 3) > pack_tuple({1, 2}, 3));
}

TEST_CASE("face maps: formulas and examples") {
    auto d3 = make_dihedral(3);
    // face_star(2,(0,1,2)) = (0*1, 2) = (2,2)
    CHECK(face_star_tuple(d3, 2, {0, 1, 2}) == std::vector<int>{2, 2});
    CHECK(face_star0_tuple(2, {0, 1, 2}) == std::vector<int>{0, 2});
    // d_1^{(*)} = d_1^{(*0)}
    Lcg rng(7);
    for (int it = 0; it < 50; ++it) {
        std::vector<int> t(4);
        for (int& x : t) x = rng.uniform(3);
        CHECK(face_star_tuple(d3, 1, t) == face_star0_tuple(1, t));
    }
}

TEST_CASE("presimplicial and weak-simplicial identities (Def 1.7, shifted to 1-base)") {
    Lcg rng(11);
    for (const auto* qp : {"dihedral:3", "dihedral:5", "conj:s3"}) {
        auto q = parse_quandle_spec(qp);
        const int k = q.size();
        for (int it = 0; it < 40; ++it) {
            int n = 3 + rng.uniform(2);  // degrees 3..4
            std::vector<int> t(n);
            for (int& x : t) x = rng.uniform(k);
            // (1) d_i d_j = d_{j-1} d_i for i < j (both families)
            for (int i = 1; i <= n - 1; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    CHECK(face_star0_tuple(i, face_star0_tuple(j, t)) ==
                          face_star0_tuple(j - 1, face_star0_tuple(i, t)));
                    CHECK(face_star_tuple(q, i, face_star_tuple(q, j, t)) ==
                          face_star_tuple(q, j - 1, face_star_tuple(q, i, t)));
                }
            // (2) s_i s_j = s_{j+1} s_i for i <= j
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j)
                    CHECK(degeneracy_tuple(i, degeneracy_tuple(j, t)) ==
                          degeneracy_tuple(j + 1, degeneracy_tuple(i, t)));
            // (3) d_i s_j commutation away from the diagonal
            for (int i = 1; i <= n + 1; ++i)
                for (int j = 1; j <= n; ++j) {
                    if (i == j || i == j + 1) continue;
                    auto lhs0 = face_star0_tuple(i, degeneracy_tuple(j, t));
                    auto lhs = face_star_tuple(q, i, degeneracy_tuple(j, t));
                    if (i < j) {
                        CHECK(lhs0 == degeneracy_tuple(j - 1, face_star0_tuple(i, t)));
                        CHECK(lhs == degeneracy_tuple(j - 1, face_star_tuple(q, i, t)));
                    } else {
                        CHECK(lhs0 == degeneracy_tuple(j, face_star0_tuple(i - 1, t)));
                        CHECK(lhs == degeneracy_tuple(j, face_star_tuple(q, i - 1, t)));
                    }
                }
            // (4') d_i s_i = d_{i+1} s_i
            for (int i = 1; i <= n; ++i) {
                CHECK(face_star0_tuple(i, degeneracy_tuple(i, t)) ==
                      face_star0_tuple(i + 1, degeneracy_tuple(i, t)));
                CHECK(face_star_tuple(q, i, degeneracy_tuple(i, t)) ==
                      face_star_tuple(q, i + 1, degeneracy_tuple(i, t)));
            }
        }
    }
}

TEST_CASE("boundary of (a,b) and d d = 0") {
    auto d3 = make_dihedral(3);
    ComplexSpec spec{&d3, Theory::R, false, 0, std::nullopt};
    Chain c(2, 3);
    c.add_term({0, 1}, 1);
    auto b = boundary(spec, c);
    CHECK(b.coeff({0}) == 1);
    CHECK(b.coeff({2}) == -1);  // 0*1 = 2

    Lcg rng(13);
    for (Theory th : {Theory::R, Theory::D, Theory::Q}) {
        spec.theory = th;
        for (int deg = 2; deg <= 5; ++deg) {
            auto z = random_chain(rng, deg, 3, 5);
            if (th == Theory::Q) z = z.quandle_reduce();
            CHECK(boundary(spec, boundary(spec, z)).is_zero());
        }
    }
}

TEST_CASE("twisted boundary squares to zero") {
    auto d3 = make_dihedral(3);
    LaurentRing ring(3, {1, 1, 1});
    ComplexSpec spec{&d3, Theory::R, true, 0, ring};
    Lcg rng(17);
    for (Theory th : {Theory::R, Theory::D, Theory::Q}) {
        spec.theory = th;
        for (int deg = 2; deg <= 4; ++deg) {
            TwistedChain c(deg, 3, ring);
            for (int t = 0; t < 5; ++t) {
                std::vector<int> tup(deg);
                for (int& x : tup) x = rng.uniform(3);
                if (th == Theory::Q && tuple_degenerate(tup)) continue;
                c.add_term(tup, LaurentElement{{rng.uniform(3), rng.uniform(3)}});
            }
            CHECK(boundary(spec, boundary(spec, c)).is_zero());
        }
    }
}

TEST_CASE("boundary vanishes over trivial quandles (rack theory)") {
    auto t1 = make_trivial(1);
    ComplexSpec spec{&t1, Theory::R, false, 0, std::nullopt};
    for (int deg = 1; deg <= 5; ++deg) {
        Chain c(deg, 1);
        c.add_term(std::vector<int>(deg, 0), 3);
        CHECK(boundary(spec, c).is_zero());
    }
}

TEST_CASE("degenerate subcomplex is closed under the boundary") {
    auto q = parse_quandle_spec("dihedral:5");
    ComplexSpec spec{&q, Theory::D, false, 0, std::nullopt};
    Lcg rng(23);
    for (int it = 0; it < 30; ++it) {
        std::vector<int> t(4);
        do {
            for (int& x : t) x = rng.uniform(5);
        } while (!tuple_degenerate(t));
        Chain c(4, 5);
        c.add_term(t, 1);
        spec.theory = Theory::R;
        auto b = boundary(spec, c);
        for (const auto& [key, coef] : b.terms())
            CHECK(tuple_degenerate(unpack_tuple(key, 3, 5)));
        spec.theory = Theory::D;
    }
}

TEST_CASE("degeneracy example") {
    Chain c(2, 3);
    c.add_term({0, 1}, 1);
    auto s = degeneracy(1, c);
    CHECK(s.coeff({0, 0, 1}) == 1);
    CHECK(s.degree() == 3);
}

TEST_CASE("alpha embedding") {
    auto d3 = make_dihedral(3);
    Chain c1(1, 3);
    c1.add_term({2}, 1);
    CHECK(alpha_embed(c1) == c1);

    Chain c2(2, 3);
    c2.add_term({0, 1}, 1);
    auto a = alpha_embed(c2);
    CHECK(a.coeff({0, 1}) == 1);
    CHECK(a.coeff({0, 0}) == -1);

    // section property: quotient projection after alpha = identity
    Lcg rng(29);
    for (int it = 0; it < 20; ++it) {
        auto z = random_chain(rng, 3, 3, 4, true);
        CHECK(alpha_embed(z).quandle_reduce() == z);
    }
    // chain map into the rack complex
    ComplexSpec rspec{&d3, Theory::R, false, 0, std::nullopt};
    ComplexSpec qspec{&d3, Theory::Q, false, 0, std::nullopt};
    for (int it = 0; it < 20; ++it) {
        auto z = random_chain(rng, 3, 3, 4, true);
        CHECK(boundary(rspec, alpha_embed(z)) == alpha_embed(boundary(qspec, z)));
    }
}

TEST_CASE("gamma: dg = -gd (so (-1)^n gamma is a chain map)") {
    auto d3 = make_dihedral(3);
    ComplexSpec spec{&d3, Theory::R, false, 0, std::nullopt};
    Lcg rng(31);
    Chain c(3, 3);
    c.add_term({0, 1, 2}, 1);
    CHECK(gamma_truncate(c).coeff({1, 2}) == 1);
    for (int deg = 2; deg <= 5; ++deg)
        for (int it = 0; it < 10; ++it) {
            auto z = random_chain(rng, deg, 3, 4);
            CHECK(boundary(spec, gamma_truncate(z)) ==
                  gamma_truncate(boundary(spec, z)) * -1);
        }
}

TEST_CASE("chain action: trivial quandle fixes everything; homotopy identity") {
    auto t3 = make_trivial(3);
    Lcg rng(37);
    auto z = random_chain(rng, 3, 3, 5);
    CHECK(act_on_chain(t3, z, 1) == z);

    auto d3 = make_dihedral(3);
    ComplexSpec spec{&d3, Theory::R, false, 0, std::nullopt};
    // d h_x - h_x d = (-1)^{n+1} (c - c*x)
    for (int deg = 1; deg <= 4; ++deg)
        for (int it = 0; it < 10; ++it) {
            auto c = random_chain(rng, deg, 3, 4);
            int x = rng.uniform(3);
            auto lhs = boundary(spec, append_element(c, x)) -
                       append_element(boundary(spec, c), x);
            auto rhs = (c - act_on_chain(d3, c, x)) * (deg % 2 == 0 ? -1 : 1);
            CHECK(lhs == rhs);
        }

    // twisted homotopy: d^T h_x - h_x d^T = (-1)^{n+1} (t c - c*x)
    LaurentRing ring(3, {1, 1, 1});
    ComplexSpec tspec{&d3, Theory::R, true, 0, ring};
    for (int deg = 1; deg <= 4; ++deg)
        for (int it = 0; it < 8; ++it) {
            TwistedChain c(deg, 3, ring);
            for (int t = 0; t < 4; ++t) {
                std::vector<int> tup(deg);
                for (int& v : tup) v = rng.uniform(3);
                c.add_term(tup, LaurentElement{{rng.uniform(3), rng.uniform(3)}});
            }
            int x = rng.uniform(3);
            auto append = [&](const TwistedChain& ch) {
                TwistedChain r(ch.degree() + 1, 3, ring);
                for (const auto& [key, coef] : ch.terms()) {
                    auto tup = unpack_tuple(key, ch.degree(), 3);
                    tup.push_back(x);
                    r.add_term(tup, coef);
                }
                return r;
            };
            auto act = [&](const TwistedChain& ch) {
                TwistedChain r(ch.degree(), 3, ring);
                for (const auto& [key, coef] : ch.terms()) {
                    auto tup = unpack_tuple(key, ch.degree(), 3);
                    for (int& v : tup) v = d3.op(v, x);
                    r.add_term(tup, coef);
                }
                return r;
            };
            auto lhs = boundary(tspec, append(c)) - append(boundary(tspec, c));
            auto rhs = c.scale(ring.t_pow(1)) - act(c);
            if (deg % 2 == 0) rhs = TwistedChain(deg, 3, ring) - rhs;
            CHECK(lhs == rhs);
        }
}

TEST_CASE("boundary matrices") {
    auto d3 = make_dihedral(3);
    ComplexSpec spec{&d3, Theory::R, false, 0, std::nullopt};
    auto m1 = boundary_matrix(spec, 1);
    for (const auto& col : m1.col) CHECK(col.empty());  // d_1 = 0

    auto t2 = make_trivial(2);
    ComplexSpec tspec{&t2, Theory::R, false, 0, std::nullopt};
    auto m2 = boundary_matrix(tspec, 2);
    CHECK(m2.rows == 2);
    CHECK(m2.cols == 4);
    for (const auto& col : m2.col) CHECK(col.empty());

    // consecutive matrices multiply to zero
    for (const auto* qp : {"dihedral:3", "conj:z4"}) {
        auto q = parse_quandle_spec(qp);
        for (Theory th : {Theory::R, Theory::D, Theory::Q}) {
            ComplexSpec s{&q, th, false, 0, std::nullopt};
            for (int n = 2; n <= 4; ++n) {
                auto a = boundary_matrix(s, n);      // C_n -> C_{n-1}
                auto b = boundary_matrix(s, n + 1);  // C_{n+1} -> C_n
                // (a*b) column by column
                for (int j = 0; j < b.cols; ++j) {
                    std::map<int, long long> acc;
                    for (const auto& [i, v] : b.col[j])
                        for (const auto& [r, w] : a.col[i]) acc[r] += v * w;
                    for (const auto& [r, v] : acc) CHECK(v == 0);
                }
            }
        }
    }
}

TEST_CASE("basis guard and degree cap") {
    auto d3 = make_dihedral(3);
    ComplexSpec spec{&d3, Theory::R, false, 0, std::nullopt};
    CHECK_THROWS_AS(complex_basis(spec, 7), resource_error);
    setenv("QUANDLE_MAX_BASIS", "10", 1);
    CHECK_THROWS_AS(complex_basis(spec, 3), resource_error);
    unsetenv("QUANDLE_MAX_BASIS");
    CHECK(complex_basis(spec, 3).size() == 27);
    ComplexSpec qspec{&d3, Theory::Q, false, 0, std::nullopt};
    CHECK(complex_basis(qspec, 3).size() == 12);  // 3*2*2 nondegenerate
    ComplexSpec dspec{&d3, Theory::D, false, 0, std::nullopt};
    CHECK(complex_basis(dspec, 3).size() == 15);
}

TEST_CASE("chain JSON round trip") {
    Chain c(2, 3);
    c.add_term({0, 1}, 2);
    c.add_term({2, 0}, -1);
    auto back = Chain::from_json(c.to_json(), 3);
    CHECK(back == c);

    LaurentRing ring(3, {1, 1, 1});
    TwistedChain tc(2, 3, ring);
    tc.add_term({0, 1}, ring.t_pow(-1));
    auto j = tc.to_json();
    CHECK(j.find("Z_3[t]") != std::string::npos);
}
