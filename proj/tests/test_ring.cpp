#include <doctest.h>

#include "quandle/ring.hpp"

using namespace qdl;

TEST_CASE("Z_3[t]/(t^2+t+1) basics") {
    LaurentRing r(3, {1, 1, 1});
    CHECK(r.deg() == 2);
    auto t = r.t_pow(1);
    auto t2 = r.mul(t, t);
    // t^2 = -t-1 = 2t+2
    CHECK(t2.c == std::vector<int>{2, 2});
    CHECK(r.mul(t, r.t_pow(-1)) == r.one());
    CHECK(r.mul(r.t_pow(5), r.t_pow(-5)) == r.one());
    // (t-1)^2 = t^2 - 2t + 1 = (2t+2) + t + 1 = 3t+3 = 0: not a field
    auto tm1 = r.sub(t, r.one());
    CHECK(r.mul(tm1, tm1).is_zero());
    CHECK_FALSE(r.is_field());
}

TEST_CASE("field detection") {
    CHECK(LaurentRing(2, {1, 1, 1}).is_field());   // t^2+t+1 irreducible mod 2
    CHECK(LaurentRing(5, {2, 0, 1}).is_field());   // t^2+2 irreducible mod 5
    CHECK_FALSE(LaurentRing(5, {4, 0, 1}).is_field());  // t^2+4=(t+2)(t+3)
    CHECK_FALSE(LaurentRing(3, {1, 0, 2, 0, 1}).is_field());  // (t^2+1)^2 mod 3
    CHECK(LaurentRing(7, {3, 1}).is_field());      // linear over prime field
}

TEST_CASE("invalid rings rejected") {
    CHECK_THROWS_AS(LaurentRing(3, {0, 1, 1}), parameter_error);  // f(0)=0
    CHECK_THROWS_AS(LaurentRing(3, {1, 1, 2}), parameter_error);  // not monic
    CHECK_THROWS_AS(LaurentRing(1, {1, 1}), parameter_error);
}

TEST_CASE("companion matrix multiplies by t") {
    LaurentRing r(3, {1, 1, 1});
    auto c = r.companion();
    // column j of c = coefficients of t * t^j
    for (int j = 0; j < r.deg(); ++j) {
        auto tj1 = r.t_pow(j + 1);
        for (int i = 0; i < r.deg(); ++i) CHECK(c[i][j] == tj1.c[i]);
    }
}

TEST_CASE("format and parse round trip, negative powers accepted") {
    LaurentRing r(5, {2, 3, 1});
    auto v = r.add(r.scale(2, r.t_pow(1)), r.one());
    CHECK(r.format(v) == "2t+1");
    CHECK(r.parse("2t+1") == v);
    CHECK(r.parse(" 2 t + 1") == v);
    auto w = r.add(r.scale(2, r.t_pow(-1)), r.one());
    CHECK(r.parse("2t^-1+1") == w);
    CHECK(r.parse(r.format(w)) == w);
    CHECK(r.format(r.zero()) == "0");
    CHECK_THROWS_AS(r.parse("2x+1"), format_error);
}

TEST_CASE("ring is associative and distributive on samples") {
    LaurentRing r(4, {3, 2, 1});  // Z_4[t]/(t^2+2t+3), f(0)=3 a unit
    std::vector<LaurentElement> xs;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) xs.push_back({{a, b}});
    for (size_t i = 0; i < xs.size(); i += 3)
        for (size_t j = 0; j < xs.size(); j += 5)
            for (size_t k = 0; k < xs.size(); k += 7) {
                CHECK(r.mul(xs[i], r.mul(xs[j], xs[k])) ==
                      r.mul(r.mul(xs[i], xs[j]), xs[k]));
                CHECK(r.mul(xs[i], r.add(xs[j], xs[k])) ==
                      r.add(r.mul(xs[i], xs[j]), r.mul(xs[i], xs[k])));
            }
    CHECK(r.mul(r.t_pow(1), r.t_pow(-1)) == r.one());
}
