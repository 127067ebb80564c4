#include <doctest.h>

#include <algorithm>
#include <vector>

#include "knotpoly/laurent.hpp"
#include "test_util.hpp"

using namespace knotpoly;
using kptest::L1;
using kptest::L2;
using kptest::LH;
using kptest::Rng;

TEST_CASE("addition") {
  auto one = L1("x", {{0, 1}});
  CHECK(add(L1("x", {{0, 1}, {1, -1}}), L1("x", {{1, 1}})) == one);

  auto p = L1("x", {{-2, 3}, {0, 1}, {5, -7}});
  CHECK(add(LaurentPoly::zero({"x"}), p) == p);

  // termwise assembly of 2 - 5x + 2x^2
  CHECK(add(L1("x", {{0, 2}, {1, -5}}), L1("x", {{2, 2}})) ==
        L1("x", {{0, 2}, {1, -5}, {2, 2}}));

  CHECK_THROWS_AS(add(L1("x", {{0, 1}}), L1("t", {{0, 1}})), std::invalid_argument);
}

TEST_CASE("multiplication") {
  CHECK(mul(L1("x", {{0, 2}, {1, -1}}), L1("x", {{0, 1}, {1, -2}})) ==
        L1("x", {{0, 2}, {1, -5}, {2, 2}}));

  auto p = L1("x", {{-1, 4}, {2, 3}});
  CHECK(mul(p, L1("x", {{0, 1}})) == p);

  CHECK(mul(L1("x", {{-1, 1}}), L1("x", {{1, 1}})) == L1("x", {{0, 1}}));
}

TEST_CASE("unit normalization") {
  CHECK(normalize_unit(L1("x", {{-2, -2}, {-1, 5}, {0, -2}})) ==
        L1("x", {{0, 2}, {1, -5}, {2, 2}}));
  CHECK(normalize_unit(L1("x", {{0, 1}})) == L1("x", {{0, 1}}));
  CHECK(normalize_unit(L1("x", {{7, 1}})) == L1("x", {{0, 1}}));
  CHECK(normalize_unit(LaurentPoly::zero({"x"})).is_zero());
}

TEST_CASE("unit normalization is idempotent with positive constant term") {
  Rng rng(42);
  for (int iter = 0; iter < 200; ++iter) {
    LaurentPoly p({"x"});
    int nterms = 1 + static_cast<int>(rng.below(5));
    for (int i = 0; i < nterms; ++i)
      p.add_term(ExpVec{2 * rng.range(-6, 6), 0}, Int(rng.range(-9, 9)));
    if (p.is_zero()) continue;
    auto q = normalize_unit(p);
    CHECK(q.min_exp_half(0) == 0);
    CHECK(q.coeff(ExpVec{}) > 0);
    CHECK(normalize_unit(q) == q);
  }
}

TEST_CASE("canonical serialization") {
  CHECK(serialize(L1("x", {{0, 2}, {1, -5}, {2, 2}})) == "2*x^0 + -5*x^1 + 2*x^2");
  CHECK(serialize(LH("t", {{-5, 1}, {3, -2}})) == "1*t^-5/2 + -2*t^3/2");
  CHECK(serialize(L2("v", "z", {{0, 0, 1}, {2, -1, 3}})) ==
        "1*v^0*z^0 + 3*v^2*z^-1");
  CHECK(serialize(LaurentPoly::zero({"x"})) == "0");

  // serialize(p) == serialize(q) iff p == q, independent of build order
  Rng rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<kptest::Term2> ts;
    int nterms = 1 + static_cast<int>(rng.below(6));
    for (int i = 0; i < nterms; ++i)
      ts.push_back({rng.range(-4, 4), rng.range(-4, 4), rng.range(-5, 5)});
    auto shuffled = ts;
    for (std::size_t i = shuffled.size(); i > 1; --i)
      std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
    LaurentPoly a({"v", "z"}), b({"v", "z"});
    for (const auto& t : ts) a.add_term(ExpVec{2 * t.e0, 2 * t.e1}, Int(t.coeff));
    for (const auto& t : shuffled) b.add_term(ExpVec{2 * t.e0, 2 * t.e1}, Int(t.coeff));
    CHECK(a == b);
    CHECK(serialize(a) == serialize(b));
  }
}

TEST_CASE("exact division") {
  // (x^40 - 1) / (x - 1) has a long quotient
  auto q = exact_div(L1("x", {{40, 1}, {0, -1}}), L1("x", {{1, 1}, {0, -1}}));
  REQUIRE(q.has_value());
  CHECK(q->terms().size() == 40);
  CHECK(mul(*q, L1("x", {{1, 1}, {0, -1}})) == L1("x", {{40, 1}, {0, -1}}));

  CHECK(!exact_div(L1("x", {{2, 1}, {0, 1}}), L1("x", {{1, 1}, {0, -1}})).has_value());
  CHECK(!exact_div(L1("x", {{1, 3}}), L1("x", {{0, 2}})).has_value());

  // division by a unit always succeeds
  auto u = exact_div(L1("x", {{3, 4}, {5, -6}}), L1("x", {{2, -1}}));
  REQUIRE(u.has_value());
  CHECK(mul(*u, L1("x", {{2, -1}})) == L1("x", {{3, 4}, {5, -6}}));
}

TEST_CASE("substitution") {
  // v*z at v=t, z=t^(1/2)-t^(-1/2)
  auto img_v = L1("t", {{1, 1}});
  auto img_z = LH("t", {{1, 1}, {-1, -1}});
  auto r = substitute(L2("v", "z", {{1, 1, 1}}), {img_v, img_z});
  CHECK(r == LH("t", {{3, 1}, {1, -1}}));

  // (v^-1 - v) * z^-1 specializes to -(t^(1/2) + t^(-1/2))
  auto p = L2("v", "z", {{-1, -1, 1}, {1, -1, -1}});
  CHECK(substitute(p, {img_v, img_z}) == LH("t", {{1, -1}, {-1, -1}}));
}

TEST_CASE("exponent utilities") {
  auto p = LH("t", {{-3, 2}, {4, 1}});
  CHECK(p.has_half_exponents(0));
  CHECK(invert_var(p, 0) == LH("t", {{3, 2}, {-4, 1}}));
  CHECK(scale_exponents(p, 0, 2) == LH("t", {{-6, 2}, {8, 1}}));

  auto uq = unit_quotient(L1("x", {{2, -2}, {3, 5}}), L1("x", {{0, 2}, {1, -5}}));
  REQUIRE(uq.has_value());
  CHECK(uq->sign == -1);
  CHECK(uq->exp.h[0] == 4);
  CHECK(!unit_quotient(L1("x", {{0, 1}}), L1("x", {{0, 2}})).has_value());
}
