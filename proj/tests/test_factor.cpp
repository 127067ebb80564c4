#include <doctest.h>

#include <numeric>
#include <vector>

#include "knotpoly/factor.hpp"
#include "knotpoly/laurent.hpp"
#include "test_util.hpp"

using namespace knotpoly;
using kptest::L1;
using kptest::L2;
using kptest::LH;
using kptest::Rng;

namespace {

LaurentPoly reassemble(const FactorVerdict& v) {
  REQUIRE(v.witness.has_value());
  return mul(mul(v.unit, v.witness->first), v.witness->second) * v.content;
}

bool is_nonunit(const LaurentPoly& p) { return p.terms().size() >= 2; }

// ---- brute-force irreducibility oracle for degree <= 4 ----------------
// Independent of the production factorizer: rational-root elimination
// plus exact enumeration of quadratic splittings for degree 4.

std::vector<long long> divisors_of(long long n) {
  n = n < 0 ? -n : n;
  std::vector<long long> out;
  for (long long d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      out.push_back(n / d);
    }
  return out;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool has_linear_factor(const std::vector<long long>& f) {
  for (long long a : divisors_of(f.back()))
    for (long long b : divisors_of(f.front()))
      for (int sa : {1, -1})
        for (int sb : {1, -1}) {
          // root -sb*b / (sa*a)
          long long acc = 0;
          for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
            acc = acc * (-sb * b) + f[i] * ipow(sa * a, static_cast<int>(f.size()) - 1 - i);
          if (acc == 0) return true;
        }
  return false;
}

bool has_quadratic_split_deg4(const std::vector<long long>& f) {
  // f = (a2 x^2 + a1 x + a0)(h2 x^2 + h1 x + h0), all integers
  for (long long a2 : divisors_of(f[4]))
    for (int s2 : {1, -1}) {
      long long A2 = s2 * a2;
      if (f[4] % A2 != 0) continue;
      long long H2 = f[4] / A2;
      for (long long a0 : divisors_of(f[0]))
        for (int s0 : {1, -1}) {
          long long A0 = s0 * a0;
          if (f[0] % A0 != 0) continue;
          long long H0 = f[0] / A0;
          // A2*h1 + H2*a1 = f3 ; H0*a1 + A0*h1 = f1
          long long det = A2 * H0 - H2 * A0;
          if (det != 0) {
            long long num_h1 = f[3] * H0 - H2 * f[1];
            long long num_a1 = A2 * f[1] - f[3] * A0;
            if (num_h1 % det || num_a1 % det) continue;
            long long h1 = num_h1 / det, a1 = num_a1 / det;
            if (A2 * H0 + a1 * h1 + A0 * H2 == f[2]) return true;
          } else {
            // singular system: scan a small window exactly
            for (long long a1 = -60; a1 <= 60; ++a1) {
              if ((f[3] - H2 * a1) % A2 != 0) continue;
              long long h1 = (f[3] - H2 * a1) / A2;
              if (H0 * a1 + A0 * h1 == f[1] &&
                  A2 * H0 + a1 * h1 + A0 * H2 == f[2])
                return true;
            }
          }
        }
    }
  return false;
}

bool oracle_irreducible(const std::vector<long long>& f) {
  int deg = static_cast<int>(f.size()) - 1;
  if (deg <= 0) return false;
  if (deg == 1) return true;
  if (has_linear_factor(f)) return false;
  if (deg <= 3) return true;
  return !has_quadratic_split_deg4(f);
}

LaurentPoly from_coeffs(const std::vector<long long>& f) {
  LaurentPoly p({"x"});
  for (std::size_t i = 0; i < f.size(); ++i)
    p.add_term(ExpVec{2 * static_cast<std::int64_t>(i), 0}, Int(f[i]));
  return p;
}

std::vector<long long> random_irreducible(Rng& rng) {
  while (true) {
    int deg = 1 + static_cast<int>(rng.below(4));
    std::vector<long long> f(deg + 1);
    for (auto& c : f) c = rng.range(-5, 5);
    if (f.back() == 0 || f.front() == 0) continue;  // non-unit in the Laurent ring
    long long g = 0;
    for (long long c : f) g = std::gcd(g, c < 0 ? -c : c);
    if (g != 1) continue;
    if (oracle_irreducible(f)) return f;
  }
}

}  // namespace

TEST_CASE("univariate verdicts on fixed inputs") {
  auto v = factor_univariate(L1("x", {{0, 2}, {1, -5}, {2, 2}}));
  CHECK(v.status == FactorVerdict::Status::Factorizable);
  CHECK(is_nonunit(v.witness->first));
  CHECK(is_nonunit(v.witness->second));
  CHECK(reassemble(v) == L1("x", {{0, 2}, {1, -5}, {2, 2}}));

  CHECK(factor_univariate(L1("x", {{0, 1}, {1, 1}, {2, 1}})).status ==
        FactorVerdict::Status::Irreducible);

  auto unit = factor_univariate(L1("x", {{1, 1}}));
  CHECK(unit.status == FactorVerdict::Status::Irreducible);
  CHECK(unit.note.find("unit") != std::string::npos);

  auto constant = factor_univariate(L1("x", {{0, 5}}));
  CHECK(constant.status == FactorVerdict::Status::Irreducible);
  CHECK(constant.content == 5);
  CHECK(constant.note.find("content") != std::string::npos);

  CHECK_THROWS_AS(factor_univariate(LaurentPoly::zero({"x"})), std::invalid_argument);
}

TEST_CASE("univariate with Laurent units and half exponents") {
  // x^-3 * (2 - 5x + 2x^2) * (-1)
  auto p = mul(L1("x", {{0, 2}, {1, -5}, {2, 2}}), L1("x", {{-3, -1}}));
  auto v = factor_univariate(p);
  CHECK(v.status == FactorVerdict::Status::Factorizable);
  CHECK(reassemble(v) == p);

  // t - 3t^(1/2) + 2 reads as s^2 - 3s + 2 in s = t^(1/2)
  auto h = LH("t", {{2, 1}, {1, -3}, {0, 2}});
  auto hv = factor_univariate(h);
  CHECK(hv.status == FactorVerdict::Status::Factorizable);
  CHECK(reassemble(hv) == h);

  // t^(1/2) - 1 is linear after clearing
  CHECK(factor_univariate(LH("t", {{1, 1}, {0, -1}})).status ==
        FactorVerdict::Status::Irreducible);
}

TEST_CASE("repeated factors are factorizable") {
  auto sq = mul(L1("x", {{0, 1}, {1, 1}}), L1("x", {{0, 1}, {1, 1}}));
  auto v = factor_univariate(sq);
  CHECK(v.status == FactorVerdict::Status::Factorizable);
  CHECK(reassemble(v) == sq);
}

TEST_CASE("univariate round trip over random irreducible products") {
  Rng rng(20240917);
  for (int iter = 0; iter < 200; ++iter) {
    int k = 2 + static_cast<int>(rng.below(2));
    LaurentPoly prod = L1("x", {{0, 1}});
    for (int i = 0; i < k; ++i) prod = mul(prod, from_coeffs(random_irreducible(rng)));
    auto v = factor_univariate(prod);
    REQUIRE(v.status == FactorVerdict::Status::Factorizable);
    CHECK(is_nonunit(v.witness->first));
    CHECK(is_nonunit(v.witness->second));
    CHECK(reassemble(v) == prod);
  }
}

TEST_CASE("bivariate verdicts on fixed inputs") {
  auto p = mul(L2("v", "z", {{0, 0, 1}, {1, 0, 1}}), L2("v", "z", {{0, 0, 1}, {0, 1, 1}}));
  auto v = factor_bivariate(p);
  CHECK(v.status == FactorVerdict::Status::Factorizable);
  CHECK(reassemble(v) == p);

  auto irr = factor_bivariate(L2("v", "z", {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}));
  CHECK(irr.status != FactorVerdict::Status::Factorizable);
  CHECK(irr.status == FactorVerdict::Status::Irreducible);

  auto constant = factor_bivariate(L2("v", "z", {{0, 0, 5}}));
  CHECK(constant.status == FactorVerdict::Status::Irreducible);
  CHECK(constant.content == 5);

  auto unit = factor_bivariate(L2("v", "z", {{2, -1, -1}}));
  CHECK(unit.status == FactorVerdict::Status::Irreducible);
  CHECK(unit.note.find("unit") != std::string::npos);

  CHECK_THROWS_AS(factor_bivariate(LaurentPoly::zero({"v", "z"})), std::invalid_argument);
}

TEST_CASE("bivariate single-variable inputs delegate") {
  auto p = L2("v", "z", {{0, 0, 2}, {1, 0, -5}, {2, 0, 2}});
  auto v = factor_bivariate(p);
  CHECK(v.status == FactorVerdict::Status::Factorizable);
  CHECK(reassemble(v) == p);

  auto q = L2("v", "z", {{0, 0, 1}, {0, 1, 1}, {0, 2, 1}});
  CHECK(factor_bivariate(q).status == FactorVerdict::Status::Irreducible);
}

TEST_CASE("bivariate never returns an unverified witness") {
  Rng rng(99);
  for (int iter = 0; iter < 60; ++iter) {
    LaurentPoly p({"v", "z"});
    int nterms = 2 + static_cast<int>(rng.below(5));
    for (int i = 0; i < nterms; ++i)
      p.add_term(ExpVec{2 * rng.range(-2, 2), 2 * rng.range(-2, 2)}, Int(rng.range(-4, 4)));
    if (p.is_zero() || p.terms().size() < 2) continue;
    auto v = factor_bivariate(p);
    if (v.status == FactorVerdict::Status::Factorizable) {
      CHECK(is_nonunit(v.witness->first));
      CHECK(is_nonunit(v.witness->second));
      CHECK(reassemble(v) == p);
    }
  }
}

TEST_CASE("bivariate round trip over random products") {
  Rng rng(555);
  int done = 0;
  while (done < 40) {
    auto mk = [&] {
      LaurentPoly p({"v", "z"});
      int nterms = 2 + static_cast<int>(rng.below(3));
      for (int i = 0; i < nterms; ++i)
        p.add_term(ExpVec{2 * rng.range(0, 2), 2 * rng.range(0, 2)}, Int(rng.range(-3, 3)));
      return p;
    };
    auto a = mk(), b = mk();
    if (a.terms().size() < 2 || b.terms().size() < 2) continue;
    auto prod = mul(a, b);
    auto v = factor_bivariate(prod);
    REQUIRE(v.status == FactorVerdict::Status::Factorizable);
    CHECK(reassemble(v) == prod);
    ++done;
  }
}
