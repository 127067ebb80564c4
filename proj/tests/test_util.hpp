#pragma once

// Shared helpers for the test suites: compact Laurent constructors and a
// deterministic RNG so expected values stay frozen across platforms.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "knotpoly/laurent.hpp"

namespace kptest {

using knotpoly::ExpVec;
using knotpoly::Int;
using knotpoly::LaurentPoly;

struct Term1 {
  std::int64_t exp;  // whole-unit exponent
  long long coeff;
};

// One-variable polynomial with integer exponents.
inline LaurentPoly L1(const std::string& var, std::initializer_list<Term1> ts) {
  LaurentPoly p(std::vector<std::string>{var});
  for (const auto& t : ts) p.add_term(ExpVec{2 * t.exp, 0}, Int(t.coeff));
  return p;
}

struct TermH {
  std::int64_t half;  // exponent in half units
  long long coeff;
};

inline LaurentPoly LH(const std::string& var, std::initializer_list<TermH> ts) {
  LaurentPoly p(std::vector<std::string>{var});
  for (const auto& t : ts) p.add_term(ExpVec{t.half, 0}, Int(t.coeff));
  return p;
}

struct Term2 {
  std::int64_t e0, e1;  // whole-unit exponents
  long long coeff;
};

inline LaurentPoly L2(const std::string& v0, const std::string& v1,
                      std::initializer_list<Term2> ts) {
  LaurentPoly p(std::vector<std::string>{v0, v1});
  for (const auto& t : ts) p.add_term(ExpVec{2 * t.e0, 2 * t.e1}, Int(t.coeff));
  return p;
}

// xorshift64*; fixed seeds keep every randomized test reproducible
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next() {
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return s * 0x2545F4914F6CDD1DULL;
  }
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

}  // namespace kptest
