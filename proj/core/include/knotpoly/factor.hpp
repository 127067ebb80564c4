#pragma once

#include <optional>
#include <string>
#include <utility>

#include "knotpoly/laurent.hpp"

namespace knotpoly {

// Three-valued factorizability verdict over the integral Laurent ring.
// Units are +/-(monomial); integer content is never a factor and is
// reported on the side so experiments can account for it either way.
struct FactorVerdict {
  enum class Status { Factorizable, Irreducible, Unknown };

  Status status = Status::Unknown;
  // Two non-unit factors with input == unit * content * first * second.
  std::optional<std::pair<LaurentPoly, LaurentPoly>> witness;
  LaurentPoly unit;  // +/- monomial split off before factoring
  Int content = 1;   // integer content, reported separately
  std::string note;

  bool factorizable() const { return status == Status::Factorizable; }
};

// Zassenhaus factorization of a one-variable Laurent polynomial: strip
// the unit and integer content, take the square-free decomposition,
// factor modulo a suitable prime, Hensel-lift and recombine subsets with
// exact trial division.  Half-integer exponents are first cleared by
// reading the value in the square root of the variable.  Never returns
// Unknown.  Throws on the zero polynomial.
FactorVerdict factor_univariate(const LaurentPoly& p);

// Two-variable verdict via Kronecker substitution (second variable ->
// first variable raised to D with D exceeding twice the first-variable
// degree spread), univariate factorization of the image, and exhaustive
// divisor lift-back verified by exact division.  Returns Unknown instead
// of guessing when the search budget is exhausted; a Factorizable result
// always carries a verified witness.  Throws on the zero polynomial.
FactorVerdict factor_bivariate(const LaurentPoly& p);

const char* to_string(FactorVerdict::Status s);

}  // namespace knotpoly
