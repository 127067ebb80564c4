#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace knotpoly {

using Int = boost::multiprecision::cpp_int;

// Exponent vector of a Laurent monomial.  Exponents are stored in half
// units (the stored value is twice the exponent), so t^(-3/2) has h = -3
// and t^2 has h = 4.  Every invariant in this project lives in a ring
// where denominators never exceed 2.
struct ExpVec {
  std::array<std::int64_t, 2> h{0, 0};

  friend auto operator<=>(const ExpVec&, const ExpVec&) = default;
};

// Exact integer-coefficient Laurent polynomial in one or two named
// variables.  Terms are kept in a canonical sorted map and never store a
// zero coefficient, so equal values have byte-identical serializations.
class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero polynomial in variable "x"
  explicit LaurentPoly(std::vector<std::string> vars);

  static LaurentPoly zero(std::vector<std::string> vars);
  static LaurentPoly constant(std::vector<std::string> vars, Int c);
  // e in half units
  static LaurentPoly monomial(std::vector<std::string> vars, ExpVec e, Int c);

  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<ExpVec, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // +/- a single monomial (a unit of the Laurent ring)
  bool is_unit() const;
  // true if some exponent has an odd half-unit numerator for variable k
  bool has_half_exponents(int k) const;

  Int coeff(ExpVec e) const;
  void add_term(ExpVec e, const Int& c);  // accumulates, drops zeros

  std::int64_t min_exp_half(int k) const;  // throws on zero polynomial
  std::int64_t max_exp_half(int k) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::vector<std::string> vars_{"x"};
  std::map<ExpVec, Int> terms_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly neg(const LaurentPoly& a);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const Int& c);
LaurentPoly pow(const LaurentPoly& a, unsigned e);

inline LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return add(a, b); }
inline LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return sub(a, b); }
inline LaurentPoly operator-(const LaurentPoly& a) { return neg(a); }
inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return mul(a, b); }
inline LaurentPoly operator*(const LaurentPoly& a, const Int& c) { return mul(a, c); }

// Multiply a one-variable polynomial by the unit +/- x^k that puts the
// minimal exponent at zero with a positive constant coefficient.  The
// zero polynomial is returned unchanged.
LaurentPoly normalize_unit(const LaurentPoly& p);

// Exact division; nullopt if b does not divide a in the Laurent ring.
std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b);

// If a == sign * x^e * b for a unit +/-x^e, report (sign, e); else nullopt.
struct UnitFactor {
  int sign = 1;
  ExpVec exp;
};
std::optional<UnitFactor> unit_quotient(const LaurentPoly& a, const LaurentPoly& b);

// Substitute every variable of p by the given image polynomials (all
// images over the same target ring).  Negative powers of an image are
// resolved by exact division and throw if the division is not exact.
LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& images);

// x^e -> x^-e for variable k.
LaurentPoly invert_var(const LaurentPoly& p, int k);

// Multiply every exponent of variable k by an integer factor (exponent
// scaling, e.g. t -> t^2 for factor 2).
LaurentPoly scale_exponents(const LaurentPoly& p, int k, int factor);

// Canonical text form: terms ascending by exponent vector, each printed
// as c*v^e (two-variable terms as c*v1^e1*v2^e2), joined by " + " with
// negative coefficients inline and half-integer exponents printed p/2.
// This string is the bit-exact grouping key used by the experiment layer.
std::string serialize(const LaurentPoly& p);

}  // namespace knotpoly
