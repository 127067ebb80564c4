#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "knotpoly/diagram.hpp"

namespace knotpoly {

// Abstract syntax of a Conway symbol.  Integer tangles are the leaves;
// juxtaposition builds Product nodes, commas build Ramification nodes
// (with trailing + signs counted separately so symbols round-trip), and
// the 6* prefix substitutes six tangles into the vertices of the
// built-in basic polyhedron.
struct TangleExpr {
  enum class Kind { Integer, Product, Ramification, Polyhedral };

  Kind kind = Kind::Integer;
  int value = 0;                     // Integer
  std::vector<TangleExpr> children;  // Product (>=2), Ramification (>=2), slots (6)
  int plus_count = 0;                // Ramification: trailing +'s
  std::string polyhedron;            // Polyhedral: "6*"

  friend bool operator==(const TangleExpr&, const TangleExpr&) = default;

  static TangleExpr integer(int v) {
    TangleExpr t;
    t.value = v;
    return t;
  }
};

struct ParseError : std::invalid_argument {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
};

// Grammar: whitespace-separated integers form products, commas form
// ramifications, a trailing + appends a single positive twist, and
// "6*s1.s2...." fills polyhedron slots ('.' advances one slot, ':'
// skips ahead to the third slot, omitted slots default to 1).
// Only the 6* basic polyhedron is built in; anything else is rejected.
TangleExpr parse(const std::string& text);
std::string print(const TangleExpr& t);

// every integer entry negated (the mirror image diagram)
TangleExpr mirror_symbol(const TangleExpr& t);

// total crossing count of the diagram the symbol denotes
int symbol_crossings(const TangleExpr& t);

// Planar diagram of the numerator closure.
Diagram to_diagram(const TangleExpr& t);

// ----------------------------------------------------------------------
// families

struct FamilySpec {
  TangleExpr base;
  std::vector<int> selected;  // indices into the integer-entry list (preorder,
                              // zeros excluded); entries of value +-1 cannot
                              // be selected
};

enum class Parity { Any, Even };

// pointers to the substitutable integer entries of a symbol, in preorder
std::vector<const TangleExpr*> integer_entries(const TangleExpr& t);

// Member obtained by replacing entry a at each selected position by
// sgn(a)(|a| + k); k = 0 reproduces the base symbol.
TangleExpr apply_increments(const FamilySpec& spec, const std::vector<int>& ks);

// All members with every selected k ranging over 0 and 1..k_max
// (even k only when parity is Even); includes the base symbol.
std::vector<TangleExpr> family_members(const FamilySpec& spec, int k_max, Parity parity);

// ----------------------------------------------------------------------
// rational links

struct RationalClass {
  long long p = 0, q = 0;  // fraction in lowest terms, p > q >= 1
  TangleExpr symbol;       // canonical continued-fraction symbol, entry sum = n
  bool chiral = true;      // mirror diagram not isotopic (Jones comparison)
  bool mirror_listed = false;  // the mirror class has its own entry
};

// One representative per rational link type of minimal crossing number n:
// positive compositions of n with last part >= 2 read as continued
// fractions, deduplicated by q' == q^{+-1} (mod p).
std::vector<RationalClass> enumerate_rational(int n);

// continued-fraction value of a purely rational symbol (product of
// integer tangles), used to cross-check canonical symbols
std::pair<long long, long long> continued_fraction(const TangleExpr& t);

}  // namespace knotpoly
