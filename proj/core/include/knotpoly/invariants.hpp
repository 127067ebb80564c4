#pragma once

#include <optional>
#include <string>

#include "knotpoly/diagram.hpp"
#include "knotpoly/laurent.hpp"

namespace knotpoly {

enum class InvariantKind { Alexander, Jones, Homflypt, KauffmanF, Tutte, Khovanov };

const char* to_string(InvariantKind k);
std::optional<InvariantKind> invariant_from_string(const std::string& name);

// Alexander polynomial in "x" from the crossing/arc matrix: rows are
// crossings, columns are Wirtinger strands, entries in {+-1, +-t, 1-t,
// t-1}; one row and one column deleted, exact determinant by fraction-free
// elimination, then unit-normalized.  Split diagrams give 0.  Links are
// orientation-sensitive, so the value reported is the canonical
// representative over all relative component orientations: the one whose
// coefficient sequence (|c|, then c, from the constant term up) is
// smallest.  This reproduces every printed reference value used in the
// test suites.
LaurentPoly alexander(const Diagram& d);
// fixed-orientation variants
LaurentPoly alexander(const Diagram& d, const std::vector<bool>& flip);
LaurentPoly alexander_oriented(const Diagram& d, const Orientation& o);

// Kauffman bracket in "A" by sequential crossing contraction over a
// planar-matching state map; loop value -A^2 - A^-2, empty diagram 1.
LaurentPoly bracket(const Diagram& d);

// (-A)^(-3w) * bracket, re-expressed in t = A^-4 ("t", half-integer
// exponents for even-component links)
LaurentPoly jones(const Diagram& d);
LaurentPoly jones(const Diagram& d, const Orientation& o);

// Skein polynomial in ("v","z") with v^-1 P(L+) - v P(L-) = z P(L0) and
// P(unknot) = 1, computed by descending-diagram recursion with
// memoization; descending diagrams evaluate to ((v^-1 - v)/z)^(c-1).
LaurentPoly homfly(const Diagram& d);
LaurentPoly homfly(const Diagram& d, const Orientation& o);

// Kauffman two-variable polynomial F in ("a","z"): the regular-isotopy
// polynomial is computed in Dubrovnik form and translated, then
// normalized by a^(-writhe).
LaurentPoly kauffman_f(const Diagram& d);
LaurentPoly kauffman_f(const Diagram& d, const Orientation& o);
// regular-isotopy Dubrovnik polynomial (exposed for tests)
LaurentPoly dubrovnik(const Diagram& d);
// direct Kauffman-form regular-isotopy polynomial (cross-check route)
LaurentPoly kauffman_lambda_direct(const Diagram& d);

// Tutte polynomial in ("x","y") by deletion-contraction with bridge
// factor x and loop factor y; rejects disconnected graphs.
LaurentPoly tutte(const CheckerboardGraph& g);

}  // namespace knotpoly
