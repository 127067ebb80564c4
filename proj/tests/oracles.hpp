#pragma once

// Test-only reference implementations, kept independent of the library's
// computation paths.

#include "knotpoly/diagram.hpp"
#include "knotpoly/laurent.hpp"

namespace kptest {

// Kauffman bracket as the naive sum over all 2^n smoothing states with
// loop counting by union-find (the production code contracts a planar
// matching state map instead).
knotpoly::LaurentPoly brute_bracket(const knotpoly::Diagram& d);

}  // namespace kptest
