#include "oracles.hpp"

#include <numeric>
#include <vector>

namespace kptest {

using namespace knotpoly;

LaurentPoly brute_bracket(const Diagram& d) {
  LaurentPoly delta({"A"});
  delta.add_term(ExpVec{4, 0}, -1);
  delta.add_term(ExpVec{-4, 0}, -1);

  const int n = d.n();
  LaurentPoly total({"A"});
  for (unsigned state = 0; state < (1u << n); ++state) {
    std::vector<int> uf(d.narcs);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int a) {
      while (uf[a] != a) a = uf[a] = uf[uf[a]];
      return a;
    };
    int loops = d.free_loops;
    int exponent = 0;
    for (int c = 0; c < n; ++c) {
      const auto& arcs = d.crossings[c].arcs;
      int od = d.crossings[c].over_diag;
      bool a_smooth = ((state >> c) & 1) == 0;
      exponent += a_smooth ? 1 : -1;
      // A joins (od, od+3) and (od+1, od+2); B joins (od, od+1) and (od+2, od+3)
      int pairs[2][2];
      if (a_smooth) {
        pairs[0][0] = arcs[od % 4];
        pairs[0][1] = arcs[(od + 3) % 4];
        pairs[1][0] = arcs[(od + 1) % 4];
        pairs[1][1] = arcs[(od + 2) % 4];
      } else {
        pairs[0][0] = arcs[od % 4];
        pairs[0][1] = arcs[(od + 1) % 4];
        pairs[1][0] = arcs[(od + 2) % 4];
        pairs[1][1] = arcs[(od + 3) % 4];
      }
      for (auto& pr : pairs) {
        int x = find(pr[0]), y = find(pr[1]);
        if (x == y) ++loops;
        else uf[std::max(x, y)] = std::min(x, y);
      }
    }
    LaurentPoly term = LaurentPoly::monomial({"A"}, ExpVec{2 * exponent, 0}, 1);
    for (int i = 1; i < loops; ++i) term = mul(term, delta);
    total = add(total, term);
  }
  if (n == 0) {
    LaurentPoly r = LaurentPoly::constant({"A"}, 1);
    for (int i = 1; i < d.free_loops; ++i) r = mul(r, delta);
    return r;
  }
  return total;
}

}  // namespace kptest
