#include "knotpoly/invariants.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "poly_dense.hpp"

namespace knotpoly {

const char* to_string(InvariantKind k) {
  switch (k) {
    case InvariantKind::Alexander: return "alexander";
    case InvariantKind::Jones: return "jones";
    case InvariantKind::Homflypt: return "homfly";
    case InvariantKind::KauffmanF: return "kauffman";
    case InvariantKind::Tutte: return "tutte";
    case InvariantKind::Khovanov: return "khovanov";
  }
  return "?";
}

LaurentPoly alexander_impl(const Diagram& d, const Orientation& o);

std::optional<InvariantKind> invariant_from_string(const std::string& name) {
  if (name == "alexander") return InvariantKind::Alexander;
  if (name == "jones") return InvariantKind::Jones;
  if (name == "homfly" || name == "homflypt") return InvariantKind::Homflypt;
  if (name == "kauffman") return InvariantKind::KauffmanF;
  if (name == "tutte") return InvariantKind::Tutte;
  if (name == "khovanov") return InvariantKind::Khovanov;
  return std::nullopt;
}

// ----------------------------------------------------------------------
// Alexander

namespace {

using detail::ZPoly;

struct ArcUf {
  std::vector<int> parent;
  explicit ArcUf(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;  // keep the smallest id as representative
  }
};

// determinant of a square matrix over Z[t] by Bareiss elimination
ZPoly zpoly_det(std::vector<std::vector<ZPoly>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return ZPoly{Int(1)};
  ZPoly prev{Int(1)};
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (detail::zis_zero(m[k][k])) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!detail::zis_zero(m[i][k])) {
          piv = i;
          break;
        }
      if (piv < 0) return {};
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        ZPoly num = detail::zsub(detail::zmul(m[i][j], m[k][k]),
                                 detail::zmul(m[i][k], m[k][j]));
        auto q = detail::zdiv_exact(num, prev);
        if (!q) throw std::logic_error("fraction-free elimination: inexact division");
        m[i][j] = std::move(*q);
      }
    prev = m[k][k];
  }
  ZPoly det = m[n - 1][n - 1];
  if (sign < 0) det = detail::zsub(ZPoly{}, det);
  return det;
}

}  // namespace

namespace {

// ordering that selects the canonical representative among the values of
// the different relative orientations of a link
bool alex_seq_less(const LaurentPoly& a, const LaurentPoly& b) {
  std::int64_t hi = 0;
  if (!a.is_zero()) hi = std::max(hi, a.max_exp_half(0));
  if (!b.is_zero()) hi = std::max(hi, b.max_exp_half(0));
  for (std::int64_t h = 0; h <= hi; h += 2) {
    Int ca = a.coeff(ExpVec{h, 0}), cb = b.coeff(ExpVec{h, 0});
    Int aa = ca < 0 ? Int(-ca) : ca, ab = cb < 0 ? Int(-cb) : cb;
    if (aa != ab) return aa < ab;
    if (ca != cb) return ca < cb;
  }
  return false;
}

}  // namespace

LaurentPoly alexander(const Diagram& d) {
  if (d.n() == 0 || !is_connected(d)) return alexander(d, {});
  int ncomp = orient(d).n_components;
  if (ncomp <= 1) return alexander(d, {});
  LaurentPoly best;
  bool have = false;
  for (unsigned mask = 0; mask < (1u << (ncomp - 1)); ++mask) {
    std::vector<bool> flip(ncomp, false);
    for (int i = 1; i < ncomp; ++i) flip[i] = (mask >> (i - 1)) & 1;
    LaurentPoly v = alexander(d, flip);
    if (!have || alex_seq_less(v, best)) {
      best = v;
      have = true;
    }
  }
  return best;
}

LaurentPoly alexander_oriented(const Diagram& d, const Orientation& o) {
  LaurentPoly zero({"x"});
  if (d.n() == 0) {
    if (d.free_loops == 1) return LaurentPoly::constant({"x"}, 1);
    return zero;
  }
  if (!is_connected(d)) return zero;
  return alexander_impl(d, o);
}

LaurentPoly alexander(const Diagram& d, const std::vector<bool>& flip) {
  LaurentPoly zero({"x"});
  if (d.n() == 0) {
    if (d.free_loops == 1) return LaurentPoly::constant({"x"}, 1);
    return zero;  // split union of unknots
  }
  if (!is_connected(d)) return zero;
  return alexander_impl(d, orient(d, flip));
}

LaurentPoly alexander_impl(const Diagram& d, const Orientation& o) {
  const int n = d.n();

  // Wirtinger strands: arcs merged through every over-pass
  ArcUf uf(d.narcs);
  for (int c = 0; c < n; ++c) {
    int od = d.crossings[c].over_diag;
    uf.unite(d.crossings[c].arcs[od], d.crossings[c].arcs[od + 2]);
  }
  std::vector<int> strand_id(d.narcs, -1);
  int nstrands = 0;
  for (int a = 0; a < d.narcs; ++a)
    if (uf.find(a) == a) strand_id[a] = nstrands++;
  if (nstrands != n) throw std::logic_error("alexander: strand count mismatch");

  auto strand = [&](int arc) { return strand_id[uf.find(arc)]; };

  const ZPoly one{Int(1)}, minus_one{Int(-1)};
  const ZPoly t{Int(0), Int(1)}, minus_t{Int(0), Int(-1)};
  const ZPoly one_minus_t{Int(1), Int(-1)}, t_minus_one{Int(-1), Int(1)};

  std::vector<std::vector<ZPoly>> m(n, std::vector<ZPoly>(n));
  for (int c = 0; c < n; ++c) {
    int od = d.crossings[c].over_diag;
    int under1 = (od + 1) % 4, under2 = (od + 3) % 4;
    int in_port = o.incoming[c][under1] ? under1 : under2;
    int out_port = in_port == under1 ? under2 : under1;
    int s_over = strand(d.crossings[c].arcs[od]);
    int s_in = strand(d.crossings[c].arcs[in_port]);
    int s_out = strand(d.crossings[c].arcs[out_port]);
    if (o.crossing_sign[c] > 0) {
      m[c][s_out] = detail::zadd(m[c][s_out], minus_one);
      m[c][s_in] = detail::zadd(m[c][s_in], t);
      m[c][s_over] = detail::zadd(m[c][s_over], one_minus_t);
    } else {
      m[c][s_out] = detail::zadd(m[c][s_out], minus_t);
      m[c][s_in] = detail::zadd(m[c][s_in], one);
      m[c][s_over] = detail::zadd(m[c][s_over], t_minus_one);
    }
  }

  // delete the last row and column
  std::vector<std::vector<ZPoly>> minor(n - 1, std::vector<ZPoly>(n - 1));
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j + 1 < n; ++j) minor[i][j] = m[i][j];
  ZPoly det = zpoly_det(std::move(minor));

  LaurentPoly p({"x"});
  for (std::size_t i = 0; i < det.size(); ++i)
    p.add_term(ExpVec{2 * static_cast<std::int64_t>(i), 0}, det[i]);
  return normalize_unit(p);
}

// ----------------------------------------------------------------------
// Kauffman bracket
//
// Smoothing conventions, ports counterclockwise and od the over diagonal:
//   A-smoothing joins (od, od+3) and (od+1, od+2)
//   B-smoothing joins (od, od+1) and (od+2, od+3)
// fixed by the curl relation <curl+> = -A^3 <K>.

namespace {

LaurentPoly bracket_delta() {
  LaurentPoly d({"A"});
  d.add_term(ExpVec{4, 0}, -1);
  d.add_term(ExpVec{-4, 0}, -1);
  return d;
}

using Matching = std::vector<int>;  // flattened sorted pairs of pending arcs

void matching_insert(Matching& m, int a, int b) {
  if (a > b) std::swap(a, b);
  std::size_t i = 0;
  while (i < m.size() && (m[i] < a || (m[i] == a && m[i + 1] < b))) i += 2;
  m.insert(m.begin() + i, {a, b});
}

int matching_take(Matching& m, int a) {
  for (std::size_t i = 0; i < m.size(); i += 2) {
    if (m[i] == a || m[i + 1] == a) {
      int other = m[i] == a ? m[i + 1] : m[i];
      m.erase(m.begin() + i, m.begin() + i + 2);
      return other;
    }
  }
  return -1;
}

bool matching_has(const Matching& m, int a) {
  return std::find(m.begin(), m.end(), a) != m.end();
}

}  // namespace

LaurentPoly bracket(const Diagram& d) {
  const LaurentPoly delta = bracket_delta();
  const LaurentPoly one = LaurentPoly::constant({"A"}, 1);
  if (d.n() == 0) {
    LaurentPoly r = one;
    for (int i = 1; i < d.free_loops; ++i) r = mul(r, delta);
    return r;
  }

  // process crossings keeping the pending frontier small
  std::vector<int> order;
  {
    std::vector<bool> done(d.n(), false);
    std::vector<char> seen(d.narcs, 0);
    for (int step = 0; step < d.n(); ++step) {
      int best = -1, best_score = -1;
      for (int c = 0; c < d.n(); ++c) {
        if (done[c]) continue;
        int score = 0;
        for (int p = 0; p < 4; ++p) score += seen[d.crossings[c].arcs[p]];
        if (score > best_score) {
          best = c;
          best_score = score;
        }
      }
      done[best] = true;
      order.push_back(best);
      for (int p = 0; p < 4; ++p) seen[d.crossings[best].arcs[p]] = 1;
    }
  }

  std::map<Matching, LaurentPoly> states{{Matching{}, one}};
  for (int c : order) {
    const auto& arcs = d.crossings[c].arcs;
    int od = d.crossings[c].over_diag;
    const std::array<std::array<int, 4>, 2> joins{{
        {arcs[od], arcs[(od + 3) % 4], arcs[(od + 1) % 4], arcs[(od + 2) % 4]},  // A
        {arcs[od], arcs[(od + 1) % 4], arcs[(od + 2) % 4], arcs[(od + 3) % 4]},  // B
    }};
    std::map<Matching, LaurentPoly> next;
    for (const auto& [match, coeff] : states) {
      for (int s = 0; s < 2; ++s) {
        Matching m = match;
        LaurentPoly val =
            mul(coeff, LaurentPoly::monomial({"A"}, ExpVec{s == 0 ? 2 : -2, 0}, 1));
        for (int j = 0; j < 2; ++j) {
          int x = joins[s][2 * j], y = joins[s][2 * j + 1];
          if (x == y) {
            val = mul(val, delta);
            continue;
          }
          int u = matching_has(m, x) ? matching_take(m, x) : x;
          int v = matching_has(m, y) ? matching_take(m, y) : y;
          if (u == v) val = mul(val, delta);
          else matching_insert(m, u, v);
        }
        auto it = next.find(m);
        if (it == next.end()) next.emplace(std::move(m), std::move(val));
        else it->second = add(it->second, val);
      }
    }
    states = std::move(next);
  }
  if (states.size() != 1 || !states.begin()->first.empty())
    throw std::logic_error("bracket: contraction left open strands");
  LaurentPoly total = states.begin()->second;
  auto q = exact_div(total, delta);
  if (!q) throw std::logic_error("bracket: loop normalization failed");
  LaurentPoly r = *q;
  for (int i = 0; i < d.free_loops; ++i) r = mul(r, delta);
  return r;
}

LaurentPoly jones(const Diagram& d) { return jones(d, orient(d)); }

LaurentPoly jones(const Diagram& d, const Orientation& o) {
  LaurentPoly br = bracket(d);
  int w = o.writhe;
  LaurentPoly r({"t"});
  int sign = (w % 2 == 0) ? 1 : -1;
  for (const auto& [e, c] : br.terms()) {
    // A-exponent e/2 shifted by -3w, then t = A^-4
    std::int64_t ea = e.h[0] / 2 - 3 * w;
    if (ea % 2 != 0) throw std::logic_error("jones: odd bracket exponent");
    r.add_term(ExpVec{-ea / 2, 0}, sign > 0 ? c : Int(-c));
  }
  return r;
}

// ----------------------------------------------------------------------
// skein engines
//
// A recursion node is a compact diagram: live crossings with canonical
// arc labels plus a count of split unknot circles.  The oriented engine
// (skein polynomial) carries strand directions through switches and
// smoothings; the regular-isotopy engines re-trace each node.

namespace {

struct SkNode {
  std::vector<std::array<int, 4>> arcs;
  std::vector<int> od;
  std::vector<std::array<bool, 4>> incoming;
  int loops = 0;

  int n() const { return static_cast<int>(arcs.size()); }

  std::string key(bool oriented) const {
    std::string s;
    s.reserve(arcs.size() * 10 + 2);
    auto push = [&](int v) {
      s.push_back(static_cast<char>(v & 0xff));
      s.push_back(static_cast<char>((v >> 8) & 0xff));
    };
    for (int c = 0; c < n(); ++c) {
      for (int p = 0; p < 4; ++p) push(arcs[c][p]);
      int flags = od[c];
      if (oriented)
        for (int p = 0; p < 4; ++p) flags |= (incoming[c][p] ? 1 : 0) << (p + 1);
      push(flags);
    }
    push(loops | 0x4000);
    return s;
  }
};

SkNode node_from_diagram(const Diagram& d, const Orientation& o) {
  SkNode s;
  s.arcs.resize(d.n());
  s.od.resize(d.n());
  s.incoming.resize(d.n());
  for (int c = 0; c < d.n(); ++c) {
    s.arcs[c] = d.crossings[c].arcs;
    s.od[c] = d.crossings[c].over_diag;
    s.incoming[c] = o.incoming[c];
  }
  s.loops = d.free_loops;
  return s;
}

int max_arc(const SkNode& s) {
  int m = -1;
  for (const auto& row : s.arcs)
    for (int a : row) m = std::max(m, a);
  return m;
}

// apply an arc union map and drop dead crossings, relabeling arcs by
// first appearance so equal nodes serialize identically
SkNode compact(const SkNode& s, const std::vector<bool>& dead, std::vector<int>& uf) {
  std::function<int(int)> find = [&](int a) -> int {
    while (uf[a] != a) a = uf[a] = uf[uf[a]];
    return a;
  };
  SkNode out;
  out.loops = s.loops;
  std::unordered_map<int, int> relabel;
  for (int c = 0; c < s.n(); ++c) {
    if (dead[c]) continue;
    std::array<int, 4> row;
    for (int p = 0; p < 4; ++p) {
      int a = find(s.arcs[c][p]);
      auto it = relabel.find(a);
      if (it == relabel.end()) it = relabel.emplace(a, static_cast<int>(relabel.size())).first;
      row[p] = it->second;
    }
    out.arcs.push_back(row);
    out.od.push_back(s.od[c]);
    out.incoming.push_back(s.incoming[c]);
  }
  return out;
}

// smooth crossing c joining the given port pairs; returns the compact node
SkNode smooth(const SkNode& s, int c, std::array<std::array<int, 2>, 2> pairs) {
  std::vector<int> uf(max_arc(s) + 1);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int a) -> int {
    while (uf[a] != a) a = uf[a] = uf[uf[a]];
    return a;
  };
  SkNode tmp = s;
  for (const auto& pr : pairs) {
    int x = find(s.arcs[c][pr[0]]), y = find(s.arcs[c][pr[1]]);
    if (x == y) ++tmp.loops;
    else uf[std::max(x, y)] = std::min(x, y);
  }
  std::vector<bool> dead(s.n(), false);
  dead[c] = true;
  return compact(tmp, dead, uf);
}

// curl sign at a crossing whose curl arc spans ports (p, p+1); follows
// from the orientation rules and is independent of strand direction
int curl_sign(int od, int p) { return ((p + od) % 2 == 0) ? -1 : 1; }

// remove all single-crossing curls, accumulating their a-exponent (only
// the regular-isotopy engines use it)
SkNode remove_curls(SkNode s, int& a_exponent) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int c = 0; c < s.n() && !changed; ++c) {
      for (int p = 0; p < 4 && !changed; ++p) {
        if (s.arcs[c][p] != s.arcs[c][(p + 1) % 4]) continue;
        a_exponent += curl_sign(s.od[c], p);
        std::vector<int> uf(max_arc(s) + 1);
        std::iota(uf.begin(), uf.end(), 0);
        int x = s.arcs[c][(p + 2) % 4], y = s.arcs[c][(p + 3) % 4];
        if (x == y) ++s.loops;
        else uf[std::max(x, y)] = std::min(x, y);
        std::vector<bool> dead(s.n(), false);
        dead[c] = true;
        s = compact(s, dead, uf);
        changed = true;
      }
    }
  }
  return s;
}

struct Trace {
  std::vector<int> arc_component;
  std::vector<int> sign;   // per crossing
  std::vector<bool> self;  // both passes on one component
  int n_components = 0;    // traced strands only
  int bad_crossing = -1;   // first crossing reached under-first
};

std::vector<std::array<std::array<int, 2>, 2>> endpoints_of(const SkNode& s) {
  int m = max_arc(s) + 1;
  std::vector<std::array<std::array<int, 2>, 2>> ends(m, {{{-1, -1}, {-1, -1}}});
  std::vector<int> cnt(m, 0);
  for (int c = 0; c < s.n(); ++c)
    for (int p = 0; p < 4; ++p) {
      int a = s.arcs[c][p];
      ends[a][cnt[a]++] = {c, p};
    }
  return ends;
}

// trace strands in arc-id order; when use_stored the stored incoming
// flags give the directions, otherwise directions are assigned and the
// flags rewritten
Trace trace(SkNode& s, bool use_stored) {
  auto ends = endpoints_of(s);
  int m = max_arc(s) + 1;
  Trace t;
  t.arc_component.assign(m, -1);
  t.sign.assign(s.n(), 0);
  t.self.assign(s.n(), false);
  std::vector<bool> visited(s.n(), false);
  if (!use_stored)
    for (auto& row : s.incoming) row = {false, false, false, false};

  for (int a0 = 0; a0 < m; ++a0) {
    if (t.arc_component[a0] >= 0) continue;
    int comp = t.n_components++;
    int arc = a0, end;
    if (use_stored) {
      const auto& e0 = ends[a0][0];
      end = s.incoming[e0[0]][e0[1]] ? 0 : 1;
    } else {
      end = 1;
    }
    int start_arc = arc, start_end = end;
    do {
      t.arc_component[arc] = comp;
      auto head = ends[arc][end];
      if (!use_stored) s.incoming[head[0]][head[1]] = true;
      if (!visited[head[0]]) {
        visited[head[0]] = true;
        bool over = (head[1] & 1) == s.od[head[0]];
        if (!over && t.bad_crossing < 0) t.bad_crossing = head[0];
      }
      int q = head[1] ^ 2;
      int b = s.arcs[head[0]][q];
      int be = (ends[b][0][0] == head[0] && ends[b][0][1] == q) ? 1 : 0;
      arc = b;
      end = be;
    } while (!(arc == start_arc && end == start_end));
  }

  for (int c = 0; c < s.n(); ++c) {
    int od = s.od[c];
    int over_in = s.incoming[c][od] ? od : od + 2;
    int under_in = s.incoming[c][(od + 1) % 4] ? (od + 1) % 4 : (od + 3) % 4;
    t.sign[c] = (under_in == (over_in + 1) % 4) ? 1 : -1;
    t.self[c] = t.arc_component[s.arcs[c][od]] ==
                t.arc_component[s.arcs[c][(od + 1) % 4]];
  }
  return t;
}

// ---- skein polynomial (oriented) ----

struct HomflyCtx {
  std::unordered_map<std::string, LaurentPoly> memo;
  LaurentPoly v2, vz, vm2, vmz, delta;
};

LaurentPoly homfly_rec(SkNode s, HomflyCtx& ctx) {
  int unused = 0;
  s = remove_curls(std::move(s), unused);
  if (s.n() == 0) {
    LaurentPoly r = LaurentPoly::constant({"v", "z"}, 1);
    for (int i = 1; i < s.loops; ++i) r = mul(r, ctx.delta);
    return r;
  }
  std::string k = s.key(true);
  if (auto it = ctx.memo.find(k); it != ctx.memo.end()) return it->second;

  Trace t = trace(s, true);
  LaurentPoly r;
  if (t.bad_crossing < 0) {
    // descending diagram: split union of unknots
    r = LaurentPoly::constant({"v", "z"}, 1);
    int c = t.n_components + s.loops;
    for (int i = 1; i < c; ++i) r = mul(r, ctx.delta);
  } else {
    int c0 = t.bad_crossing;
    SkNode switched = s;
    switched.od[c0] ^= 1;

    // orientation-respecting smoothing: each incoming port joins its
    // clockwise neighbor
    int p = -1;
    for (int q = 0; q < 4; ++q)
      if (s.incoming[c0][q] && s.incoming[c0][(q + 1) % 4]) p = q;
    if (p < 0) throw std::logic_error("homfly: inconsistent orientation at crossing");
    SkNode smoothed = smooth(
        s, c0, {{{p, (p + 3) % 4}, {(p + 1) % 4, (p + 2) % 4}}});

    LaurentPoly ps = homfly_rec(std::move(switched), ctx);
    LaurentPoly p0 = homfly_rec(std::move(smoothed), ctx);
    r = (t.sign[c0] > 0) ? add(mul(ctx.v2, ps), mul(ctx.vz, p0))
                         : add(mul(ctx.vm2, ps), mul(ctx.vmz, p0));
  }
  ctx.memo.emplace(std::move(k), r);
  return r;
}

// ---- regular-isotopy engines (Dubrovnik and Kauffman forms) ----

struct LambdaCtx {
  std::unordered_map<std::string, LaurentPoly> memo;
  LaurentPoly z, delta;
  bool dubrovnik = true;
};

LaurentPoly lambda_rec(SkNode s, LambdaCtx& ctx) {
  int a_exp = 0;
  s = remove_curls(std::move(s), a_exp);
  LaurentPoly unit = LaurentPoly::monomial({"a", "z"}, ExpVec{2 * a_exp, 0}, 1);

  if (s.n() == 0) {
    LaurentPoly r = unit;
    for (int i = 1; i < s.loops; ++i) r = mul(r, ctx.delta);
    return r;
  }
  std::string k = s.key(false);
  if (auto it = ctx.memo.find(k); it != ctx.memo.end()) return mul(unit, it->second);

  Trace t = trace(s, false);
  LaurentPoly r;
  if (t.bad_crossing < 0) {
    // descending: a^(self-writhe) * delta^(components-1)
    int sw = 0;
    for (int c = 0; c < s.n(); ++c)
      if (t.self[c]) sw += t.sign[c];
    r = LaurentPoly::monomial({"a", "z"}, ExpVec{2 * sw, 0}, 1);
    int comps = t.n_components + s.loops;
    for (int i = 1; i < comps; ++i) r = mul(r, ctx.delta);
  } else {
    int c0 = t.bad_crossing;
    int od = s.od[c0];
    SkNode switched = s;
    switched.od[c0] ^= 1;
    SkNode sa = smooth(s, c0, {{{od, (od + 3) % 4}, {(od + 1) % 4, (od + 2) % 4}}});
    SkNode sb = smooth(s, c0, {{{od, (od + 1) % 4}, {(od + 2) % 4, (od + 3) % 4}}});
    LaurentPoly psw = lambda_rec(std::move(switched), ctx);
    LaurentPoly pa = lambda_rec(std::move(sa), ctx);
    LaurentPoly pb = lambda_rec(std::move(sb), ctx);
    // Dubrovnik: switch + z*(A - B);  Kauffman form: -switch + z*(A + B)
    if (ctx.dubrovnik) r = add(psw, mul(ctx.z, sub(pa, pb)));
    else r = add(neg(psw), mul(ctx.z, add(pa, pb)));
  }
  ctx.memo.emplace(std::move(k), r);
  return mul(unit, r);
}

LaurentPoly lambda_of(const Diagram& d, bool dubrovnik_form) {
  LambdaCtx ctx;
  ctx.dubrovnik = dubrovnik_form;
  ctx.z = LaurentPoly::monomial({"a", "z"}, ExpVec{0, 2}, 1);
  LaurentPoly a = LaurentPoly::monomial({"a", "z"}, ExpVec{2, 0}, 1);
  LaurentPoly am = LaurentPoly::monomial({"a", "z"}, ExpVec{-2, 0}, 1);
  LaurentPoly one = LaurentPoly::constant({"a", "z"}, 1);
  LaurentPoly dz = *exact_div(dubrovnik_form ? sub(a, am) : add(a, am), ctx.z);
  ctx.delta = dubrovnik_form ? add(dz, one) : sub(dz, one);
  Orientation o = orient(d);
  return lambda_rec(node_from_diagram(d, o), ctx);
}

}  // namespace

LaurentPoly homfly(const Diagram& d) { return homfly(d, orient(d)); }

LaurentPoly homfly(const Diagram& d, const Orientation& o) {
  HomflyCtx ctx;
  ctx.v2 = LaurentPoly::monomial({"v", "z"}, ExpVec{4, 0}, 1);
  ctx.vz = LaurentPoly::monomial({"v", "z"}, ExpVec{2, 2}, 1);
  ctx.vm2 = LaurentPoly::monomial({"v", "z"}, ExpVec{-4, 0}, 1);
  ctx.vmz = LaurentPoly::monomial({"v", "z"}, ExpVec{-2, 2}, -1);
  LaurentPoly v = LaurentPoly::monomial({"v", "z"}, ExpVec{2, 0}, 1);
  LaurentPoly vm = LaurentPoly::monomial({"v", "z"}, ExpVec{-2, 0}, 1);
  ctx.delta = *exact_div(sub(vm, v), LaurentPoly::monomial({"v", "z"}, ExpVec{0, 2}, 1));
  return homfly_rec(node_from_diagram(d, o), ctx);
}

LaurentPoly dubrovnik(const Diagram& d) { return lambda_of(d, true); }

LaurentPoly kauffman_lambda_direct(const Diagram& d) { return lambda_of(d, false); }

LaurentPoly kauffman_f(const Diagram& d) { return kauffman_f(d, orient(d)); }

LaurentPoly kauffman_f(const Diagram& d, const Orientation& o) {
  // Kauffman-form regular-isotopy polynomial from the Dubrovnik form:
  // Lambda(a,z) = (-i)^w (-1)^(c-1) Dubrovnik(ia, -iz); then F = a^-w Lambda.
  LaurentPoly dub = dubrovnik(d);
  const int w = o.writhe, comps = o.n_components;
  LaurentPoly lam({"a", "z"});
  for (const auto& [e, c] : dub.terms()) {
    std::int64_t alpha = e.h[0] / 2, beta = e.h[1] / 2;
    std::int64_t ip = ((alpha - beta - w) % 4 + 4) % 4;
    if (ip % 2 != 0) throw std::logic_error("kauffman_f: non-real translation");
    Int nc = c;
    if (ip == 2) nc = -nc;
    if ((comps - 1) % 2 != 0) nc = -nc;
    lam.add_term(e, nc);
  }
  return mul(lam, LaurentPoly::monomial({"a", "z"}, ExpVec{-2 * w, 0}, 1));
}

// ----------------------------------------------------------------------
// Tutte

namespace {

using Graph = std::pair<int, std::vector<std::array<int, 2>>>;  // vertices, edges

std::string graph_key(const Graph& g) {
  // lexicographically minimal edge multiset over vertex relabelings for
  // small graphs, identity labeling above
  std::vector<int> perm(g.first);
  std::iota(perm.begin(), perm.end(), 0);
  auto encode = [&](const std::vector<int>& pm) {
    std::vector<std::array<int, 2>> es;
    es.reserve(g.second.size());
    for (const auto& e : g.second) {
      int u = pm[e[0]], v = pm[e[1]];
      es.push_back({std::min(u, v), std::max(u, v)});
    }
    std::sort(es.begin(), es.end());
    std::string s;
    for (const auto& e : es) {
      s.push_back(static_cast<char>(e[0]));
      s.push_back(static_cast<char>(e[1]));
    }
    s.push_back(static_cast<char>(g.first));
    return s;
  };
  if (g.first > 7) return encode(perm);
  std::string best = encode(perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::string cand = encode(perm);
    if (cand < best) best = cand;
  }
  return best;
}

LaurentPoly tutte_rec(const Graph& g, std::unordered_map<std::string, LaurentPoly>& memo) {
  if (g.second.empty()) return LaurentPoly::constant({"x", "y"}, 1);
  std::string k = graph_key(g);
  if (auto it = memo.find(k); it != memo.end()) return it->second;

  auto e = g.second.back();
  Graph rest{g.first, {g.second.begin(), g.second.end() - 1}};

  LaurentPoly r({"x", "y"});
  if (e[0] == e[1]) {
    r = mul(tutte_rec(rest, memo), LaurentPoly::monomial({"x", "y"}, ExpVec{0, 2}, 1));
  } else {
    std::vector<int> uf(g.first);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int a) -> int {
      while (uf[a] != a) a = uf[a] = uf[uf[a]];
      return a;
    };
    for (const auto& oe : rest.second) uf[find(oe[0])] = find(oe[1]);
    bool bridge = find(e[0]) != find(e[1]);

    Graph contracted{g.first - 1, {}};
    int keep = std::min(e[0], e[1]), gone = std::max(e[0], e[1]);
    for (const auto& oe : rest.second) {
      auto fix = [&](int v) {
        if (v == gone) v = keep;
        else if (v > gone) --v;
        return v;
      };
      contracted.second.push_back({fix(oe[0]), fix(oe[1])});
    }
    if (bridge) {
      r = mul(tutte_rec(contracted, memo),
              LaurentPoly::monomial({"x", "y"}, ExpVec{2, 0}, 1));
    } else {
      r = add(tutte_rec(rest, memo), tutte_rec(contracted, memo));
    }
  }
  memo.emplace(std::move(k), r);
  return r;
}

}  // namespace

LaurentPoly tutte(const CheckerboardGraph& g) {
  {
    std::vector<int> uf(std::max(g.n_vertices, 1));
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int a) -> int {
      while (uf[a] != a) a = uf[a] = uf[uf[a]];
      return a;
    };
    for (const auto& e : g.edges) uf[find(e.u)] = find(e.v);
    int comps = 0;
    for (int v = 0; v < g.n_vertices; ++v)
      if (find(v) == v) ++comps;
    if (comps > 1) throw std::invalid_argument("tutte: disconnected graph");
  }
  Graph gr{g.n_vertices, {}};
  for (const auto& e : g.edges) gr.second.push_back({e.u, e.v});
  std::unordered_map<std::string, LaurentPoly> memo;
  return tutte_rec(gr, memo);
}

}  // namespace knotpoly
