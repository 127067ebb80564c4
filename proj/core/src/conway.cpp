#include "knotpoly/conway.hpp"

#include "knotpoly/invariants.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace knotpoly {

// ----------------------------------------------------------------------
// parser

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool at_end() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }

  TangleExpr parse_integer() {
    skip_ws();
    std::size_t start = i;
    bool negative = false;
    if (i < s.size() && s[i] == '-') {
      negative = true;
      ++i;
    }
    std::size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) throw ParseError("expected integer", start);
    int v = std::stoi(s.substr(digits, i - digits));
    return TangleExpr::integer(negative ? -v : v);
  }

  // atoms separated by spaces form a product
  TangleExpr parse_product(const char* stops) {
    std::vector<TangleExpr> atoms;
    while (true) {
      char c = peek();
      if (c == '\0' || std::strchr(stops, c)) break;
      if (c == '(') {
        ++i;
        TangleExpr e = parse_expr(")");
        if (peek() != ')') throw ParseError("expected ')'", i);
        ++i;
        atoms.push_back(std::move(e));
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
        atoms.push_back(parse_integer());
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", i);
      }
    }
    if (atoms.empty()) throw ParseError("expected tangle", i);
    if (atoms.size() == 1) return atoms.front();
    TangleExpr p;
    p.kind = TangleExpr::Kind::Product;
    p.children = std::move(atoms);
    return p;
  }

  TangleExpr parse_expr(const char* closers) {
    std::string stops = std::string(",+") + closers;
    std::vector<TangleExpr> parts;
    parts.push_back(parse_product(stops.c_str()));
    while (peek() == ',') {
      ++i;
      parts.push_back(parse_product(stops.c_str()));
    }
    int pluses = 0;
    while (peek() == '+') {
      ++i;
      ++pluses;
    }
    if (peek() == ',') throw ParseError("'+' must end the tangle list", i);
    if (parts.size() == 1) {
      if (pluses > 0) throw ParseError("'+' requires a tangle list", i);
      return parts.front();
    }
    TangleExpr r;
    r.kind = TangleExpr::Kind::Ramification;
    r.children = std::move(parts);
    r.plus_count = pluses;
    return r;
  }

  // "N*" or "N**" prefix introduces a basic polyhedron symbol
  bool polyhedron_prefix(std::string& name) {
    skip_ws();
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i || j >= s.size() || s[j] != '*') return false;
    ++j;
    if (j < s.size() && s[j] == '*') ++j;
    name = s.substr(i, j - i);
    i = j;
    return true;
  }

  TangleExpr parse_polyhedral(const std::string& name) {
    if (name != "6*")
      throw ParseError("unknown basic polyhedron '" + name + "' (only 6* is built in)", 0);
    std::vector<TangleExpr> slots(6, TangleExpr::integer(1));
    std::size_t pos = 0;
    bool content_allowed = true;
    while (!at_end()) {
      char c = peek();
      if (c == '.') {
        ++i;
        ++pos;
        content_allowed = true;
      } else if (c == ':') {
        ++i;
        if (pos >= 2) throw ParseError("misplaced ':' in 6* symbol", i);
        pos = 2;
        content_allowed = true;
      } else {
        if (!content_allowed) throw ParseError("expected '.' or ':'", i);
        if (pos >= 6) throw ParseError("too many slots for 6*", i);
        slots[pos] = parse_expr(".:");
        content_allowed = false;
      }
    }
    if (pos >= 6) throw ParseError("too many slots for 6*", i);
    TangleExpr t;
    t.kind = TangleExpr::Kind::Polyhedral;
    t.polyhedron = "6*";
    t.children = std::move(slots);
    return t;
  }
};

}  // namespace

TangleExpr parse(const std::string& text) {
  Parser p(text);
  std::string name;
  if (p.polyhedron_prefix(name)) {
    TangleExpr t = p.parse_polyhedral(name);
    if (!p.at_end()) throw ParseError("trailing input", p.i);
    return t;
  }
  TangleExpr t = p.parse_expr("");
  if (!p.at_end()) throw ParseError("trailing input", p.i);
  return t;
}

// ----------------------------------------------------------------------
// printer

namespace {

void print_rec(const TangleExpr& t, std::string& out, bool in_product) {
  switch (t.kind) {
    case TangleExpr::Kind::Integer:
      out += std::to_string(t.value);
      break;
    case TangleExpr::Kind::Product: {
      bool parens = in_product;
      if (parens) out += '(';
      for (std::size_t k = 0; k < t.children.size(); ++k) {
        if (k) out += ' ';
        print_rec(t.children[k], out, true);
      }
      if (parens) out += ')';
      break;
    }
    case TangleExpr::Kind::Ramification: {
      out += '(';
      for (std::size_t k = 0; k < t.children.size(); ++k) {
        if (k) out += ',';
        print_rec(t.children[k], out, false);
      }
      for (int k = 0; k < t.plus_count; ++k) out += '+';
      out += ')';
      break;
    }
    case TangleExpr::Kind::Polyhedral: {
      out += t.polyhedron;
      for (std::size_t k = 0; k < t.children.size(); ++k) {
        if (k) out += '.';
        print_rec(t.children[k], out, false);
      }
      break;
    }
  }
}

}  // namespace

std::string print(const TangleExpr& t) {
  std::string out;
  if (t.kind == TangleExpr::Kind::Ramification) {
    // top-level tangle lists are written without the surrounding parens
    for (std::size_t k = 0; k < t.children.size(); ++k) {
      if (k) out += ',';
      print_rec(t.children[k], out, false);
    }
    for (int k = 0; k < t.plus_count; ++k) out += '+';
  } else {
    print_rec(t, out, false);
  }
  return out;
}

TangleExpr mirror_symbol(const TangleExpr& t) {
  TangleExpr m = t;
  if (m.kind == TangleExpr::Kind::Integer) m.value = -m.value;
  for (auto& c : m.children) c = mirror_symbol(c);
  return m;
}

int symbol_crossings(const TangleExpr& t) {
  if (t.kind == TangleExpr::Kind::Integer) return std::abs(t.value);
  int n = t.plus_count;
  for (const auto& c : t.children) n += symbol_crossings(c);
  return n;
}

std::vector<const TangleExpr*> integer_entries(const TangleExpr& t) {
  std::vector<const TangleExpr*> out;
  if (t.kind == TangleExpr::Kind::Integer) {
    if (t.value != 0) out.push_back(&t);
    return out;
  }
  for (const auto& c : t.children) {
    auto sub = integer_entries(c);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

// ----------------------------------------------------------------------
// tangle assembly
//
// A tangle under construction is a set of crossings plus a symmetric
// matching `conn` on terminals: crossing ports are 4c+p, negative ids are
// boundary sentinels.  The four live sentinels are listed in bnd as
// NW, NE, SE, SW.  Fusing two sentinels joins their strands; a strand
// joined to itself closes into a free loop.

namespace {

struct TD {
  std::vector<int> od;  // over_diag per crossing
  std::map<long, long> conn;
  std::array<long, 4> bnd{0, 0, 0, 0};  // NW, NE, SE, SW
  int loops = 0;
  long next_sentinel = -1;

  long fresh() { return next_sentinel--; }
  void link(long a, long b) {
    conn[a] = b;
    conn[b] = a;
  }
  void fuse(long u, long v) {
    long xu = conn.at(u), xv = conn.at(v);
    conn.erase(u);
    conn.erase(v);
    if (xu == v) {
      ++loops;  // the two ends belonged to one strand
      return;
    }
    conn.erase(xu);
    conn.erase(xv);
    link(xu, xv);
  }
};

constexpr int NW = 0, NE = 1, SE = 2, SW = 3;

long port(int c, int p) { return 4L * c + p; }

// horizontal row of |n| crossings; ports counterclockwise are
// 0 = SW, 1 = SE, 2 = NE, 3 = NW; positive twists carry the over-strand
// on the {1,3} diagonal, which makes all-positive torus symbols come out
// with positive writhe
TD make_int(int n) {
  TD t;
  if (n == 0) {
    long a = t.fresh(), b = t.fresh(), c = t.fresh(), d = t.fresh();
    t.bnd = {a, b, c, d};
    t.link(a, b);  // NW - NE
    t.link(d, c);  // SW - SE
    return t;
  }
  int k = std::abs(n);
  t.od.assign(k, n > 0 ? 1 : 0);
  for (int i = 0; i + 1 < k; ++i) {
    t.link(port(i, 2), port(i + 1, 3));
    t.link(port(i, 1), port(i + 1, 0));
  }
  long nw = t.fresh(), ne = t.fresh(), se = t.fresh(), sw = t.fresh();
  t.bnd = {nw, ne, se, sw};
  t.link(nw, port(0, 3));
  t.link(sw, port(0, 0));
  t.link(ne, port(k - 1, 2));
  t.link(se, port(k - 1, 1));
  return t;
}

// merge b into a, relabeling b's crossings and sentinels
void merge(TD& a, TD& b) {
  long coff = static_cast<long>(a.od.size());
  std::map<long, long> relabel;
  auto tr = [&](long x) {
    if (x >= 0) return x + 4 * coff;
    auto it = relabel.find(x);
    if (it != relabel.end()) return it->second;
    long f = a.fresh();
    relabel[x] = f;
    return f;
  };
  for (int v : b.od) a.od.push_back(v);
  for (const auto& [u, v] : b.conn)
    if (u < v) a.link(tr(u), tr(v));
  for (int k = 0; k < 4; ++k) b.bnd[k] = tr(b.bnd[k]);
  a.loops += b.loops;
}

// horizontal juxtaposition
TD sum(TD a, TD b) {
  merge(a, b);
  a.fuse(a.bnd[NE], b.bnd[NW]);
  a.fuse(a.bnd[SE], b.bnd[SW]);
  a.bnd = {a.bnd[NW], b.bnd[NE], b.bnd[SE], a.bnd[SW]};
  return a;
}

// reflection in the NW-SE diagonal: reverses the planar cyclic order of
// every crossing (ports 1 and 3 swap) and exchanges the NE/SW corners.
// This is the Conway turn: product t u reads as (turn t) + u and a
// tangle list (t1,...,tk) as (turn t1) + ... + (turn tk).
TD conway_turn(TD t) {
  std::map<long, long> nc;
  auto tr = [](long x) {
    if (x < 0) return x;
    long p = x & 3;
    if (p == 1 || p == 3) x ^= 2;  // 1 <-> 3
    return x;
  };
  for (const auto& [u, v] : t.conn) nc[tr(u)] = tr(v);
  t.conn = std::move(nc);
  std::swap(t.bnd[NE], t.bnd[SW]);
  return t;
}

TD build_tangle(const TangleExpr& t);

TD build_product(const std::vector<TangleExpr>& children) {
  TD acc = build_tangle(children.front());
  for (std::size_t k = 1; k < children.size(); ++k)
    acc = sum(conway_turn(std::move(acc)), build_tangle(children[k]));
  return acc;
}

TD build_ramification(const TangleExpr& t) {
  TD acc = conway_turn(build_tangle(t.children.front()));
  for (std::size_t k = 1; k < t.children.size(); ++k)
    acc = sum(std::move(acc), conway_turn(build_tangle(t.children[k])));
  for (int k = 0; k < t.plus_count; ++k)
    acc = sum(std::move(acc), conway_turn(make_int(1)));
  return acc;
}

TD build_tangle(const TangleExpr& t) {
  switch (t.kind) {
    case TangleExpr::Kind::Integer:
      return make_int(t.value);
    case TangleExpr::Kind::Product:
      return build_product(t.children);
    case TangleExpr::Kind::Ramification:
      return build_ramification(t);
    case TangleExpr::Kind::Polyhedral:
      throw std::invalid_argument("basic polyhedron cannot appear inside a tangle");
  }
  throw std::logic_error("unreachable");
}

Diagram finish(TD t) {
  Diagram d;
  d.free_loops = t.loops;
  d.crossings.resize(t.od.size());
  for (std::size_t c = 0; c < t.od.size(); ++c) d.crossings[c].over_diag = t.od[c];
  int arc = 0;
  for (const auto& [u, v] : t.conn) {
    if (u > v) continue;
    if (u < 0 || v < 0) throw std::logic_error("finish: open boundary remains");
    d.crossings[u / 4].arcs[u % 4] = arc;
    d.crossings[v / 4].arcs[v % 4] = arc;
    ++arc;
  }
  d.narcs = arc;
  return d;
}

Diagram numerator_closure(TD t) {
  t.fuse(t.bnd[NW], t.bnd[NE]);
  t.fuse(t.bnd[SW], t.bnd[SE]);
  return finish(std::move(t));
}

// 6* basic polyhedron: the octahedron drawn as a hexagon 0..5 with short
// diagonals, ring edges (i,i+1), inner diagonals (0,2)(2,4)(4,0) and
// outer diagonals (1,3)(3,5)(5,1).  Each vertex attaches its substituted
// tangle through a fixed dihedral placement (low two bits rotate the
// corner cycle, bit 2 reflects it); the table below realizes the usual
// drawing: the all-ones filling is the alternating 3-component
// 6-crossing link and all-positive fillings stay alternating.
constexpr std::array<int, 6> kSlotAttach{1, 0, 1, 4, 1, 0};

Diagram polyhedral_diagram(const std::vector<TangleExpr>& slots) {
  std::array<std::array<int, 4>, 6> ccw_nbr;
  for (int v = 0; v < 6; ++v) {
    if (v % 2 == 0)
      ccw_nbr[v] = {(v + 1) % 6, (v + 2) % 6, (v + 4) % 6, (v + 5) % 6};
    else
      ccw_nbr[v] = {(v + 2) % 6, (v + 1) % 6, (v + 5) % 6, (v + 4) % 6};
  }

  TD all;
  std::array<std::array<long, 4>, 6> bnd;
  for (int v = 0; v < 6; ++v) {
    TD s = build_tangle(slots[v]);
    merge(all, s);
    bnd[v] = s.bnd;
  }

  // corners counterclockwise: NW, SW, SE, NE
  constexpr std::array<int, 4> ccw_corner{NW, SW, SE, NE};
  constexpr std::array<int, 4> cw_corner{NW, NE, SE, SW};
  auto corner = [&](int v, int slot) {
    int r = kSlotAttach[v] & 3;
    const auto& order = (kSlotAttach[v] & 4) ? cw_corner : ccw_corner;
    return bnd[v][order[(slot + r) % 4]];
  };
  auto slot_of = [&](int v, int nbr) {
    for (int k = 0; k < 4; ++k)
      if (ccw_nbr[v][k] == nbr) return k;
    throw std::logic_error("polyhedral template: missing edge");
  };

  for (int v = 0; v < 6; ++v)
    for (int k = 0; k < 4; ++k) {
      int w = ccw_nbr[v][k];
      if (w < v) continue;  // each edge fused once
      all.fuse(corner(v, k), corner(w, slot_of(w, v)));
    }
  return finish(std::move(all));
}

}  // namespace

Diagram to_diagram(const TangleExpr& t) {
  if (t.kind == TangleExpr::Kind::Polyhedral) return polyhedral_diagram(t.children);
  return numerator_closure(build_tangle(t));
}

// ----------------------------------------------------------------------
// families

TangleExpr apply_increments(const FamilySpec& spec, const std::vector<int>& ks) {
  if (ks.size() != spec.selected.size())
    throw std::invalid_argument("apply_increments: one k per selected position");
  auto entries = integer_entries(spec.base);
  for (int pos : spec.selected) {
    if (pos < 0 || pos >= static_cast<int>(entries.size()))
      throw std::invalid_argument("selected position out of range");
    if (std::abs(entries[pos]->value) == 1)
      throw std::invalid_argument("entries of value +-1 cannot be selected");
  }
  TangleExpr out = spec.base;
  // rebuild the entry list over the copy; preorder is stable
  std::vector<TangleExpr*> mut;
  auto collect = [&](auto&& self, TangleExpr& t) -> void {
    if (t.kind == TangleExpr::Kind::Integer) {
      if (t.value != 0) mut.push_back(&t);
      return;
    }
    for (auto& c : t.children) self(self, c);
  };
  collect(collect, out);
  for (std::size_t k = 0; k < spec.selected.size(); ++k) {
    TangleExpr* e = mut[spec.selected[k]];
    int s = e->value > 0 ? 1 : -1;
    e->value = s * (std::abs(e->value) + ks[k]);
  }
  return out;
}

std::vector<TangleExpr> family_members(const FamilySpec& spec, int k_max, Parity parity) {
  std::vector<int> choices{0};
  for (int k = 1; k <= k_max; ++k)
    if (parity == Parity::Any || k % 2 == 0) choices.push_back(k);

  std::vector<TangleExpr> out;
  std::vector<int> ks(spec.selected.size(), 0);
  auto rec = [&](auto&& self, std::size_t at) -> void {
    if (at == ks.size()) {
      std::vector<int> k(ks.begin(), ks.end());
      out.push_back(apply_increments(spec, k));
      return;
    }
    for (int c : choices) {
      ks[at] = c;
      self(self, at + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// ----------------------------------------------------------------------
// rational links

namespace {

long long mod_inverse(long long a, long long m) {
  long long t = 0, nt = 1, r = m, nr = a % m;
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::logic_error("mod_inverse: not coprime");
  return t < 0 ? t + m : t;
}

}  // namespace

std::pair<long long, long long> continued_fraction(const TangleExpr& t) {
  std::vector<int> entries;
  if (t.kind == TangleExpr::Kind::Integer) {
    entries.push_back(t.value);
  } else if (t.kind == TangleExpr::Kind::Product) {
    for (const auto& c : t.children) {
      if (c.kind != TangleExpr::Kind::Integer)
        throw std::invalid_argument("continued_fraction: not a rational symbol");
      entries.push_back(c.value);
    }
  } else {
    throw std::invalid_argument("continued_fraction: not a rational symbol");
  }
  for (int e : entries)
    if (e <= 0) throw std::invalid_argument("continued_fraction: entries must be positive");
  long long p = entries[0], q = 1;
  for (std::size_t k = 1; k < entries.size(); ++k) {
    long long np = entries[k] * p + q;
    q = p;
    p = np;
  }
  return {p, q};
}

std::vector<RationalClass> enumerate_rational(int n) {
  if (n < 2) throw std::invalid_argument("enumerate_rational: n must be at least 2");

  std::map<std::pair<long long, long long>, RationalClass> classes;

  std::vector<int> comp;
  auto emit = [&]() {
    if (comp.back() < 2) return;
    long long p = comp[0], q = 1;
    for (std::size_t k = 1; k < comp.size(); ++k) {
      long long np = comp[k] * p + q;
      q = p;
      p = np;
    }
    long long qinv = mod_inverse(q, p);
    long long qstar = std::min(q, qinv);
    auto key = std::make_pair(p, qstar);
    if (classes.count(key)) return;

    RationalClass rc;
    rc.p = p;
    rc.q = qstar;

    // canonical symbol: Euclid continued fraction digits of p/qstar,
    // innermost entry first
    std::vector<int> digits;
    long long a = p, b = qstar;
    while (b > 0) {
      digits.push_back(static_cast<int>(a / b));
      long long r = a % b;
      a = b;
      b = r;
    }
    std::reverse(digits.begin(), digits.end());
    if (digits.size() == 1) {
      rc.symbol = TangleExpr::integer(digits[0]);
    } else {
      rc.symbol.kind = TangleExpr::Kind::Product;
      for (int dgt : digits) rc.symbol.children.push_back(TangleExpr::integer(dgt));
    }
    classes.emplace(key, std::move(rc));
  };

  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      emit();
      return;
    }
    for (int part = 1; part <= rest; ++part) {
      comp.push_back(part);
      self(self, rest - part);
      comp.pop_back();
    }
  };
  rec(rec, n);

  // chirality by invariant comparison: a class is amphichiral when the
  // Jones values of the diagram and its mirror agree over all relative
  // component orientations (unit-normalized)
  auto jones_profile = [](const Diagram& d) {
    Orientation o = orient(d);
    int ncomp = o.n_components;
    std::set<std::string> vals;
    for (unsigned m = 0; m < (1u << (ncomp - 1)); ++m) {
      std::vector<bool> flip(ncomp, false);
      for (int i = 1; i < ncomp; ++i) flip[i] = (m >> (i - 1)) & 1;
      vals.insert(serialize(normalize_unit(jones(d, orient(d, flip)))));
    }
    return vals;
  };
  for (auto& [key, rc] : classes) {
    Diagram d = to_diagram(rc.symbol);
    rc.chiral = jones_profile(d) != jones_profile(mirror(d));
    long long qm = rc.p - rc.q;
    long long qmi = mod_inverse(qm, rc.p);
    rc.mirror_listed =
        classes.count({rc.p, std::min(qm, qmi)}) > 0 &&
        std::min(qm, qmi) != rc.q;
  }

  std::vector<RationalClass> out;
  for (auto& [key, rc] : classes) out.push_back(std::move(rc));
  return out;
}

}  // namespace knotpoly
