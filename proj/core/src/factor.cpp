#include "knotpoly/factor.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "poly_dense.hpp"

namespace knotpoly {

namespace {

using detail::ZPoly;
using detail::zdeg;
using detail::zdiv_exact;
using detail::zgcd;
using detail::zmul;
using detail::znormalize;

// ---------------------------------------------------------------------
// arithmetic modulo a small prime (coefficients as uint64, p < 2^31)
// ---------------------------------------------------------------------

using PPoly = std::vector<std::uint64_t>;

void pnormalize(PPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int pdeg(const PPoly& f) { return static_cast<int>(f.size()) - 1; }

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p),
               nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

PPoly pmul(const PPoly& a, const PPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  pnormalize(r);
  return r;
}

// division with remainder; b nonzero
void pdivmod(const PPoly& a, const PPoly& b, std::uint64_t p, PPoly& q, PPoly& rem) {
  rem = a;
  q.clear();
  if (rem.size() >= b.size()) q.assign(rem.size() - b.size() + 1, 0);
  std::uint64_t li = inv_mod(b.back(), p);
  while (!rem.empty() && rem.size() >= b.size()) {
    std::uint64_t c = rem.back() * li % p;
    std::size_t shift = rem.size() - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j)
      rem[shift + j] = (rem[shift + j] + p * p - c * b[j] % p) % p;
    pnormalize(rem);
  }
  pnormalize(q);
}

PPoly pmod(const PPoly& a, const PPoly& b, std::uint64_t p) {
  PPoly q, r;
  pdivmod(a, b, p, q, r);
  return r;
}

PPoly pmonic(PPoly f, std::uint64_t p) {
  if (f.empty()) return f;
  std::uint64_t li = inv_mod(f.back(), p);
  for (auto& c : f) c = c * li % p;
  return f;
}

PPoly pgcd(PPoly a, PPoly b, std::uint64_t p) {
  while (!b.empty()) {
    PPoly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(std::move(a), p);
}

PPoly pderiv(const PPoly& f, std::uint64_t p) {
  if (f.size() <= 1) return {};
  PPoly r(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * (i % p) % p;
  pnormalize(r);
  return r;
}

PPoly psub_scalar(PPoly f, std::uint64_t s, std::uint64_t p) {
  s %= p;
  if (s == 0) return f;
  if (f.empty()) f.push_back(0);
  f[0] = (f[0] + p - s) % p;
  pnormalize(f);
  return f;
}

PPoly reduce_mod_p(const ZPoly& f, std::uint64_t p) {
  PPoly r(f.size());
  Int pp(p);
  for (std::size_t i = 0; i < f.size(); ++i) {
    Int c = f[i] % pp;
    if (c < 0) c += pp;
    r[i] = c.convert_to<std::uint64_t>();
  }
  pnormalize(r);
  return r;
}

// extended euclid: s*g + t*h = 1 for coprime g, h
void pbezout(const PPoly& g, const PPoly& h, std::uint64_t p, PPoly& s, PPoly& t) {
  PPoly r0 = g, r1 = h;
  PPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    PPoly q, rem;
    pdivmod(r0, r1, p, q, rem);
    auto step = [&](PPoly& a0, PPoly& a1) {
      PPoly qa1 = pmul(q, a1, p);
      PPoly nxt(std::max(a0.size(), qa1.size()), 0);
      for (std::size_t i = 0; i < a0.size(); ++i) nxt[i] = a0[i];
      for (std::size_t i = 0; i < qa1.size(); ++i) nxt[i] = (nxt[i] + p - qa1[i]) % p;
      pnormalize(nxt);
      a0 = std::move(a1);
      a1 = std::move(nxt);
    };
    step(s0, s1);
    step(t0, t1);
    r0 = std::move(r1);
    r1 = std::move(rem);
  }
  if (pdeg(r0) != 0) throw std::logic_error("pbezout: inputs not coprime");
  std::uint64_t li = inv_mod(r0[0], p);
  for (auto& c : s0) c = c * li % p;
  for (auto& c : t0) c = c * li % p;
  s = std::move(s0);
  t = std::move(t0);
}

// ---------------------------------------------------------------------
// Berlekamp factorization of a monic square-free polynomial mod p
// ---------------------------------------------------------------------

std::vector<PPoly> berlekamp(const PPoly& f, std::uint64_t p) {
  int n = pdeg(f);
  if (n <= 1) return {f};

  // x^p mod f
  PPoly xp;
  {
    PPoly acc{1}, base{0, 1};
    std::uint64_t e = p;
    while (e) {
      if (e & 1) acc = pmod(pmul(acc, base, p), f, p);
      e >>= 1;
      if (e) base = pmod(pmul(base, base, p), f, p);
    }
    xp = std::move(acc);
  }

  // rows of Q: row i = x^{p*i} mod f
  std::vector<PPoly> rows(n);
  rows[0] = PPoly{1};
  for (int i = 1; i < n; ++i) rows[i] = pmod(pmul(rows[i - 1], xp, p), f, p);

  // right nullspace of (Q - I)^T
  std::vector<std::vector<std::uint64_t>> N(n, std::vector<std::uint64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < static_cast<int>(rows[i].size()); ++j) N[j][i] = rows[i][j];
    N[i][i] = (N[i][i] + p - 1) % p;
  }

  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int row = rank; row < n; ++row)
      if (N[row][col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0) continue;
    std::swap(N[piv], N[rank]);
    std::uint64_t li = inv_mod(N[rank][col], p);
    for (int j = 0; j < n; ++j) N[rank][j] = N[rank][j] * li % p;
    for (int row = 0; row < n; ++row) {
      if (row == rank || N[row][col] == 0) continue;
      std::uint64_t c = N[row][col];
      for (int j = 0; j < n; ++j) N[row][j] = (N[row][j] + p * p - c * N[rank][j] % p) % p;
    }
    pivot_col.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<PPoly> basis;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    PPoly v(n, 0);
    v[col] = 1;
    for (int i = 0; i < rank; ++i)
      if (N[i][col] != 0) v[pivot_col[i]] = p - N[i][col];
    pnormalize(v);
    basis.push_back(std::move(v));
  }

  const std::size_t r = basis.size();
  std::vector<PPoly> factors{f};
  for (const auto& v : basis) {
    if (factors.size() >= r) break;
    if (pdeg(v) < 1) continue;
    for (std::size_t fi = 0; fi < factors.size() && factors.size() < r; ++fi) {
      while (pdeg(factors[fi]) > 1) {
        PPoly vr = pmod(v, factors[fi], p);
        if (pdeg(vr) < 1) break;
        bool split = false;
        for (std::uint64_t s = 0; s < p; ++s) {
          PPoly d = pgcd(factors[fi], psub_scalar(vr, s, p), p);
          if (pdeg(d) > 0 && pdeg(d) < pdeg(factors[fi])) {
            PPoly q, rem;
            pdivmod(factors[fi], d, p, q, rem);
            factors[fi] = pmonic(std::move(q), p);
            factors.push_back(std::move(d));
            split = true;
            break;
          }
        }
        if (!split || factors.size() >= r) break;
      }
    }
  }
  return factors;
}

// ---------------------------------------------------------------------
// Hensel lifting (coefficients reduced into [0, m))
// ---------------------------------------------------------------------

ZPoly mreduce(ZPoly f, const Int& m) {
  for (auto& c : f) {
    c %= m;
    if (c < 0) c += m;
  }
  znormalize(f);
  return f;
}

ZPoly madd(const ZPoly& a, const ZPoly& b, const Int& m) {
  return mreduce(detail::zadd(a, b), m);
}

ZPoly msub(const ZPoly& a, const ZPoly& b, const Int& m) {
  return mreduce(detail::zsub(a, b), m);
}

ZPoly mmul(const ZPoly& a, const ZPoly& b, const Int& m) {
  return mreduce(zmul(a, b), m);
}

// division by a monic polynomial, coefficients mod m
void mdivmod_monic(const ZPoly& a, const ZPoly& b, const Int& m, ZPoly& q, ZPoly& rem) {
  rem = a;
  q.clear();
  if (rem.size() >= b.size()) q.assign(rem.size() - b.size() + 1, Int(0));
  while (!rem.empty() && rem.size() >= b.size()) {
    Int c = rem.back();
    std::size_t shift = rem.size() - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      rem[shift + j] -= c * b[j];
      rem[shift + j] %= m;
      if (rem[shift + j] < 0) rem[shift + j] += m;
    }
    znormalize(rem);
  }
  znormalize(q);
}

ZPoly from_ppoly(const PPoly& f) {
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = Int(f[i]);
  return r;
}

// One quadratic Hensel step: from f = g*h (mod m), s*g + t*h = 1 (mod m),
// h monic, to the same data mod m*m.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& m) {
  Int m2 = m * m;
  ZPoly e = msub(mreduce(f, m2), mmul(g, h, m2), m2);
  ZPoly q, r;
  mdivmod_monic(mmul(s, e, m2), h, m2, q, r);
  ZPoly gstar = madd(g, madd(mmul(t, e, m2), mmul(q, g, m2), m2), m2);
  ZPoly hstar = madd(h, r, m2);
  ZPoly b = msub(madd(mmul(s, gstar, m2), mmul(t, hstar, m2), m2),
                 ZPoly{Int(1)}, m2);
  ZPoly c, d;
  mdivmod_monic(mmul(s, b, m2), hstar, m2, c, d);
  ZPoly sstar = msub(s, d, m2);
  ZPoly tstar = msub(t, madd(mmul(t, b, m2), mmul(c, gstar, m2), m2), m2);
  g = std::move(gstar);
  h = std::move(hstar);
  s = std::move(sstar);
  t = std::move(tstar);
}

// Lift the factor list of F (given mod P, p does not divide lc(F)) from
// mod p to mod P: returns monic factors mod P multiplying to F/lc(F).
std::vector<ZPoly> lift_list(const ZPoly& F, const std::vector<PPoly>& gs,
                             std::uint64_t p, const Int& P) {
  if (gs.size() == 1) {
    // monic version of F mod P: lc(F) is invertible mod P = p^k
    ZPoly f = mreduce(F, P);
    Int lc = f.back();
    // modular inverse via extended euclid on cpp_int
    Int t = 0, nt = 1, r = P, nr = lc % P;
    while (nr != 0) {
      Int q = r / nr;
      Int tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (r != 1) throw std::logic_error("lift_list: leading coefficient not invertible");
    if (t < 0) t += P;
    for (auto& c : f) {
      c = c * t % P;
      if (c < 0) c += P;
    }
    znormalize(f);
    return {f};
  }

  std::size_t half = gs.size() / 2;
  std::vector<PPoly> left(gs.begin(), gs.begin() + half);
  std::vector<PPoly> right(gs.begin() + half, gs.end());

  Int lcF = F.back();
  PPoly G0{static_cast<std::uint64_t>(((lcF % Int(p)) + Int(p)).convert_to<std::uint64_t>() % p)};
  for (const auto& g : left) G0 = pmul(G0, g, p);
  PPoly H0{1};
  for (const auto& g : right) H0 = pmul(H0, g, p);

  PPoly s0, t0;
  pbezout(G0, H0, p, s0, t0);

  ZPoly G = from_ppoly(G0), H = from_ppoly(H0);
  ZPoly S = from_ppoly(s0), T = from_ppoly(t0);
  Int m(p);
  while (m < P) {
    hensel_step(F, G, H, S, T, m);
    m *= m;
  }
  G = mreduce(G, P);
  H = mreduce(H, P);

  auto out = lift_list(G, left, p, P);
  auto rhs = lift_list(H, right, p, P);
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

// ---------------------------------------------------------------------
// Zassenhaus over the integers
// ---------------------------------------------------------------------

Int sym_mod(Int c, const Int& P) {
  c %= P;
  if (c < 0) c += P;
  if (c * 2 > P) c -= P;
  return c;
}

ZPoly sym_reduce(ZPoly f, const Int& P) {
  for (auto& c : f) c = sym_mod(c, P);
  znormalize(f);
  return f;
}

ZPoly primitive_part(ZPoly f) {
  Int c = detail::zcontent(f);
  if (c > 1)
    for (auto& x : f) x /= c;
  if (!f.empty() && f.back() < 0)
    for (auto& x : f) x = -x;
  return f;
}

Int max_abs_coeff(const ZPoly& f) {
  Int m = 0;
  for (const auto& c : f) {
    Int a = c < 0 ? Int(-c) : c;
    if (a > m) m = a;
  }
  return m;
}

struct FactorBudget {
  std::size_t max_modular_factors = SIZE_MAX;
  std::uint64_t max_candidates = UINT64_MAX;
};

struct BudgetExceeded {};

// Prime selection: smallest prime dividing neither the leading nor the
// trailing coefficient with a square-free image; the next primes are
// scanned only when the first choice leaves an impractically large
// modular factor count.
struct ModularChoice {
  std::uint64_t p = 0;
  std::vector<PPoly> factors;
};

bool prime_valid(const ZPoly& f, std::uint64_t p) {
  Int pp(p);
  if (f.back() % pp == 0) return false;
  if (f.front() % pp == 0) return false;
  PPoly fb = reduce_mod_p(f, p);
  PPoly g = pgcd(fb, pderiv(fb, p), p);
  return pdeg(g) == 0;
}

std::uint64_t next_prime(std::uint64_t n) {
  auto is_prime = [](std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  };
  do {
    ++n;
  } while (!is_prime(n));
  return n;
}

ModularChoice choose_prime(const ZPoly& f) {
  ModularChoice best;
  std::uint64_t p = 1;
  int tried = 0;
  while (tried < 8) {
    p = next_prime(p);
    if (p > 100000) break;
    if (!prime_valid(f, p)) continue;
    ++tried;
    PPoly fb = pmonic(reduce_mod_p(f, p), p);
    std::vector<PPoly> fac = berlekamp(fb, p);
    if (best.p == 0 || fac.size() < best.factors.size()) {
      best.p = p;
      best.factors = std::move(fac);
    }
    // the spec rule: first valid prime, unless the factor count makes
    // subset recombination impractical
    if (best.factors.size() <= 18) break;
  }
  if (best.p == 0) throw std::logic_error("no usable prime found");
  return best;
}

// All integer irreducible factors of a primitive square-free polynomial
// with positive leading coefficient, deg >= 1.
std::vector<ZPoly> factor_squarefree_z(ZPoly f, const FactorBudget& budget) {
  std::vector<ZPoly> out;
  if (zdeg(f) == 1) {
    out.push_back(std::move(f));
    return out;
  }

  ModularChoice mc = choose_prime(f);
  const std::uint64_t p = mc.p;
  std::vector<PPoly> modf = std::move(mc.factors);
  if (modf.size() == 1) {
    out.push_back(std::move(f));
    return out;
  }
  if (modf.size() > budget.max_modular_factors) throw BudgetExceeded{};

  // lift bound: factors of f have coefficients below sqrt(n+1)*2^n*A*|lc|
  const int n = zdeg(f);
  Int A = max_abs_coeff(f);
  Int B = boost::multiprecision::sqrt(Int(n + 1)) + 1;
  B = B * (Int(1) << n) * A * boost::multiprecision::abs(f.back());
  Int P(p);
  while (P <= 2 * B) P *= P;

  std::vector<ZPoly> lifted = lift_list(mreduce(f, P), modf, p, P);

  // subset recombination with exact trial division
  std::vector<std::size_t> active(lifted.size());
  std::iota(active.begin(), active.end(), 0);
  std::uint64_t tested = 0;

  std::size_t card = 1;
  while (active.size() >= 2 * card) {
    // enumerate cardinality-card index subsets of active
    std::vector<std::size_t> idx(card);
    std::iota(idx.begin(), idx.end(), 0);
    bool removed = false;
    while (true) {
      if (++tested > budget.max_candidates) throw BudgetExceeded{};
      // candidate = lc(f) * prod(lifted[active[idx]]) mod P
      Int lc = f.back();
      Int c0 = lc;
      for (std::size_t k : idx) c0 = c0 * lifted[active[k]].front() % P;
      c0 = sym_mod(c0, P);
      Int t0 = lc * f.front();
      bool plausible = (c0 != 0) && (t0 % c0 == 0);
      if (plausible) {
        ZPoly cand{lc};
        for (std::size_t k : idx) cand = mreduce(zmul(cand, lifted[active[k]]), P);
        cand = primitive_part(sym_reduce(std::move(cand), P));
        if (auto q = zdiv_exact(f, cand)) {
          out.push_back(cand);
          f = std::move(*q);
          std::vector<std::size_t> keep;
          for (std::size_t i = 0; i < active.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end())
              keep.push_back(active[i]);
          active = std::move(keep);
          removed = true;
          break;
        }
      }
      // next combination
      int i = static_cast<int>(card) - 1;
      while (i >= 0 && idx[i] == active.size() - card + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (std::size_t j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!removed) ++card;
  }
  if (zdeg(f) >= 1) out.push_back(std::move(f));
  return out;
}

// Yun square-free decomposition of a primitive polynomial with positive
// leading coefficient: f = prod parts[i].first ^ parts[i].second.
std::vector<std::pair<ZPoly, int>> squarefree_decompose(const ZPoly& f) {
  std::vector<std::pair<ZPoly, int>> parts;
  ZPoly fp = detail::zderiv(f);
  ZPoly g = zgcd(f, fp);
  if (zdeg(g) == 0) {
    parts.push_back({f, 1});
    return parts;
  }
  ZPoly c = *zdiv_exact(f, g);
  ZPoly d = detail::zsub(*zdiv_exact(fp, g), detail::zderiv(c));
  int i = 1;
  while (zdeg(c) > 0) {
    ZPoly a = zgcd(c, d);
    if (zdeg(a) > 0) parts.push_back({a, i});
    c = *zdiv_exact(c, a);
    d = detail::zsub(*zdiv_exact(d, a), detail::zderiv(c));
    ++i;
  }
  return parts;
}

// Full integer factorization of a primitive polynomial with positive
// leading coefficient: irreducible factors with multiplicities.
std::vector<std::pair<ZPoly, int>> factor_z_full(ZPoly f, const FactorBudget& budget) {
  std::vector<std::pair<ZPoly, int>> out;

  // split off any power of x so the core has a nonzero constant term
  int xmult = 0;
  while (!f.empty() && f.front() == 0) {
    f.erase(f.begin());
    ++xmult;
  }
  if (xmult > 0) out.push_back({ZPoly{Int(0), Int(1)}, xmult});
  if (zdeg(f) <= 0) return out;

  // fast square-free certificate: any valid prime with coprime image
  bool known_squarefree = false;
  {
    std::uint64_t p = 1;
    for (int tries = 0; tries < 5 && !known_squarefree; ++tries) {
      p = next_prime(p);
      if (p > 1000) break;
      Int pp(p);
      if (f.back() % pp == 0 || f.front() % pp == 0) {
        --tries;
        continue;
      }
      if (prime_valid(f, p)) known_squarefree = true;
    }
  }

  std::vector<std::pair<ZPoly, int>> parts;
  if (known_squarefree)
    parts.push_back({f, 1});
  else
    parts = squarefree_decompose(f);

  for (auto& [part, mult] : parts) {
    auto irr = factor_squarefree_z(part, budget);
    for (auto& g : irr) out.push_back({std::move(g), mult});
  }
  return out;
}

// ---------------------------------------------------------------------
// Laurent glue
// ---------------------------------------------------------------------

const char* kHalfNote = "half-integer exponents cleared via the square root of the variable";

struct UniCore {
  ZPoly f;                 // primitive, positive leading coefficient
  bool half = false;       // exponents read in the square root variable
  std::int64_t shift = 0;  // working-exponent shift removed (min exponent)
  Int content = 1;
  int sign = 1;
};

UniCore to_dense(const LaurentPoly& p) {
  UniCore core;
  core.half = p.has_half_exponents(0);
  std::int64_t lo = p.min_exp_half(0), hi = p.max_exp_half(0);
  auto we = [&](std::int64_t h) { return core.half ? h : h / 2; };
  core.shift = we(lo);
  core.f.assign(static_cast<std::size_t>(we(hi) - we(lo)) + 1, Int(0));
  for (const auto& [e, c] : p.terms()) core.f[static_cast<std::size_t>(we(e.h[0]) - core.shift)] = c;
  core.content = detail::zcontent(core.f);
  for (auto& c : core.f) c /= core.content;
  if (core.f.back() < 0) {
    core.sign = -1;
    for (auto& c : core.f) c = -c;
  }
  return core;
}

LaurentPoly from_dense(const ZPoly& f, const std::vector<std::string>& vars, bool half) {
  LaurentPoly r(vars);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    std::int64_t e = static_cast<std::int64_t>(i);
    r.add_term(ExpVec{half ? e : 2 * e, 0}, f[i]);
  }
  return r;
}

LaurentPoly unit_monomial(const std::vector<std::string>& vars, std::int64_t h0,
                          std::int64_t h1, int sign) {
  return LaurentPoly::monomial(vars, ExpVec{h0, h1}, Int(sign));
}

}  // namespace

const char* to_string(FactorVerdict::Status s) {
  switch (s) {
    case FactorVerdict::Status::Factorizable: return "Factorizable";
    case FactorVerdict::Status::Irreducible: return "Irreducible";
    case FactorVerdict::Status::Unknown: return "Unknown";
  }
  return "?";
}

FactorVerdict factor_univariate(const LaurentPoly& p) {
  if (p.nvars() != 1)
    throw std::invalid_argument("factor_univariate expects one variable");
  if (p.is_zero()) throw std::invalid_argument("factor_univariate: zero polynomial");

  UniCore core = to_dense(p);
  FactorVerdict v;
  v.content = core.content;
  v.unit = unit_monomial(p.vars(), core.half ? core.shift : 2 * core.shift, 0, core.sign);
  if (core.half) v.note = kHalfNote;

  if (zdeg(core.f) == 0) {
    v.status = FactorVerdict::Status::Irreducible;
    if (core.content > 1)
      v.note = "constant integer content; content is not a polynomial factor";
    else
      v.note = "input is a unit of the Laurent ring";
    return v;
  }
  if (zdeg(core.f) == 1) {
    v.status = FactorVerdict::Status::Irreducible;
    return v;
  }

  FactorBudget unlimited;
  auto factors = factor_z_full(core.f, unlimited);

  int total_pieces = 0;
  for (const auto& [g, m] : factors) total_pieces += m;
  if (total_pieces <= 1) {
    v.status = FactorVerdict::Status::Irreducible;
    return v;
  }

  // witness: first irreducible factor against the exact cofactor
  const ZPoly& g = factors.front().first;
  ZPoly h = *zdiv_exact(core.f, g);
  v.status = FactorVerdict::Status::Factorizable;
  v.witness = {from_dense(g, p.vars(), core.half), from_dense(h, p.vars(), core.half)};
  return v;
}

namespace {

// Bivariate support exponents in plain integers after clearing halves.
struct BiCore {
  std::vector<std::pair<std::array<std::int64_t, 2>, Int>> terms;
  std::array<bool, 2> half{false, false};
  std::array<std::int64_t, 2> shift{0, 0};
  std::array<std::int64_t, 2> spread{0, 0};
  Int content = 1;
  int sign = 1;
};

BiCore to_bicore(const LaurentPoly& p) {
  BiCore core;
  core.half = {p.has_half_exponents(0), p.has_half_exponents(1)};
  std::array<std::int64_t, 2> lo{p.min_exp_half(0), p.min_exp_half(1)};
  std::array<std::int64_t, 2> hi{p.max_exp_half(0), p.max_exp_half(1)};
  for (int k = 0; k < 2; ++k) {
    auto we = [&](std::int64_t h) { return core.half[k] ? h : h / 2; };
    core.shift[k] = we(lo[k]);
    core.spread[k] = we(hi[k]) - we(lo[k]);
  }
  Int content = 0;
  for (const auto& [e, c] : p.terms()) {
    std::array<std::int64_t, 2> ie;
    for (int k = 0; k < 2; ++k)
      ie[k] = (core.half[k] ? e.h[k] : e.h[k] / 2) - core.shift[k];
    core.terms.push_back({ie, c});
    content = boost::multiprecision::gcd(content, c);
  }
  core.content = content;
  for (auto& [e, c] : core.terms) c /= content;
  // sign normalization: highest exponent pair gets a positive coefficient
  auto top = std::max_element(core.terms.begin(), core.terms.end(),
                              [](const auto& a, const auto& b) { return a.first < b.first; });
  if (top->second < 0) {
    core.sign = -1;
    for (auto& [e, c] : core.terms) c = -c;
  }
  return core;
}

LaurentPoly bicore_poly(const BiCore& core, const std::vector<std::string>& vars) {
  LaurentPoly r(vars);
  for (const auto& [e, c] : core.terms)
    r.add_term(ExpVec{core.half[0] ? e[0] : 2 * e[0], core.half[1] ? e[1] : 2 * e[1]}, c);
  return r;
}

LaurentPoly bi_from_exponents(const std::vector<std::pair<std::array<std::int64_t, 2>, Int>>& terms,
                              const std::vector<std::string>& vars,
                              const std::array<bool, 2>& half) {
  LaurentPoly r(vars);
  for (const auto& [e, c] : terms)
    r.add_term(ExpVec{half[0] ? e[0] : 2 * e[0], half[1] ? e[1] : 2 * e[1]}, c);
  return r;
}

}  // namespace

FactorVerdict factor_bivariate(const LaurentPoly& p) {
  if (p.nvars() != 2)
    throw std::invalid_argument("factor_bivariate expects two variables");
  if (p.is_zero()) throw std::invalid_argument("factor_bivariate: zero polynomial");

  BiCore core = to_bicore(p);
  FactorVerdict v;
  v.content = core.content;
  v.unit = unit_monomial(p.vars(), core.half[0] ? core.shift[0] : 2 * core.shift[0],
                         core.half[1] ? core.shift[1] : 2 * core.shift[1], core.sign);
  if (core.half[0] || core.half[1]) v.note = kHalfNote;

  if (core.spread[0] == 0 && core.spread[1] == 0) {
    v.status = FactorVerdict::Status::Irreducible;
    if (core.content > 1)
      v.note = "constant integer content; content is not a polynomial factor";
    else
      v.note = "input is a unit of the Laurent ring";
    return v;
  }

  // One variable absent: delegate to the univariate engine on the other.
  if (core.spread[0] == 0 || core.spread[1] == 0) {
    const int live = core.spread[0] == 0 ? 1 : 0;
    LaurentPoly uni(std::vector<std::string>{p.vars()[live]});
    for (const auto& [e, c] : core.terms)
      uni.add_term(ExpVec{core.half[live] ? e[live] : 2 * e[live], 0}, c);
    FactorVerdict uv = factor_univariate(uni);
    v.status = uv.status;
    if (uv.note.size() && v.note.empty()) v.note = uv.note;
    if (uv.witness) {
      auto embed = [&](const LaurentPoly& q) {
        LaurentPoly r(p.vars());
        for (const auto& [e, c] : q.terms()) {
          ExpVec be{};
          be.h[live] = e.h[0];
          r.add_term(be, c);
        }
        return r;
      };
      v.witness = {embed(uv.witness->first), embed(uv.witness->second)};
      // account for any extra unit the univariate pass split off
      LaurentPoly inner_unit(p.vars());
      for (const auto& [e, c] : uv.unit.terms()) {
        ExpVec be{};
        be.h[live] = e.h[0];
        inner_unit.add_term(be, c);
      }
      v.unit = mul(v.unit, inner_unit);
    }
    return v;
  }

  const std::int64_t D = 2 * core.spread[0] + 1;
  ZPoly q(static_cast<std::size_t>(core.spread[0] + D * core.spread[1]) + 1, Int(0));
  for (const auto& [e, c] : core.terms) q[static_cast<std::size_t>(e[0] + D * e[1])] = c;
  znormalize(q);

  FactorBudget budget;
  budget.max_modular_factors = 24;
  budget.max_candidates = std::uint64_t(1) << 22;

  std::vector<std::pair<ZPoly, int>> qfactors;
  try {
    qfactors = factor_z_full(q, budget);
  } catch (const BudgetExceeded&) {
    v.status = FactorVerdict::Status::Unknown;
    v.note = "factor search budget exhausted on the Kronecker image";
    return v;
  }

  int total_pieces = 0;
  for (const auto& [g, m] : qfactors) total_pieces += m;
  if (total_pieces <= 1) {
    v.status = FactorVerdict::Status::Irreducible;
    return v;
  }

  const LaurentPoly pc = bicore_poly(core, p.vars());
  const int half_deg = zdeg(q) / 2;

  // Enumerate divisors of the Kronecker image with degree <= deg(q)/2 and
  // lift each back through e -> (e mod D, e div D); a bivariate factor
  // must appear this way, so exhaustion certifies irreducibility.
  std::vector<int> exps(qfactors.size(), 0);
  std::function<std::optional<FactorVerdict>(std::size_t, ZPoly)> walk =
      [&](std::size_t at, ZPoly prod) -> std::optional<FactorVerdict> {
    if (at == qfactors.size()) {
      if (zdeg(prod) < 1 || zdeg(prod) > half_deg) return std::nullopt;
      // unkronecker
      std::vector<std::pair<std::array<std::int64_t, 2>, Int>> terms;
      for (std::size_t i = 0; i < prod.size(); ++i) {
        if (prod[i] == 0) continue;
        std::int64_t e = static_cast<std::int64_t>(i);
        terms.push_back({{e % D, e / D}, prod[i]});
      }
      if (terms.size() <= 1) return std::nullopt;  // monomial: a unit
      LaurentPoly G = bi_from_exponents(terms, p.vars(), core.half);
      auto H = exact_div(pc, G);
      if (!H) return std::nullopt;
      if (H->terms().size() <= 1) return std::nullopt;
      FactorVerdict ok = v;
      ok.status = FactorVerdict::Status::Factorizable;
      ok.witness = {G, *H};
      return ok;
    }
    for (int e = 0; e <= qfactors[at].second; ++e) {
      if (auto r = walk(at + 1, prod)) return r;
      if (e < qfactors[at].second) {
        prod = zmul(prod, qfactors[at].first);
        if (zdeg(prod) > half_deg) break;
      }
    }
    return std::nullopt;
  };

  if (auto found = walk(0, ZPoly{Int(1)})) return *found;

  v.status = FactorVerdict::Status::Irreducible;
  return v;
}

}  // namespace knotpoly
