#include "knotpoly/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace knotpoly {

namespace {

void check_vars(const std::vector<std::string>& vars) {
  if (vars.empty() || vars.size() > 2)
    throw std::invalid_argument("LaurentPoly supports 1 or 2 variables");
  if (vars.size() == 2 && vars[0] == vars[1])
    throw std::invalid_argument("duplicate variable name");
}

void check_same_ring(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("variable-list mismatch between operands");
}

}  // namespace

LaurentPoly::LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
  check_vars(vars_);
}

LaurentPoly LaurentPoly::zero(std::vector<std::string> vars) {
  return LaurentPoly(std::move(vars));
}

LaurentPoly LaurentPoly::constant(std::vector<std::string> vars, Int c) {
  LaurentPoly p(std::move(vars));
  p.add_term(ExpVec{}, c);
  return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars, ExpVec e, Int c) {
  LaurentPoly p(std::move(vars));
  p.add_term(e, c);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == ExpVec{} &&
         terms_.begin()->second == 1;
}

bool LaurentPoly::is_unit() const {
  if (terms_.size() != 1) return false;
  const Int& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

bool LaurentPoly::has_half_exponents(int k) const {
  for (const auto& [e, c] : terms_)
    if (e.h[k] % 2 != 0) return true;
  return false;
}

Int LaurentPoly::coeff(ExpVec e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(ExpVec e, const Int& c) {
  if (c == 0) return;
  if (nvars() == 1 && e.h[1] != 0)
    throw std::invalid_argument("second exponent used in a one-variable polynomial");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t LaurentPoly::min_exp_half(int k) const {
  if (terms_.empty()) throw std::logic_error("exponent range of zero polynomial");
  std::int64_t m = terms_.begin()->first.h[k];
  for (const auto& [e, c] : terms_) m = std::min(m, e.h[k]);
  return m;
}

std::int64_t LaurentPoly::max_exp_half(int k) const {
  if (terms_.empty()) throw std::logic_error("exponent range of zero polynomial");
  std::int64_t m = terms_.begin()->first.h[k];
  for (const auto& [e, c] : terms_) m = std::max(m, e.h[k]);
  return m;
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_ring(a, b);
  LaurentPoly r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(e, c);
  return r;
}

LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_ring(a, b);
  LaurentPoly r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(e, -c);
  return r;
}

LaurentPoly neg(const LaurentPoly& a) {
  LaurentPoly r(a.vars());
  for (const auto& [e, c] : a.terms()) r.add_term(e, -c);
  return r;
}

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_ring(a, b);
  LaurentPoly r(a.vars());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      ExpVec e{ea.h[0] + eb.h[0], ea.h[1] + eb.h[1]};
      r.add_term(e, ca * cb);
    }
  return r;
}

LaurentPoly mul(const LaurentPoly& a, const Int& c) {
  LaurentPoly r(a.vars());
  for (const auto& [e, ca] : a.terms()) r.add_term(e, ca * c);
  return r;
}

LaurentPoly pow(const LaurentPoly& a, unsigned e) {
  LaurentPoly r = LaurentPoly::constant(a.vars(), 1);
  LaurentPoly base = a;
  while (e) {
    if (e & 1u) r = mul(r, base);
    e >>= 1u;
    if (e) base = mul(base, base);
  }
  return r;
}

LaurentPoly normalize_unit(const LaurentPoly& p) {
  if (p.nvars() != 1)
    throw std::invalid_argument("normalize_unit expects a one-variable polynomial");
  if (p.is_zero()) return p;  // flagged degenerate case: returned unchanged
  std::int64_t m = p.min_exp_half(0);
  LaurentPoly r(p.vars());
  for (const auto& [e, c] : p.terms()) r.add_term(ExpVec{e.h[0] - m, 0}, c);
  if (r.coeff(ExpVec{}) < 0) r = neg(r);
  return r;
}

std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_ring(a, b);
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return LaurentPoly::zero(a.vars());

  // Per-coordinate exponent window of any exact quotient: extreme
  // exponents of a product are sums of the factors' extremes.
  std::array<std::int64_t, 2> qlo{0, 0}, qhi{0, 0};
  for (int k = 0; k < a.nvars(); ++k) {
    qlo[k] = a.min_exp_half(k) - b.min_exp_half(k);
    qhi[k] = a.max_exp_half(k) - b.max_exp_half(k);
    if (qlo[k] > qhi[k]) return std::nullopt;
  }

  // Long division against the lexicographically largest term of b: the
  // quotient's lex-largest remaining term is forced at every step, so a
  // step outside the window or with a non-divisible coefficient means b
  // does not divide a.
  auto lead = *b.terms().rbegin();
  LaurentPoly rem = a, q(a.vars());
  while (!rem.is_zero()) {
    auto [re, rc] = *rem.terms().rbegin();
    if (rc % lead.second != 0) return std::nullopt;
    ExpVec de{re.h[0] - lead.first.h[0], re.h[1] - lead.first.h[1]};
    for (int k = 0; k < a.nvars(); ++k)
      if (de.h[k] < qlo[k] || de.h[k] > qhi[k]) return std::nullopt;
    Int dc = rc / lead.second;
    LaurentPoly m = LaurentPoly::monomial(a.vars(), de, dc);
    q = add(q, m);
    rem = sub(rem, mul(m, b));
  }
  return q;
}

std::optional<UnitFactor> unit_quotient(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars() != b.vars()) return std::nullopt;
  if (a.terms().size() != b.terms().size()) return std::nullopt;
  if (a.is_zero()) return UnitFactor{1, ExpVec{}};
  ExpVec ea = a.terms().begin()->first, eb = b.terms().begin()->first;
  ExpVec shift{ea.h[0] - eb.h[0], ea.h[1] - eb.h[1]};
  for (int sign : {1, -1}) {
    bool ok = true;
    for (const auto& [e, c] : b.terms()) {
      ExpVec es{e.h[0] + shift.h[0], e.h[1] + shift.h[1]};
      if (a.coeff(es) != sign * c) {
        ok = false;
        break;
      }
    }
    if (ok) return UnitFactor{sign, shift};
  }
  return std::nullopt;
}

LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& images) {
  if (static_cast<int>(images.size()) != p.nvars())
    throw std::invalid_argument("substitute: one image per variable required");
  const auto& out_vars = images[0].vars();
  for (const auto& img : images)
    if (img.vars() != out_vars)
      throw std::invalid_argument("substitute: images live in different rings");
  if (p.is_zero()) return LaurentPoly::zero(out_vars);

  std::array<std::int64_t, 2> mins{0, 0};
  for (int k = 0; k < p.nvars(); ++k) {
    if (p.has_half_exponents(k))
      throw std::invalid_argument("substitute: half-integer exponent present");
    mins[k] = p.min_exp_half(k) / 2;
  }

  LaurentPoly acc = LaurentPoly::zero(out_vars);
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly term = LaurentPoly::constant(out_vars, c);
    for (int k = 0; k < p.nvars(); ++k) {
      std::int64_t ek = e.h[k] / 2 - mins[k];
      term = mul(term, pow(images[k], static_cast<unsigned>(ek)));
    }
    acc = add(acc, term);
  }
  // Undo the factored-out minimal powers, dividing exactly when negative.
  for (int k = 0; k < p.nvars(); ++k) {
    if (mins[k] > 0) {
      acc = mul(acc, pow(images[k], static_cast<unsigned>(mins[k])));
    } else if (mins[k] < 0) {
      auto q = exact_div(acc, pow(images[k], static_cast<unsigned>(-mins[k])));
      if (!q) throw std::domain_error("substitute: negative power does not divide exactly");
      acc = *q;
    }
  }
  return acc;
}

LaurentPoly invert_var(const LaurentPoly& p, int k) {
  LaurentPoly r(p.vars());
  for (const auto& [e, c] : p.terms()) {
    ExpVec ne = e;
    ne.h[k] = -ne.h[k];
    r.add_term(ne, c);
  }
  return r;
}

LaurentPoly scale_exponents(const LaurentPoly& p, int k, int factor) {
  LaurentPoly r(p.vars());
  for (const auto& [e, c] : p.terms()) {
    ExpVec ne = e;
    ne.h[k] *= factor;
    r.add_term(ne, c);
  }
  return r;
}

namespace {

std::string exp_string(std::int64_t h) {
  if (h % 2 == 0) return std::to_string(h / 2);
  return std::to_string(h) + "/2";
}

}  // namespace

std::string serialize(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) out << " + ";
    first = false;
    out << c.str();
    for (int k = 0; k < p.nvars(); ++k)
      out << "*" << p.vars()[k] << "^" << exp_string(e.h[k]);
  }
  return out.str();
}

}  // namespace knotpoly
