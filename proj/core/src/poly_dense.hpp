#pragma once

// Internal dense integer-polynomial helpers shared by the factorization
// engine and the fraction-free determinant code.  Coefficients ascend by
// degree and the vector never ends in zeros.

#include <optional>
#include <vector>

#include "knotpoly/laurent.hpp"

namespace knotpoly::detail {

using ZPoly = std::vector<Int>;

inline void znormalize(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }
inline bool zis_zero(const ZPoly& f) { return f.empty(); }

inline ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  znormalize(r);
  return r;
}

inline ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  znormalize(r);
  return r;
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  znormalize(r);
  return r;
}

inline ZPoly zscale(const ZPoly& a, const Int& c) {
  if (c == 0) return {};
  ZPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

inline ZPoly zderiv(const ZPoly& f) {
  if (f.size() <= 1) return {};
  ZPoly r(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * Int(i);
  znormalize(r);
  return r;
}

inline Int zcontent(const ZPoly& f) {
  Int g = 0;
  for (const auto& c : f) g = boost::multiprecision::gcd(g, c);
  return g;
}

// Exact division over the integers; nullopt when b does not divide a.
inline std::optional<ZPoly> zdiv_exact(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) return std::nullopt;
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  ZPoly rem = a;
  ZPoly q(a.size() - b.size() + 1, Int(0));
  const Int& lb = b.back();
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    Int top = rem[i + b.size() - 1];
    if (top == 0) continue;
    if (top % lb != 0) return std::nullopt;
    Int c = top / lb;
    q[i] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[i + j] -= c * b[j];
  }
  for (const auto& c : rem)
    if (c != 0) return std::nullopt;
  znormalize(q);
  return q;
}

inline Int zeval_at0(const ZPoly& f) { return f.empty() ? Int(0) : f[0]; }

// Primitive-part gcd via pseudo-remainders.  Degrees in this project stay
// modest, content stripping keeps the swell in check.
inline ZPoly zgcd(ZPoly a, ZPoly b) {
  znormalize(a);
  znormalize(b);
  auto primitive = [](ZPoly f) {
    Int c = zcontent(f);
    if (c > 1)
      for (auto& x : f) x /= c;
    if (!f.empty() && f.back() < 0)
      for (auto& x : f) x = -x;
    return f;
  };
  if (a.empty()) return primitive(std::move(b));
  if (b.empty()) return primitive(std::move(a));
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  while (!b.empty()) {
    if (a.size() < b.size()) std::swap(a, b);
    // pseudo remainder of a by b: repeatedly a <- lb*a - la*x^shift*b
    ZPoly rem = a;
    const Int lb = b.back();
    while (!rem.empty() && rem.size() >= b.size()) {
      std::size_t shift = rem.size() - b.size();
      Int la = rem.back();
      for (auto& x : rem) x *= lb;
      for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] -= la * b[j];
      znormalize(rem);
    }
    a = std::move(b);
    b = primitive(std::move(rem));
  }
  return primitive(std::move(a));
}

}  // namespace knotpoly::detail
