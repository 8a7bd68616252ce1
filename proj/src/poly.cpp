#include <algorithm>

#include "field_impl.hpp"

namespace wittfil {

using namespace detail;

Poly poly_trim(Poly a) {
  while (!a.c.empty() && is_zero(a.c.back())) a.c.pop_back();
  return a;
}

bool poly_is_zero(const Poly& a) { return a.c.empty(); }

int poly_deg(const Poly& a) { return static_cast<int>(a.c.size()) - 1; }

Poly poly_const(const Layer* base, const Elem& c) {
  Poly r{base, {}};
  if (!is_zero(c)) r.c.push_back(coerce(c, base));
  return r;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r{a.base ? a.base : b.base, {}};
  std::size_t n = std::max(a.c.size(), b.c.size());
  r.c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= a.c.size())
      r.c.push_back(b.c[i]);
    else if (i >= b.c.size())
      r.c.push_back(a.c[i]);
    else
      r.c.push_back(add(a.c[i], b.c[i]));
  }
  return poly_trim(std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r{a.base ? a.base : b.base, {}};
  std::size_t n = std::max(a.c.size(), b.c.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= a.c.size())
      r.c.push_back(neg(b.c[i]));
    else if (i >= b.c.size())
      r.c.push_back(a.c[i]);
    else
      r.c.push_back(sub(a.c[i], b.c[i]));
  }
  return poly_trim(std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r{a.base ? a.base : b.base, {}};
  if (a.c.empty() || b.c.empty()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, zero(r.base));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      if (!is_zero(b.c[j])) r.c[i + j] = add(r.c[i + j], mul(a.c[i], b.c[j]));
  }
  return poly_trim(std::move(r));
}

Poly poly_scale(const Poly& a, const Elem& c) {
  Poly r{a.base, {}};
  for (const auto& x : a.c) r.c.push_back(mul(x, c));
  return poly_trim(std::move(r));
}

void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.c.empty()) throw DivisionByZero("polynomial division by zero");
  const Layer* base = a.base ? a.base : b.base;
  r = a;
  r.base = base;
  q = Poly{base, {}};
  int db = poly_deg(b);
  if (poly_deg(r) < db) return;
  Elem li = inv(b.c.back());
  q.c.assign(static_cast<std::size_t>(poly_deg(r) - db + 1), zero(base));
  while (!r.c.empty() && poly_deg(r) >= db) {
    int k = poly_deg(r) - db;
    Elem c = mul(r.c.back(), li);
    q.c[k] = c;
    for (int i = 0; i <= db; ++i) r.c[k + i] = sub(r.c[k + i], mul(c, b.c[i]));
    r.c.pop_back();
    r = poly_trim(std::move(r));
  }
  q = poly_trim(std::move(q));
}

Poly poly_monic(const Poly& a) {
  if (a.c.empty()) return a;
  return poly_scale(a, inv(a.c.back()));
}

Poly poly_gcd(const Poly& a0, const Poly& b0) {
  Poly a = a0, b = b0;
  while (!b.c.empty()) {
    Poly q, r;
    poly_divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

Poly poly_deriv(const Poly& a) {
  Poly r{a.base, {}};
  for (std::size_t i = 1; i < a.c.size(); ++i) r.c.push_back(mul_int(a.c[i], static_cast<int64_t>(i)));
  return poly_trim(std::move(r));
}

bool poly_eq(const Poly& a, const Poly& b) {
  if (a.c.size() != b.c.size()) return false;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (!eq(a.c[i], b.c[i])) return false;
  return true;
}

Poly poly_powmod(const Poly& a, int64_t e, const Poly& m) {
  Poly q, r, base;
  poly_divmod(a, m, q, base);
  Poly acc = poly_const(a.base ? a.base : m.base, one(a.base ? a.base : m.base));
  while (e > 0) {
    if (e & 1) {
      poly_divmod(poly_mul(acc, base), m, q, r);
      acc = r;
    }
    e >>= 1;
    if (e) {
      poly_divmod(poly_mul(base, base), m, q, r);
      base = r;
    }
  }
  return acc;
}

Poly poly_powmod(const Poly& a, const std::string& e_decimal, const Poly& m) {
  // Left-to-right over decimal digits: acc <- acc^10 * a^digit.
  Poly q, r;
  const Layer* base = a.base ? a.base : m.base;
  Poly acc = poly_const(base, one(base));
  for (char ch : e_decimal) {
    acc = poly_powmod(acc, 10, m);
    int d = ch - '0';
    if (d > 0) {
      poly_divmod(poly_mul(acc, poly_powmod(a, d, m)), m, q, r);
      acc = r;
    }
  }
  return acc;
}

Elem poly_eval(const Poly& a, const Elem& x) {
  if (a.c.empty()) return zero(x.layer());
  Elem r = coerce(a.c.back(), x.layer());
  for (std::size_t i = a.c.size() - 1; i-- > 0;) r = add(mul(r, x), a.c[i]);
  return r;
}

// ---- rational-chain maps used by the perfection layer ----

namespace detail {

namespace {

Poly map_poly(const Poly& f, int exp_mul, int exp_div, Elem (*g)(const Elem&, int), int arg) {
  Poly r{f.base, {}};
  if (f.c.empty()) return r;
  std::size_t deg = f.c.size() - 1;
  std::size_t nd = exp_mul > 0 ? deg * exp_mul : deg / exp_div;
  r.c.assign(nd + 1, zero(f.base));
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (is_zero(f.c[i])) continue;
    std::size_t j = exp_mul > 0 ? i * exp_mul : i / exp_div;
    r.c[j] = g(f.c[i], arg);
  }
  return r;
}

Elem inflate_arg(const Elem& a, int) { return rc_inflate(a); }
Elem deflate_arg(const Elem& a, int) { return rc_deflate(a); }
Elem twist_arg(const Elem& a, int k) { return rc_twist(a, k); }

}  // namespace

Elem rc_inflate(const Elem& a) {
  const Layer* L = a.layer();
  if (L->kind == LayerKind::Galois) return a;
  const RationalData& d = a.rational();
  return rat_raw(L, map_poly(d.num, L->p, 1, inflate_arg, 0), map_poly(d.den, L->p, 1, inflate_arg, 0));
}

bool rc_deflatable(const Elem& a) {
  const Layer* L = a.layer();
  if (L->kind == LayerKind::Galois) return true;
  for (const Poly* f : {&a.rational().num, &a.rational().den})
    for (std::size_t i = 0; i < f->c.size(); ++i)
      if (!is_zero(f->c[i]) && (i % L->p != 0 || !rc_deflatable(f->c[i]))) return false;
  return true;
}

Elem rc_deflate(const Elem& a) {
  const Layer* L = a.layer();
  if (L->kind == LayerKind::Galois) return a;
  const RationalData& d = a.rational();
  return rat_raw(L, map_poly(d.num, 0, L->p, deflate_arg, 0), map_poly(d.den, 0, L->p, deflate_arg, 0));
}

Elem rc_twist(const Elem& a, int k) {
  const Layer* L = a.layer();
  if (L->kind == LayerKind::Galois) {
    if (L->gr_e == 1) return a;
    Elem r = a;
    int steps = ((k % L->gr_e) + L->gr_e) % L->gr_e;
    for (int i = 0; i < steps; ++i) r = gal_sigma(r);
    return r;
  }
  const RationalData& d = a.rational();
  return rat_raw(L, map_poly(d.num, 1, 1, twist_arg, k), map_poly(d.den, 1, 1, twist_arg, k));
}

}  // namespace detail

}  // namespace wittfil
