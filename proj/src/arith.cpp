#include <algorithm>
#include <limits>

#include "field_impl.hpp"

namespace wittfil {

using namespace detail;

namespace {

const Layer* common_layer(const Elem& a, const Elem& b) {
  if (a.layer() == b.layer()) return a.layer();
  if (below_or_equal(a.layer(), b.layer())) return b.layer();
  if (below_or_equal(b.layer(), a.layer())) return a.layer();
  throw CharacteristicMismatch("elements of unrelated fields: " + a.layer()->name + " and " +
                               b.layer()->name);
}

// ---- Laurent kernels ----

using LD = LaurentData;

std::optional<int64_t> min_opt(std::optional<int64_t> a, std::optional<int64_t> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

// Lower bound for the valuation: exact valuation when nonzero, else the window.
int64_t lower_val(const LD& d) {
  if (!d.c.empty()) return d.val;
  if (d.prec) return *d.prec;
  return std::numeric_limits<int64_t>::max() / 4;
}

Elem lau_add(const Elem& a, const Elem& b, bool negate_b) {
  const Layer* L = a.layer();
  const LD& x = a.laurent();
  const LD& y = b.laurent();
  auto prec = min_opt(x.prec, y.prec);
  if (y.c.empty()) return Elem::make_laurent(L, x.val, x.c, prec);
  if (x.c.empty()) {
    std::vector<Elem> c = y.c;
    if (negate_b)
      for (auto& e : c) e = neg(e);
    return Elem::make_laurent(L, y.val, std::move(c), prec);
  }
  int64_t lo = std::min(x.val, y.val);
  int64_t hi = std::max(x.val + static_cast<int64_t>(x.c.size()), y.val + static_cast<int64_t>(y.c.size()));
  if (prec) hi = std::min(hi, *prec);
  if (hi < lo) hi = lo;
  std::vector<Elem> c(static_cast<std::size_t>(hi - lo), zero(L->base));
  for (std::size_t i = 0; i < x.c.size(); ++i) {
    int64_t k = x.val + static_cast<int64_t>(i) - lo;
    if (k < hi - lo) c[k] = x.c[i];
  }
  for (std::size_t i = 0; i < y.c.size(); ++i) {
    int64_t k = y.val + static_cast<int64_t>(i) - lo;
    if (k < hi - lo) c[k] = negate_b ? sub(c[k], y.c[i]) : add(c[k], y.c[i]);
  }
  return Elem::make_laurent(L, lo, std::move(c), prec);
}

Elem lau_mul(const Elem& a, const Elem& b) {
  const Layer* L = a.layer();
  const LD& x = a.laurent();
  const LD& y = b.laurent();
  // exact zero times anything is exact zero
  if ((x.c.empty() && !x.prec) || (y.c.empty() && !y.prec)) return Elem::make_laurent(L, 0, {}, std::nullopt);
  std::optional<int64_t> prec;
  if (x.prec) prec = *x.prec + lower_val(y);
  if (y.prec) prec = min_opt(prec, *y.prec + lower_val(x));
  if (x.c.empty() || y.c.empty()) return Elem::make_laurent(L, 0, {}, prec);
  int64_t lo = x.val + y.val;
  int64_t n = static_cast<int64_t>(x.c.size() + y.c.size()) - 1;
  if (prec) n = std::min(n, *prec - lo);
  if (n <= 0) return Elem::make_laurent(L, 0, {}, prec);
  std::vector<Elem> c(static_cast<std::size_t>(n), zero(L->base));
  for (std::size_t i = 0; i < x.c.size() && static_cast<int64_t>(i) < n; ++i) {
    if (is_zero(x.c[i])) continue;
    for (std::size_t j = 0; j < y.c.size() && static_cast<int64_t>(i + j) < n; ++j)
      if (!is_zero(y.c[j])) c[i + j] = add(c[i + j], mul(x.c[i], y.c[j]));
  }
  return Elem::make_laurent(L, lo, std::move(c), prec);
}

Elem lau_inv(const Elem& a) {
  const Layer* L = a.layer();
  const LD& x = a.laurent();
  if (x.c.empty()) {
    if (x.prec) throw PrecisionExhausted("inverse of a series that is zero within its window");
    throw DivisionByZero("inverse of zero in " + L->name);
  }
  Elem c0i = inv(x.c[0]);
  const int64_t v = x.val;
  if (!x.prec && x.c.size() == 1) return Elem::make_laurent(L, -v, {c0i}, std::nullopt);
  int64_t rel = x.prec ? *x.prec - v : L->default_prec;
  if (rel <= 0) throw PrecisionExhausted("inverse of a series with no significant terms");
  std::vector<Elem> b;
  b.reserve(static_cast<std::size_t>(rel));
  for (int64_t k = 0; k < rel; ++k) {
    if (k == 0) {
      b.push_back(c0i);
      continue;
    }
    Elem s = zero(L->base);
    for (int64_t i = 1; i <= k && i < static_cast<int64_t>(x.c.size()); ++i)
      if (!is_zero(x.c[i])) s = add(s, mul(x.c[i], b[k - i]));
    b.push_back(neg(mul(c0i, s)));
  }
  return Elem::make_laurent(L, -v, std::move(b), -v + rel);
}

bool lau_eq(const Elem& a, const Elem& b) {
  const LD& x = a.laurent();
  const LD& y = b.laurent();
  auto prec = min_opt(x.prec, y.prec);
  int64_t lo = std::min(x.c.empty() ? 0 : x.val, y.c.empty() ? 0 : y.val);
  int64_t hi = std::max(x.val + static_cast<int64_t>(x.c.size()), y.val + static_cast<int64_t>(y.c.size()));
  if (prec) hi = std::min(hi, *prec);
  for (int64_t k = lo; k < hi; ++k) {
    auto get = [&](const LD& d) -> std::optional<Elem> {
      if (d.c.empty() || k < d.val || k >= d.val + static_cast<int64_t>(d.c.size())) return std::nullopt;
      return d.c[static_cast<std::size_t>(k - d.val)];
    };
    auto ex = get(x), ey = get(y);
    if (!ex && !ey) continue;
    if (ex && ey) {
      if (!eq(*ex, *ey)) return false;
    } else if (!is_zero(ex ? *ex : *ey)) {
      return false;
    }
  }
  return true;
}

// ---- rational kernels ----

Elem rat_add(const Elem& a, const Elem& b, bool negate_b) {
  const RationalData& x = a.rational();
  const RationalData& y = b.rational();
  Poly yn = y.num;
  if (negate_b) yn = poly_scale(yn, from_int(yn.base, -1));
  if (poly_eq(x.den, y.den)) return Elem::make_rational(a.layer(), poly_add(x.num, yn), x.den);
  return Elem::make_rational(a.layer(), poly_add(poly_mul(x.num, y.den), poly_mul(yn, x.den)),
                             poly_mul(x.den, y.den));
}

Elem rat_mul(const Elem& a, const Elem& b) {
  const RationalData& x = a.rational();
  const RationalData& y = b.rational();
  if (poly_deg(x.den) == 0 && poly_deg(y.den) == 0)
    return rat_raw(a.layer(), poly_mul(x.num, y.num), x.den);
  return Elem::make_rational(a.layer(), poly_mul(x.num, y.num), poly_mul(x.den, y.den));
}

// ---- perfection kernels ----

std::pair<Elem, Elem> perf_align(const Elem& a, const Elem& b, int& r) {
  Elem x = a.perf().inner, y = b.perf().inner;
  int ra = a.perf().r, rb = b.perf().r;
  for (; ra < rb; ++ra) x = rc_inflate(x);
  for (; rb < ra; ++rb) y = rc_inflate(y);
  r = ra;
  return {x, y};
}

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

// ---- constants ----

Elem zero(const Layer* L) { return from_int(L, 0); }
Elem one(const Layer* L) { return from_int(L, 1); }

Elem from_int(const Layer* L, int64_t k) {
  switch (L->kind) {
    case LayerKind::Galois:
      return gal_from_int(L, k);
    case LayerKind::Rational: {
      Elem c = from_int(L->base, k);
      Poly num{L->base, {}};
      if (!is_zero(c)) num.c.push_back(c);
      return rat_raw(L, num, poly_const(L->base, one(L->base)));
    }
    case LayerKind::Perfection:
      return Elem::make_perf(L, 0, from_int(L->base, k));
    case LayerKind::Laurent: {
      Elem c = from_int(L->base, k);
      return Elem::make_laurent(L, 0, {c}, std::nullopt);
    }
  }
  return {};
}

Elem coerce(const Elem& a, const Layer* L) {
  if (a.layer() == L) return a;
  if (!below_or_equal(a.layer(), L))
    throw CharacteristicMismatch("cannot coerce " + a.layer()->name + " into " + L->name);
  Elem b = coerce(a, L->base);
  switch (L->kind) {
    case LayerKind::Rational: {
      Poly num{L->base, {}};
      if (!is_zero(b)) num.c.push_back(b);
      return rat_raw(L, num, poly_const(L->base, one(L->base)));
    }
    case LayerKind::Perfection:
      return Elem::make_perf(L, 0, b);
    case LayerKind::Laurent:
      return Elem::make_laurent(L, 0, {b}, std::nullopt);
    default:
      break;
  }
  throw CharacteristicMismatch("bad coercion");
}

Elem generator(const Layer* L) {
  switch (L->kind) {
    case LayerKind::Galois: {
      if (L->gr_e == 1) throw ParseError("prime field has no generator", 0);
      std::vector<int64_t> c(L->gr_e, 0);
      c[1] = 1;
      return Elem::make_galois(L, c);
    }
    case LayerKind::Rational:
      return rat_raw(L, Poly{L->base, {zero(L->base), one(L->base)}}, poly_const(L->base, one(L->base)));
    case LayerKind::Laurent:
      return Elem::make_laurent(L, 1, {one(L->base)}, std::nullopt);
    default:
      throw ParseError("perfection layer has no own generator", 0);
  }
}

// ---- predicates ----

bool is_zero(const Elem& a) {
  switch (a.layer()->kind) {
    case LayerKind::Galois:
      return gal_is_zero(a);
    case LayerKind::Rational:
      return a.rational().num.c.empty();
    case LayerKind::Perfection:
      return is_zero(a.perf().inner);
    case LayerKind::Laurent:
      return a.laurent().c.empty();
  }
  return false;
}

bool is_one(const Elem& a) { return eq(a, one(a.layer())); }

bool eq(const Elem& a0, const Elem& b0) {
  const Layer* L = common_layer(a0, b0);
  Elem a = coerce(a0, L), b = coerce(b0, L);
  switch (L->kind) {
    case LayerKind::Galois:
      return gal_eq(a, b);
    case LayerKind::Rational:
      return poly_eq(a.rational().num, b.rational().num) && poly_eq(a.rational().den, b.rational().den);
    case LayerKind::Perfection:
      return a.perf().r == b.perf().r && eq(a.perf().inner, b.perf().inner);
    case LayerKind::Laurent:
      return lau_eq(a, b);
  }
  return false;
}

// ---- ring operations ----

Elem add(const Elem& a0, const Elem& b0) {
  const Layer* L = common_layer(a0, b0);
  Elem a = coerce(a0, L), b = coerce(b0, L);
  switch (L->kind) {
    case LayerKind::Galois:
      return gal_add(a, b);
    case LayerKind::Rational:
      return rat_add(a, b, false);
    case LayerKind::Perfection: {
      int r;
      auto [x, y] = perf_align(a, b, r);
      return Elem::make_perf(L, r, add(x, y));
    }
    case LayerKind::Laurent:
      return lau_add(a, b, false);
  }
  return {};
}

Elem sub(const Elem& a0, const Elem& b0) {
  const Layer* L = common_layer(a0, b0);
  Elem a = coerce(a0, L), b = coerce(b0, L);
  switch (L->kind) {
    case LayerKind::Galois:
      return gal_add(a, gal_neg(b));
    case LayerKind::Rational:
      return rat_add(a, b, true);
    case LayerKind::Perfection: {
      int r;
      auto [x, y] = perf_align(a, b, r);
      return Elem::make_perf(L, r, sub(x, y));
    }
    case LayerKind::Laurent:
      return lau_add(a, b, true);
  }
  return {};
}

Elem neg(const Elem& a) {
  const Layer* L = a.layer();
  switch (L->kind) {
    case LayerKind::Galois:
      return gal_neg(a);
    case LayerKind::Rational:
      return rat_raw(L, poly_scale(a.rational().num, from_int(L->base, -1)), a.rational().den);
    case LayerKind::Perfection:
      return Elem::make_perf(L, a.perf().r, neg(a.perf().inner));
    case LayerKind::Laurent: {
      std::vector<Elem> c = a.laurent().c;
      for (auto& e : c) e = neg(e);
      return Elem::make_laurent(L, a.laurent().val, std::move(c), a.laurent().prec);
    }
  }
  return {};
}

Elem mul(const Elem& a0, const Elem& b0) {
  const Layer* L = common_layer(a0, b0);
  Elem a = coerce(a0, L), b = coerce(b0, L);
  switch (L->kind) {
    case LayerKind::Galois:
      return gal_mul(a, b);
    case LayerKind::Rational:
      return rat_mul(a, b);
    case LayerKind::Perfection: {
      int r;
      auto [x, y] = perf_align(a, b, r);
      return Elem::make_perf(L, r, mul(x, y));
    }
    case LayerKind::Laurent:
      return lau_mul(a, b);
  }
  return {};
}

Elem inv(const Elem& a) {
  const Layer* L = a.layer();
  switch (L->kind) {
    case LayerKind::Galois:
      return gal_inv(a);
    case LayerKind::Rational:
      if (is_zero(a)) throw DivisionByZero("inverse of zero in " + L->name);
      return Elem::make_rational(L, a.rational().den, a.rational().num);
    case LayerKind::Perfection:
      return Elem::make_perf(L, a.perf().r, inv(a.perf().inner));
    case LayerKind::Laurent:
      return lau_inv(a);
  }
  return {};
}

Elem div(const Elem& a, const Elem& b) {
  const Layer* L = common_layer(a, b);
  return mul(coerce(a, L), inv(coerce(b, L)));
}

Elem pow(const Elem& a, int64_t k) {
  if (k < 0) return pow(inv(a), -k);
  Elem r = one(a.layer()), b = a;
  while (k > 0) {
    if (k & 1) r = mul(r, b);
    k >>= 1;
    if (k) b = mul(b, b);
  }
  return r;
}

Elem mul_int(const Elem& a, int64_t k) { return mul(a, from_int(a.layer(), k)); }

// ---- Frobenius and p-th roots ----

Elem frob(const Elem& a) {
  const Layer* L = a.layer();
  const int p = L->p;
  switch (L->kind) {
    case LayerKind::Galois:
      return gal_sigma(a);
    case LayerKind::Rational: {
      auto spread = [&](const Poly& f) {
        Poly g{f.base, {}};
        if (f.c.empty()) return g;
        g.c.assign((f.c.size() - 1) * p + 1, zero(f.base));
        for (std::size_t i = 0; i < f.c.size(); ++i) g.c[i * p] = frob(f.c[i]);
        return g;
      };
      return rat_raw(L, spread(a.rational().num), spread(a.rational().den));
    }
    case LayerKind::Perfection: {
      const PerfData& d = a.perf();
      Elem tw = rc_twist(d.inner, 1);
      if (d.r > 0) return Elem::make_perf(L, d.r - 1, tw);
      return Elem::make_perf(L, 0, rc_inflate(tw));
    }
    case LayerKind::Laurent: {
      const LD& d = a.laurent();
      std::vector<Elem> c;
      if (!d.c.empty()) {
        c.assign((d.c.size() - 1) * p + 1, zero(L->base));
        for (std::size_t i = 0; i < d.c.size(); ++i) c[i * p] = frob(d.c[i]);
      }
      std::optional<int64_t> prec;
      if (d.prec) prec = *d.prec * p;
      return Elem::make_laurent(L, d.val * p, std::move(c), prec);
    }
  }
  return {};
}

bool is_pth_power(const Elem& a) {
  const Layer* L = a.layer();
  const int p = L->p;
  switch (L->kind) {
    case LayerKind::Galois:
    case LayerKind::Perfection:
      return true;
    case LayerKind::Rational: {
      for (const Poly* f : {&a.rational().num, &a.rational().den})
        for (std::size_t i = 0; i < f->c.size(); ++i)
          if (!is_zero(f->c[i]) && (i % p != 0 || !is_pth_power(f->c[i]))) return false;
      return true;
    }
    case LayerKind::Laurent: {
      const LD& d = a.laurent();
      for (std::size_t i = 0; i < d.c.size(); ++i) {
        if (is_zero(d.c[i])) continue;
        int64_t k = d.val + static_cast<int64_t>(i);
        if (((k % p) + p) % p != 0 || !is_pth_power(d.c[i])) return false;
      }
      if (d.prec) throw PrecisionExhausted("p-th power test undecidable within window");
      return true;
    }
  }
  return false;
}

Elem pth_root(const Elem& a) {
  const Layer* L = a.layer();
  const int p = L->p;
  switch (L->kind) {
    case LayerKind::Galois:
      return gr_sigma_inv(a);
    case LayerKind::Rational: {
      auto shrink = [&](const Poly& f) {
        Poly g{f.base, {}};
        for (std::size_t i = 0; i < f.c.size(); ++i) {
          if (is_zero(f.c[i])) continue;
          if (i % p != 0) throw NotAPthPower(render(a) + " is not a p-th power");
          g.c.resize(i / p + 1, zero(f.base));
          g.c[i / p] = pth_root(f.c[i]);
        }
        return g;
      };
      return rat_raw(L, shrink(a.rational().num), shrink(a.rational().den));
    }
    case LayerKind::Perfection:
      return Elem::make_perf(L, a.perf().r + 1, rc_twist(a.perf().inner, -1));
    case LayerKind::Laurent: {
      const LD& d = a.laurent();
      std::optional<int64_t> prec;
      if (d.prec) prec = -floor_div(-*d.prec, p);
      if (d.c.empty()) return Elem::make_laurent(L, 0, {}, prec);
      if (((d.val % p) + p) % p != 0) throw NotAPthPower(render(a) + " is not a p-th power");
      std::vector<Elem> c((d.c.size() - 1) / p + 1, zero(L->base));
      for (std::size_t i = 0; i < d.c.size(); ++i) {
        if (is_zero(d.c[i])) continue;
        if (i % p != 0) throw NotAPthPower(render(a) + " is not a p-th power");
        c[i / p] = pth_root(d.c[i]);
      }
      return Elem::make_laurent(L, d.val / p, std::move(c), prec);
    }
  }
  return {};
}

// ---- Laurent accessors ----

bool has_valuation(const Elem& a) {
  if (a.layer()->kind != LayerKind::Laurent) throw UnsupportedRing("valuation needs a Laurent layer");
  return !a.laurent().c.empty();
}

int64_t valuation(const Elem& a) {
  if (a.layer()->kind != LayerKind::Laurent) throw UnsupportedRing("valuation needs a Laurent layer");
  const LD& d = a.laurent();
  if (d.c.empty()) {
    if (d.prec) throw PrecisionExhausted("valuation beyond precision window");
    throw DivisionByZero("valuation of zero");
  }
  return d.val;
}

Elem coeff(const Elem& a, int64_t k) {
  if (a.layer()->kind != LayerKind::Laurent) throw UnsupportedRing("coeff needs a Laurent layer");
  const LD& d = a.laurent();
  if (d.prec && k >= *d.prec)
    throw PrecisionExhausted("coefficient of " + a.layer()->var + "^" + std::to_string(k) +
                             " lies beyond the window");
  if (d.c.empty() || k < d.val || k >= d.val + static_cast<int64_t>(d.c.size())) return zero(a.layer()->base);
  return d.c[static_cast<std::size_t>(k - d.val)];
}

Elem monomial(const Layer* L, const Elem& c, int64_t k) {
  return Elem::make_laurent(L, k, {coerce(c, L->base)}, std::nullopt);
}

Elem with_prec(const Elem& a, int64_t prec) {
  const LD& d = a.laurent();
  int64_t p = d.prec ? std::min(*d.prec, prec) : prec;
  return Elem::make_laurent(a.layer(), d.val, d.c, p);
}

std::optional<int64_t> precision(const Elem& a) {
  if (a.layer()->kind != LayerKind::Laurent) return std::nullopt;
  return a.laurent().prec;
}

bool is_exact(const Elem& a) {
  switch (a.layer()->kind) {
    case LayerKind::Laurent:
      if (a.laurent().prec) return false;
      for (const auto& c : a.laurent().c)
        if (!is_exact(c)) return false;
      return true;
    case LayerKind::Perfection:
      return true;
    default:
      return true;
  }
}

int64_t laurent_min_known_exponent(const Elem& a) { return lower_val(a.laurent()); }

}  // namespace wittfil
