#include <algorithm>

#include "field_impl.hpp"

namespace wittfil {
namespace detail {
namespace {

using IV = std::vector<int64_t>;

int64_t md(int64_t a, int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

// Multiply two residues of Z/m[x]/(f), f monic of degree e (f has e+1 entries).
IV mulmod(const IV& a, const IV& b, const IV& f, int64_t m) {
  const std::size_t e = f.size() - 1;
  std::vector<__int128> t(2 * e, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) t[i + j] += static_cast<__int128>(a[i]) * b[j];
  }
  std::vector<int64_t> r(2 * e, 0);
  for (std::size_t i = 0; i < t.size(); ++i) r[i] = md(static_cast<int64_t>(t[i] % m), m);
  for (std::size_t k = 2 * e; k-- > e;) {
    int64_t c = r[k];
    if (c == 0) continue;
    r[k] = 0;
    for (std::size_t i = 0; i < e; ++i)
      r[k - e + i] = md(r[k - e + i] - static_cast<int64_t>((static_cast<__int128>(c) * f[i]) % m), m);
  }
  r.resize(e);
  return r;
}

IV powmod(IV a, __int128 k, const IV& f, int64_t m) {
  IV r(f.size() - 1, 0);
  r[0] = 1 % m;
  while (k > 0) {
    if (k & 1) r = mulmod(r, a, f, m);
    a = mulmod(a, a, f, m);
    k >>= 1;
  }
  return r;
}

bool divides_modp(const IV& g, IV f, int p) {
  // g monic; f reduced in place
  const int dg = static_cast<int>(g.size()) - 1;
  for (int k = static_cast<int>(f.size()) - 1; k >= dg; --k) {
    int64_t c = f[k];
    if (c == 0) continue;
    for (int i = 0; i <= dg; ++i) f[k - dg + i] = md(f[k - dg + i] - c * g[i], p);
  }
  for (int i = 0; i < dg; ++i)
    if (f[i] != 0) return false;
  return true;
}

IV poly_from_index(int64_t k, int p, int e) {
  IV f(e + 1, 0);
  f[e] = 1;
  for (int i = 0; i < e; ++i) {
    f[i] = k % p;
    k /= p;
  }
  return f;
}

int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::vector<int64_t> smallest_irreducible(int p, int e) {
  if (e == 1) return {0, 1};
  for (int64_t k = 0; k < ipow(p, e); ++k) {
    IV f = poly_from_index(k, p, e);
    bool irreducible = true;
    for (int d = 1; d <= e / 2 && irreducible; ++d)
      for (int64_t j = 0; j < ipow(p, d) && irreducible; ++j)
        if (divides_modp(poly_from_index(j, p, d), f, p)) irreducible = false;
    if (irreducible) return f;
  }
  throw UnsupportedRing("no irreducible polynomial found");
}

std::vector<int64_t> teichmuller_modulus(int p, int n, const std::vector<int64_t>& f) {
  const int e = static_cast<int>(f.size()) - 1;
  const int64_t m = ipow(p, n);
  if (n == 1) return f;
  if (e == 1) {
    // X + c0: the Teichmueller lift of the root -c0.
    __int128 k = 1;
    for (int i = 1; i < n; ++i) k *= p;
    IV t = powmod(IV{md(-f[0], p)}, k, IV{0, 1}, m);
    return {md(-t[0], m), 1};
  }
  // tau = x^{q^{n-1}} in Z/p^n[x]/(f); modulus prod_i (X - tau^{p^i}).
  __int128 qn1 = 1;
  for (int i = 0; i < e * (n - 1); ++i) qn1 *= p;
  IV x(e, 0);
  x[1 % e] = 1;
  IV tau = powmod(x, qn1, f, m);
  std::vector<IV> poly{IV(e, 0)};  // coefficients in the ring, poly in X
  poly[0][0] = 1;
  IV root = tau;
  for (int i = 0; i < e; ++i) {
    std::vector<IV> next(poly.size() + 1, IV(e, 0));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      for (int j = 0; j < e; ++j) next[k + 1][j] = md(next[k + 1][j] + poly[k][j], m);
      IV pr = mulmod(poly[k], root, f, m);
      for (int j = 0; j < e; ++j) next[k][j] = md(next[k][j] - pr[j], m);
    }
    poly = std::move(next);
    root = powmod(root, p, f, m);
  }
  IV out(e + 1, 0);
  for (int k = 0; k <= e; ++k) {
    for (int j = 1; j < e; ++j)
      if (poly[k][j] != 0) throw UnsupportedRing("Teichmueller modulus is not integral");
    out[k] = poly[k][0];
  }
  return out;
}

Elem gal_from_int(const Layer* L, int64_t k) {
  std::vector<int64_t> c(L->gr_e, 0);
  c[0] = md(k, L->modulus);
  return Elem::make_galois(L, std::move(c));
}

Elem gal_add(const Elem& a, const Elem& b) {
  const Layer* L = a.layer();
  std::vector<int64_t> c(L->gr_e);
  for (int i = 0; i < L->gr_e; ++i) c[i] = md(a.galois().c[i] + b.galois().c[i], L->modulus);
  return Elem::make_galois(L, std::move(c));
}

Elem gal_neg(const Elem& a) {
  const Layer* L = a.layer();
  std::vector<int64_t> c(L->gr_e);
  for (int i = 0; i < L->gr_e; ++i) c[i] = md(-a.galois().c[i], L->modulus);
  return Elem::make_galois(L, std::move(c));
}

Elem gal_mul(const Elem& a, const Elem& b) {
  const Layer* L = a.layer();
  if (L->gr_e == 1)
    return Elem::make_galois(
        L, {static_cast<int64_t>((static_cast<__int128>(a.galois().c[0]) * b.galois().c[0]) % L->modulus)});
  return Elem::make_galois(L, mulmod(a.galois().c, b.galois().c, L->defpoly, L->modulus));
}

bool gal_is_zero(const Elem& a) {
  for (int64_t v : a.galois().c)
    if (v != 0) return false;
  return true;
}

bool gal_eq(const Elem& a, const Elem& b) { return a.galois().c == b.galois().c; }

Elem gal_inv(const Elem& a) {
  const Layer* L = a.layer();
  bool unit = false;
  for (int64_t v : a.galois().c)
    if (v % L->p != 0) unit = true;
  if (!unit) throw DivisionByZero("non-unit in " + L->name);
  __int128 q = L->q();
  IV y = powmod(a.galois().c, q - 2, L->defpoly, L->modulus);
  Elem ye = Elem::make_galois(L, y);
  Elem two = gal_from_int(L, 2);
  for (int i = 0; i < L->gr_n + 1; ++i) ye = gal_mul(ye, gal_add(two, gal_neg(gal_mul(a, ye))));
  return ye;
}

Elem gal_sigma(const Elem& a) {
  const Layer* L = a.layer();
  if (L->gr_e == 1) return a;
  IV x(L->gr_e, 0);
  x[1] = 1;
  IV xp = powmod(x, L->p, L->defpoly, L->modulus);
  IV acc(L->gr_e, 0), pw(L->gr_e, 0);
  pw[0] = 1;
  for (int i = 0; i < L->gr_e; ++i) {
    int64_t c = a.galois().c[i];
    if (c != 0)
      for (int j = 0; j < L->gr_e; ++j) acc[j] = md(acc[j] + c * pw[j], L->modulus);
    pw = mulmod(pw, xp, L->defpoly, L->modulus);
  }
  return Elem::make_galois(L, std::move(acc));
}

}  // namespace detail

using namespace detail;

const Layer* residue_galois(const Layer* gr) {
  if (gr->kind != LayerKind::Galois) throw UnsupportedRing("not a Galois layer");
  if (gr->gr_n == 1) return gr;
  std::vector<int64_t> f(gr->defpoly.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = gr->defpoly[i] % gr->p;
  return galois_layer(gr->p, 1, gr->gr_e, f, gr->gen);
}

Elem gr_reduce(const Elem& a) {
  const Layer* R = residue_galois(a.layer());
  std::vector<int64_t> c(a.galois().c);
  for (auto& v : c) v %= R->p;
  return Elem::make_galois(R, std::move(c));
}

Elem gr_lift(const Layer* gr, const Elem& residue) {
  return Elem::make_galois(gr, residue.galois().c);
}

Elem gr_teichmuller(const Layer* gr, const Elem& residue) {
  Elem x = gr_lift(gr, residue);
  int64_t k = 1;
  for (int i = 0; i < gr->gr_n - 1; ++i) k *= gr->q();
  return pow(x, k);
}

Elem gr_sigma_inv(const Elem& a) {
  Elem r = a;
  for (int i = 0; i < a.layer()->gr_e - 1; ++i) r = gal_sigma(r);
  return r;
}

bool gr_divisible_by_p(const Elem& a) {
  for (int64_t v : a.galois().c)
    if (v % a.layer()->p != 0) return false;
  return true;
}

Elem gr_div_p(const Elem& a) {
  if (!gr_divisible_by_p(a)) throw DivisionByZero("not divisible by p");
  std::vector<int64_t> c(a.galois().c);
  for (auto& v : c) v /= a.layer()->p;
  return Elem::make_galois(a.layer(), std::move(c));
}

std::vector<Elem> galois_elements(const Layer* L) {
  if (L->kind != LayerKind::Galois || L->gr_n != 1) throw UnsupportedRing("not a finite field");
  std::vector<Elem> out;
  const int64_t q = L->q();
  for (int64_t k = 0; k < q; ++k) {
    std::vector<int64_t> c(L->gr_e);
    int64_t t = k;
    for (int i = 0; i < L->gr_e; ++i) {
      c[i] = t % L->p;
      t /= L->p;
    }
    out.push_back(Elem::make_galois(L, std::move(c)));
  }
  return out;
}

}  // namespace wittfil
