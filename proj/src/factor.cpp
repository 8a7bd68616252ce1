#include <gmpxx.h>

#include <algorithm>
#include <random>

#include "wittfil/modulus.hpp"

namespace wittfil {

namespace {

Poly px(const Layer* F) { return Poly{F, {zero(F), one(F)}}; }

Poly pdiv(const Poly& a, const Poly& b) {
  Poly q, r;
  poly_divmod(a, b, q, r);
  return q;
}

Poly pmod(const Poly& a, const Poly& b) {
  Poly q, r;
  poly_divmod(a, b, q, r);
  return r;
}

// f(X) = g(X)^p: coefficientwise p-th roots of the X^{pk} terms
Poly poly_pth_root(const Poly& f) {
  const int p = f.base->p;
  Poly r{f.base, {}};
  for (std::size_t i = 0; i < f.c.size(); i += p) r.c.push_back(pth_root(f.c[i]));
  return poly_trim(r);
}

std::string key(const Poly& f) {
  std::string s = std::to_string(poly_deg(f)) + ":";
  for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) {
    for (int64_t v : it->galois().c) s += std::to_string(v) + ",";
    s += "|";
  }
  return s;
}

}  // namespace

std::vector<std::pair<Poly, int>> squarefree_factorization(const Poly& f0) {
  std::vector<std::pair<Poly, int>> out;
  Poly f = poly_monic(poly_trim(f0));
  if (poly_deg(f) < 1) return out;
  Poly c = poly_monic(poly_gcd(f, poly_deriv(f)));
  Poly w = pdiv(f, c);
  int i = 1;
  while (poly_deg(w) > 0) {
    Poly y = poly_monic(poly_gcd(w, c));
    Poly fac = pdiv(w, y);
    if (poly_deg(fac) > 0) out.push_back({poly_monic(fac), i});
    w = y;
    c = pdiv(c, y);
    ++i;
  }
  if (poly_deg(c) > 0) {
    const int p = f.base->p;
    for (auto& [g, e] : squarefree_factorization(poly_pth_root(c))) out.push_back({g, e * p});
  }
  return out;
}

std::vector<Poly> distinct_degree_factorization(const Poly& f0, std::vector<int>* degrees) {
  std::vector<Poly> out;
  Poly f = poly_monic(f0);
  const Layer* F = f.base;
  const int64_t q = F->q();
  Poly x = px(F), h = pmod(x, f);
  for (int i = 1; 2 * i <= poly_deg(f); ++i) {
    h = poly_powmod(h, q, f);
    Poly g = poly_monic(poly_gcd(poly_sub(h, x), f));
    if (poly_deg(g) > 0) {
      out.push_back(g);
      if (degrees) degrees->push_back(i);
      f = pdiv(f, g);
      h = pmod(h, f);
    }
  }
  if (poly_deg(f) > 0) {
    out.push_back(f);
    if (degrees) degrees->push_back(poly_deg(f));
  }
  return out;
}

std::vector<Poly> equal_degree_factorization(const Poly& f0, int d) {
  Poly f = poly_monic(f0);
  if (poly_deg(f) <= d) return {f};
  const Layer* F = f.base;
  const std::vector<Elem> elems = galois_elements(F);
  std::mt19937_64 rng(0x5eed + poly_deg(f));
  const int64_t q = F->q();
  while (true) {
    Poly a{F, {}};
    for (int i = 0; i < poly_deg(f); ++i) a.c.push_back(elems[rng() % elems.size()]);
    a = poly_trim(a);
    if (poly_deg(a) < 1) continue;
    Poly g;
    if (F->p == 2) {
      // absolute trace a + a^2 + ... + a^{2^{ed-1}}
      Poly t = pmod(a, f), acc = t;
      for (int i = 1; i < F->gr_e * d; ++i) {
        t = pmod(poly_mul(t, t), f);
        acc = poly_add(acc, t);
      }
      g = poly_gcd(acc, f);
    } else {
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      Poly b = poly_powmod(a, e.get_str(), f);
      g = poly_gcd(poly_sub(b, poly_const(F, one(F))), f);
    }
    if (poly_deg(g) > 0 && poly_deg(g) < poly_deg(f)) {
      auto l = equal_degree_factorization(g, d);
      auto r = equal_degree_factorization(pdiv(f, poly_monic(g)), d);
      l.insert(l.end(), r.begin(), r.end());
      return l;
    }
  }
}

std::vector<std::pair<Poly, int>> factor_poly(const Poly& f) {
  if (f.base->kind != LayerKind::Galois || f.base->gr_n != 1)
    throw UnsupportedResidueField("factorization needs a finite field");
  std::vector<std::pair<Poly, int>> out;
  for (const auto& [sf, e] : squarefree_factorization(f)) {
    std::vector<int> degs;
    auto parts = distinct_degree_factorization(sf, &degs);
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (auto& g : equal_degree_factorization(parts[i], degs[i])) out.push_back({poly_monic(g), e});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return key(a.first) < key(b.first); });
  // merge repeats (possible when several square-free layers share a factor)
  std::vector<std::pair<Poly, int>> merged;
  for (auto& t : out) {
    if (!merged.empty() && poly_eq(merged.back().first, t.first))
      merged.back().second += t.second;
    else
      merged.push_back(t);
  }
  return merged;
}

// ---- places -----------------------------------------------------------------

bool operator<(const Place& a, const Place& b) {
  if (a.infinity != b.infinity) return b.infinity;
  if (a.degree != b.degree) return a.degree < b.degree;
  return a.name < b.name;
}

Place place_infinity(const Layer*) {
  Place v;
  v.infinity = true;
  v.name = "inf";
  return v;
}

Place place_from_poly(const Layer* Kglob, const Poly& P) {
  if (Kglob->kind != LayerKind::Rational) throw UnsupportedRing("places need a rational function field");
  Place v;
  v.P = poly_monic(P);
  v.degree = poly_deg(v.P);
  if (v.degree < 1) throw ShapeMismatch("place polynomial must have positive degree");
  if (factor_poly(v.P).size() != 1 || factor_poly(v.P)[0].second != 1)
    throw ShapeMismatch("place polynomial must be irreducible");
  Poly one_p = poly_const(Kglob->base, one(Kglob->base));
  v.name = render(Elem::make_rational(Kglob, v.P, one_p));
  return v;
}

Place parse_place(const std::string& src, const Layer* Kglob) {
  std::string s = src;
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s == "inf" || s == "oo" || s == "infinity") return place_infinity(Kglob);
  Elem e = parse_elem(src, Kglob);
  const RationalData& d = e.rational();
  if (poly_deg(d.den) != 0) throw ParseError("place must be a polynomial", 0, "polynomial in " + Kglob->var);
  return place_from_poly(Kglob, d.num);
}

const Layer* completion_layer(const Layer* Kglob, const Place& v, int prec) {
  const Layer* F = Kglob->base;
  if (F->kind != LayerKind::Galois || F->gr_n != 1)
    throw UnsupportedResidueField("completions need F_q(x) with F_q finite");
  if (v.infinity || v.degree == 1) return laurent_layer(F, "t", prec);
  if (F->gr_e != 1) throw UnsupportedResidueField("places of degree > 1 need a prime constant field");
  std::vector<int64_t> dp;
  for (const auto& c : v.P.c) dp.push_back(c.galois().c[0]);
  return laurent_layer(galois_layer(F->p, 1, v.degree, dp, "a"), "t", prec);
}

namespace {

// coefficient of F_q mapped into the residue field of the completion
Elem to_residue(const Elem& c, const Layer* kv) {
  if (c.layer() == kv) return c;
  return from_int(kv, c.galois().c[0]);
}

Elem eval_poly(const Poly& P, const Elem& X) {
  const Layer* K = X.layer();
  Elem r = zero(K);
  for (std::size_t i = P.c.size(); i-- > 0;) r = add(mul(r, X), monomial(K, to_residue(P.c[i], K->base), 0));
  return r;
}

// the image of x in kappa_v[[t]] with t = P(x)
Elem local_x(const Layer* Kv, const Place& v, int prec) {
  const Layer* kv = Kv->base;
  if (v.infinity) return monomial(Kv, one(kv), -1);
  if (v.degree == 1) return add(monomial(Kv, neg(to_residue(v.P.c[0], kv)), 0), monomial(Kv, one(kv), 1));
  Poly dP = poly_deriv(v.P);
  Elem pi = monomial(Kv, one(kv), 1);
  Elem X = monomial(Kv, generator(kv), 0);
  for (int done = 1; done < 2 * prec; done *= 2) {
    Elem num = sub(eval_poly(v.P, X), pi);
    X = with_prec(sub(X, div(num, eval_poly(dP, X))), prec);
  }
  return X;
}

}  // namespace

Elem completion_at_place(const Elem& f, const Place& v, int prec) {
  const Layer* Kglob = f.layer();
  if (Kglob->kind != LayerKind::Rational) throw UnsupportedRing("completion needs an element of F_q(x)");
  const Layer* Kv = completion_layer(Kglob, v, prec);
  Elem X = local_x(Kv, v, prec);
  const RationalData& d = f.rational();
  return div(eval_poly(d.num, X), eval_poly(d.den, X));
}

WittVector completion_at_place(const WittVector& f, const Place& v, int prec) {
  WittVector w{completion_layer(f.layer, v, prec), {}};
  for (const auto& c : f.x) w.x.push_back(completion_at_place(c, v, prec));
  return w;
}

std::vector<Place> candidate_places(const GroupPoint& x, const Layer* Kglob) {
  std::vector<Place> out{place_infinity(Kglob)};
  auto add_factors = [&](const Poly& P) {
    if (poly_deg(P) < 1) return;
    for (const auto& [g, e] : factor_poly(P)) {
      Place v = place_from_poly(Kglob, g);
      bool seen = false;
      for (const auto& w : out) seen = seen || (!w.infinity && w.name == v.name);
      if (!seen) out.push_back(v);
    }
  };
  for (const auto& t : x.torus) {
    add_factors(t.rational().num);
    add_factors(t.rational().den);
  }
  for (const auto& w : x.witt)
    for (const auto& c : w.x) add_factors(c.rational().den);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wittfil
