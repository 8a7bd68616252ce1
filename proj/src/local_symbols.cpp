#include "wittfil/local_symbols.hpp"

#include <atomic>
#include <cstdlib>

namespace wittfil {

namespace {

std::atomic<int> g_rank_cap{2};

Elem kappa_power(Elem a, int e) {
  // a^{p^e}, e may be negative (finite fields are perfect)
  for (; e > 0; --e) a = frob(a);
  for (; e < 0; ++e) a = pth_root(a);
  return a;
}

// Galois element c (over F_p coefficients) evaluated at the image of the generator.
Elem eval_at_root(const Elem& c, const ResidueExtension& ext) {
  Elem acc = zero(ext.big), pw = one(ext.big);
  for (int64_t v : c.galois().c) {
    if (v) acc = add(acc, mul_int(pw, v));
    pw = mul(pw, ext.root);
  }
  return acc;
}

int tower_rank(const Layer* K) {
  int r = 0;
  const Layer* L = K;
  while (L->kind == LayerKind::Laurent) {
    ++r;
    L = L->base;
  }
  return r;
}

}  // namespace

int rank_cap() { return g_rank_cap.load(); }
void set_rank_cap(int r) { g_rank_cap.store(r); }

ATower a_tower(const Layer* K, int n) {
  ATower T;
  T.K = K;
  T.n = n;
  std::vector<const Layer*> laurents;
  const Layer* L = K;
  while (L->kind == LayerKind::Laurent) {
    laurents.push_back(L);
    L = L->base;
  }
  if (laurents.empty()) throw UnsupportedRing("local symbols need a Laurent-series field");
  if (L->kind != LayerKind::Galois || L->gr_n != 1)
    throw UnsupportedResidueField("local symbols need a finite constant field, got " + L->name);
  T.r = static_cast<int>(laurents.size());
  if (T.r > rank_cap()) throw RankCapExceeded("tower rank " + std::to_string(T.r) + " above cap");
  T.kappa = L;
  const Layer* A = galois_layer(L->p, n, L->gr_e, L->defpoly, L->gen);
  for (auto it = laurents.rbegin(); it != laurents.rend(); ++it)
    A = laurent_layer(A, (*it)->var, (*it)->default_prec);
  T.A = A;
  return T;
}

Elem teichmuller_lift(const Elem& a, const Layer* A) {
  if (A->kind == LayerKind::Galois) return gr_teichmuller(A, a);
  const LaurentData& d = a.laurent();
  std::vector<Elem> c;
  c.reserve(d.c.size());
  for (const auto& x : d.c) c.push_back(teichmuller_lift(x, A->base));
  return Elem::make_laurent(A, d.val, std::move(c), d.prec);
}

Elem phi_n(const WittVector& f, const Layer* A) {
  const int n = f.n(), p = f.p();
  Elem acc = zero(A);
  int64_t pk = 1;
  for (int k = 0; k < n; ++k) {
    if (!is_zero(f.x[k])) {
      int64_t e = 1;
      for (int i = 0; i < n - 1 - k; ++i) e *= p;
      acc = add(acc, mul_int(pow(teichmuller_lift(f.x[k], A), e), pk));
    }
    pk *= p;
  }
  return acc;
}

Elem local_symbol_gm(const Elem& f, const Elem& g) {
  if (f.layer()->kind != LayerKind::Laurent) throw UnsupportedRing("tame symbol needs kappa((t))");
  if (is_zero(f) || is_zero(g)) throw DivisionByZero("tame symbol of zero");
  const int64_t vf = valuation(f), vg = valuation(g);
  Elem u = div(pow(g, vf), pow(f, vg));
  if ((vf * vg) % 2 != 0) u = neg(u);
  return coeff(u, 0);
}

Elem local_symbol_ga(const Elem& f, const Elem& g) {
  return residue1(form_scale(form_dlog(g), f));
}

WittVector local_symbol_wn(const WittVector& f, const std::vector<Elem>& g) {
  ATower T = a_tower(f.layer, f.n());
  if (static_cast<int>(g.size()) != T.r)
    throw ShapeMismatch("symbol has " + std::to_string(g.size()) + " entries, field has rank " + std::to_string(T.r));
  LogForm w = form_scalar(phi_n(f, T.A));
  for (const auto& gi : g) {
    if (is_zero(gi)) throw DivisionByZero("symbol entry is zero");
    w = form_wedge(w, form_dlog(teichmuller_lift(coerce(gi, T.K), T.A)));
  }
  Elem res = higher_residue(w);
  for (int i = 0; i < f.n() - 1; ++i) res = gr_sigma_inv(res);
  return galois_to_witt(res, T.kappa);
}

ResidueExtension residue_extension(const Layer* kappa, int d) {
  if (kappa->kind != LayerKind::Galois || kappa->gr_n != 1) throw UnsupportedResidueField("need a finite field");
  ResidueExtension ext;
  ext.small = kappa;
  ext.big = d == 1 ? kappa : galois_layer(kappa->p, 1, kappa->gr_e * d);
  if (kappa->gr_e == 1) {
    ext.root = one(ext.big);  // prime field: only constant coefficients occur
    return ext;
  }
  if (d == 1) {
    ext.root = generator(kappa);
    return ext;
  }
  Poly f{ext.big, {}};
  for (int64_t c : kappa->defpoly) f.c.push_back(from_int(ext.big, c));
  for (const auto& x : galois_elements(ext.big))
    if (is_zero(poly_eval(f, x))) {
      ext.root = x;
      return ext;
    }
  throw UnsupportedResidueField("no root of the modulus in the extension");
}

const Layer* extend_layer(const Layer* L, const ResidueExtension& ext) {
  if (L == ext.small) return ext.big;
  if (L->kind != LayerKind::Laurent) throw UnsupportedRing("residue extension of " + L->name);
  return laurent_layer(extend_layer(L->base, ext), L->var, L->default_prec);
}

Elem extend_elem(const Elem& a, const ResidueExtension& ext) {
  if (a.layer() == ext.small) return ext.small == ext.big ? a : eval_at_root(a, ext);
  const Layer* T = extend_layer(a.layer(), ext);
  const LaurentData& d = a.laurent();
  std::vector<Elem> c;
  for (const auto& x : d.c) c.push_back(extend_elem(x, ext));
  return Elem::make_laurent(T, d.val, std::move(c), d.prec);
}

WittVector extend_witt(const WittVector& f, const ResidueExtension& ext) {
  WittVector w{extend_layer(f.layer, ext), {}};
  for (const auto& x : f.x) w.x.push_back(extend_elem(x, ext));
  return w;
}

int extension_degree_for(const Layer* kappa, int64_t bound) {
  const int64_t q = kappa->q();
  int d = 1;
  for (int64_t Q = q; Q <= bound; Q *= q) ++d;
  return d;
}

Elem multiplicative_generator(const Layer* Fq) {
  const int64_t q = Fq->q();
  for (const auto& x : galois_elements(Fq)) {
    if (is_zero(x)) continue;
    Elem y = x;
    int64_t ord = 1;
    while (!is_one(y)) {
      y = mul(y, x);
      ++ord;
    }
    if (ord == q - 1) return x;
  }
  throw UnsupportedResidueField("no generator found");
}

Elem residue_with_unit(const Elem& phi, const Elem& b_lift, int j) {
  // dlog(1 + b t^j) = j sum_{k>=1} (-1)^{k-1} b^k t^{jk} dlog t
  Elem acc = zero(phi.layer()->base);
  if (is_zero(phi)) return acc;
  const int64_t v = valuation(phi);
  Elem bk = b_lift;
  for (int64_t k = 1; -j * k >= v; ++k) {
    Elem c = coeff(phi, -j * k);
    if (!is_zero(c)) acc = k % 2 ? add(acc, mul(c, bk)) : sub(acc, mul(c, bk));
    bk = mul(bk, b_lift);
  }
  return mul_int(acc, j);
}

int symbol_vanishing_threshold_wn(const WittVector& f, int B) {
  ATower T0 = a_tower(f.layer, f.n());
  if (T0.r != 1) throw ShapeMismatch("threshold is defined on kappa((t))");
  const int N = naive_level(f);
  if (B < 0) B = N + 1;
  if (B < N + 1) throw ShapeMismatch("threshold bound must exceed the naive level");
  const int d = extension_degree_for(T0.kappa, static_cast<int64_t>(f.p()) * std::max(N, 1));
  ResidueExtension ext = residue_extension(T0.kappa, d);
  WittVector g = extend_witt(f, ext);
  ATower T = a_tower(g.layer, g.n());
  Elem phi = phi_n(g, T.A);
  const Layer* A0 = T.A->base;
  std::vector<Elem> lifts;
  for (const auto& b : galois_elements(ext.big))
    if (!is_zero(b)) lifts.push_back(gr_teichmuller(A0, b));
  for (int j = B; j >= 1; --j)
    for (const auto& bl : lifts)
      if (!is_zero(residue_with_unit(phi, bl, j))) return j + 1;
  return 0;  // constants pair trivially with W_n
}

int symbol_vanishing_threshold_gm(const Elem& f, int B) {
  const Layer* K = f.layer();
  ATower T0 = a_tower(K, 1);
  if (T0.r != 1) throw ShapeMismatch("threshold is defined on kappa((t))");
  const int64_t v = valuation(f);
  const int d = extension_degree_for(T0.kappa, std::abs(v) + 1);
  ResidueExtension ext = residue_extension(T0.kappa, d);
  Elem g = extend_elem(f, ext);
  const Layer* K2 = g.layer();
  const Elem c = multiplicative_generator(ext.big);
  for (int j = B; j >= 1; --j)
    for (const auto& b : galois_elements(ext.big)) {
      if (is_zero(b)) continue;
      Elem u = add(one(K2), monomial(K2, b, j));
      if (!is_one(local_symbol_gm(g, u))) return j + 1;
    }
  if (!is_one(local_symbol_gm(g, coerce(c, K2)))) return 1;
  return 0;
}

UnitFiltrationGen s_map(const Layer* K, int m, const Elem& a, const std::vector<Elem>& bs) {
  const int r = tower_rank(K);
  if (m < 1) throw ShapeMismatch("s_m needs m >= 1");
  if (static_cast<int>(bs.size()) != r - 1) throw ShapeMismatch("s_m needs r-1 entries");
  UnitFiltrationGen g{'V', m, {}};
  g.symbol.push_back(add(one(K), mul(coerce(a, K), pow(generator(K), m))));
  for (const auto& b : bs) g.symbol.push_back(coerce(b, K));
  return g;
}

UnitFiltrationGen sprime_map(const Layer* K, int m, const Elem& a, const std::vector<Elem>& bs) {
  const int r = tower_rank(K);
  if (m < 1) throw ShapeMismatch("s'_m needs m >= 1");
  if (r < 2 || static_cast<int>(bs.size()) != r - 2) throw ShapeMismatch("s'_m needs r-2 entries and r >= 2");
  UnitFiltrationGen g{'U', m, {}};
  g.symbol.push_back(add(one(K), mul(coerce(a, K), pow(generator(K), m))));
  for (const auto& b : bs) g.symbol.push_back(coerce(b, K));
  g.symbol.push_back(generator(K));
  return g;
}

int sign_prop64(int p) { return p == 2 ? 1 : -1; }
int sign_prop73_21(int) { return 1; }
int sign_prop73_22(int p) { return p == 2 ? 1 : -1; }

namespace {

// theta_bar at level m of phi, through the greedy witness.
DBarElement graded_image(const WittVector& phi, int m) {
  LevelResult lr = filF_level(phi);
  if (lr.s > m) throw InvalidDecomposition("element is not in fil^F_" + std::to_string(m));
  FilDecomposition d = lr.witness;
  d.m = m;
  return theta_bar(d, m);
}

WittVector v_power(const Layer* kappa, int n, const Elem& c) { return witt_monomial(kappa, n, 0, c); }

}  // namespace

WittVector prop64_predict(const WittVector& phi, int m, const Elem& b) {
  ATower T = a_tower(phi.layer, phi.n());
  if (T.r != 1) throw ShapeMismatch("r = 1 formula");
  DBarElement db = graded_image(phi, m);
  const int n = phi.n(), p = phi.p();
  Elem acc = zero(T.kappa);
  for (const auto& [j, v] : db.coeffs) acc = add(acc, kappa_power(mul(v.back(), b), j + 1 - n));
  return v_power(T.kappa, n, mul_int(acc, sign_prop64(p)));
}

WittVector prop73_21_predict(const WittVector& phi, int m, const Elem& beta) {
  ATower T = a_tower(phi.layer, phi.n());
  if (T.r != 2) throw ShapeMismatch("r = 2 formula");
  DBarElement db = graded_image(phi, m);
  const int n = phi.n(), p = phi.p();
  const Layer* k1 = T.K->base;
  Elem acc = zero(T.kappa);
  for (const auto& [j, v] : db.coeffs)
    acc = add(acc, kappa_power(coeff(mul(v.back(), coerce(beta, k1)), 0), j + 1 - n));
  return v_power(T.kappa, n, mul_int(acc, sign_prop73_21(p)));
}

WittVector prop73_22_predict(const WittVector& phi, int m, const Elem& beta) {
  ATower T = a_tower(phi.layer, phi.n());
  if (T.r != 2) throw ShapeMismatch("r = 2 formula");
  if (!in_flat_filF(phi, m)) throw InvalidDecomposition("element is not in the flat fil^F_" + std::to_string(m));
  DBarElement db = graded_image(phi, m);
  const int n = phi.n(), p = phi.p();
  const Layer* k1 = T.K->base;
  Elem acc = zero(T.kappa);
  for (const auto& [j, v] : db.coeffs) {
    if (!is_zero(v.back())) throw InvalidDecomposition("graded image has a dlog t_2 part");
    acc = add(acc, kappa_power(coeff(mul(v.front(), coerce(beta, k1)), 0), j + 1 - n));
  }
  return v_power(T.kappa, n, mul_int(acc, sign_prop73_22(p)));
}

std::vector<UnitFiltrationGen> unit_generators(const Layer* K, int m, char kind, int span) {
  const int r = tower_rank(K);
  ATower T = a_tower(K, 1);
  std::vector<UnitFiltrationGen> out;
  const Layer* low = K->base;
  // coefficient family in k_{r-1}: kappa constants times powers of t_{r-1}
  std::vector<Elem> coeffs;
  for (const auto& c : galois_elements(T.kappa)) {
    if (is_zero(c)) continue;
    if (r == 1) {
      coeffs.push_back(c);
      continue;
    }
    for (int k = -span; k <= span; ++k) coeffs.push_back(monomial(low, c, k));
  }
  std::vector<std::vector<Elem>> tails;
  if (r == 1) {
    tails.push_back({});
  } else {
    Elem t1 = coerce(generator(low), K), t2 = generator(K), u1 = one(K);
    tails = {{t1}, {add(u1, t1)}, {add(u1, t2)}, {mul(t1, add(u1, t2))}};
    if (kind == 'U') {
      tails.push_back({t2});
      tails.push_back({add(t1, t2)});
    }
  }
  const int jmin = std::max(m, 1);
  for (int j = jmin; j <= jmin + span; ++j)
    for (const auto& a : coeffs)
      for (const auto& tail : tails) {
        UnitFiltrationGen g{kind, m, {add(one(K), mul(coerce(a, K), pow(generator(K), j)))}};
        g.symbol.insert(g.symbol.end(), tail.begin(), tail.end());
        out.push_back(std::move(g));
      }
  return out;
}

ProbeReport probe_filtration_via_pairing(const WittVector& f, int m, char kind, int span) {
  ProbeReport rep;
  for (const auto& g : unit_generators(f.layer, m, kind, span)) {
    ++rep.generators;
    WittVector v = local_symbol_wn(f, g.symbol);
    if (!witt_is_zero(v)) rep.nonzero.push_back(render_symbol(g.symbol) + " -> " + render_witt(v));
  }
  return rep;
}

std::string render_symbol(const std::vector<Elem>& g) {
  std::string s = "{";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "; " : "") + render(g[i]);
  return s + "}";
}

std::vector<Elem> parse_symbol(const std::string& src, const Layer* K) {
  std::size_t a = src.find_first_not_of(" \t");
  std::size_t b = src.find_last_not_of(" \t");
  if (a == std::string::npos || src[a] != '{') throw ParseError("symbol must start with '{'", a == std::string::npos ? 0 : a, "{");
  if (src[b] != '}') throw ParseError("symbol must end with '}'", b, "}");
  std::vector<Elem> out;
  int depth = 0;
  std::size_t start = a + 1;
  for (std::size_t i = a + 1; i <= b; ++i) {
    char c = src[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == ';' && depth == 0) || i == b) {
      std::string part = src.substr(start, i - start);
      try {
        out.push_back(parse_elem(part, K));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), start + e.position(), e.expected());
      }
      start = i + 1;
    }
  }
  return out;
}

}  // namespace wittfil
