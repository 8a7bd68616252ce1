#include "wittfil/witt.hpp"

#include <atomic>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace wittfil {

namespace {

using Mono = std::vector<uint16_t>;
using MP = std::map<Mono, mpz_class>;

std::atomic<int> g_cap{4};

void mp_addto(MP& acc, const MP& b, const mpz_class& scale = 1) {
  for (const auto& [m, c] : b) {
    mpz_class& slot = acc[m];
    slot += scale * c;
    if (slot == 0) acc.erase(m);
  }
}

MP mp_mul(const MP& a, const MP& b) {
  MP r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Mono m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<uint16_t>(ma[i] + mb[i]);
      mpz_class& slot = r[m];
      slot += ca * cb;
      if (slot == 0) r.erase(m);
    }
  return r;
}

MP mp_pow(const MP& a, int k) {
  MP r;
  r[Mono(a.empty() ? 0 : a.begin()->first.size(), 0)] = 1;
  if (a.empty()) return k == 0 ? r : MP{};
  MP b = a;
  while (k > 0) {
    if (k & 1) r = mp_mul(r, b);
    k >>= 1;
    if (k) b = mp_mul(b, b);
  }
  return r;
}

MP mp_var(int nvars, int v) {
  Mono m(nvars, 0);
  m[v] = 1;
  return MP{{m, 1}};
}

mpz_class zpow(int p, int k) {
  mpz_class r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

// w_k in variables offset..offset+n-1
MP ghost_poly(int p, int k, int nvars, int offset) {
  MP r;
  for (int i = 0; i <= k; ++i) {
    MP t = mp_pow(mp_var(nvars, offset + i), static_cast<int>(zpow(p, k - i).get_ui()));
    mp_addto(r, t, zpow(p, i));
  }
  return r;
}

std::vector<IntPoly> compute_polys(WittOp op, int p, int n) {
  const int nv = 2 * n;
  std::vector<MP> S;
  for (int k = 0; k < n; ++k) {
    MP G;
    MP wx = ghost_poly(p, k, nv, 0), wy = ghost_poly(p, k, nv, n);
    switch (op) {
      case WittOp::Add:
        G = wx;
        mp_addto(G, wy);
        break;
      case WittOp::Mul:
        G = mp_mul(wx, wy);
        break;
      case WittOp::Neg:
        mp_addto(G, wx, -1);
        break;
    }
    for (int i = 0; i < k; ++i)
      mp_addto(G, mp_pow(S[i], static_cast<int>(zpow(p, k - i).get_ui())), -zpow(p, i));
    mpz_class d = zpow(p, k);
    for (auto& [m, c] : G) {
      if (c % d != 0) throw UnsupportedRing("structure polynomial is not integral");
      c /= d;
    }
    S.push_back(std::move(G));
  }
  std::vector<IntPoly> out;
  for (auto& s : S) {
    IntPoly ip;
    for (auto& [m, c] : s) ip.terms.push_back({m, c});
    out.push_back(std::move(ip));
  }
  return out;
}

struct Reduced {
  struct Term {
    std::vector<uint16_t> exps;
    int64_t coeff;
  };
  std::vector<std::vector<Term>> comps;
  std::vector<int> max_exp;
};

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

const Reduced& reduced_polys(WittOp op, int p, int n, int64_t modulus) {
  static std::map<std::tuple<int, int, int, int64_t>, std::unique_ptr<Reduced>> cache;
  const std::vector<IntPoly>& S = structure_polys(op, p, n);
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto key = std::make_tuple(static_cast<int>(op), p, n, modulus);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  auto r = std::make_unique<Reduced>();
  r->max_exp.assign(2 * n, 0);
  for (const auto& s : S) {
    std::vector<Reduced::Term> terms;
    for (const auto& t : s.terms) {
      mpz_class c = t.coeff % modulus;
      if (c < 0) c += modulus;
      if (c == 0) continue;
      terms.push_back({t.exps, c.get_si()});
      for (int v = 0; v < 2 * n; ++v) r->max_exp[v] = std::max<int>(r->max_exp[v], t.exps[v]);
    }
    r->comps.push_back(std::move(terms));
  }
  const Reduced& out = *r;
  cache.emplace(key, std::move(r));
  return out;
}

int64_t char_modulus(const Layer* L) { return bottom(L)->modulus; }

WittVector apply_op(WittOp op, const WittVector& a, const WittVector& b) {
  const Layer* L = a.layer;
  const int n = a.n();
  if (op != WittOp::Neg && (b.n() != n)) throw ShapeMismatch("Witt vectors of different lengths");
  const Reduced& R = reduced_polys(op, L->p, n, char_modulus(L));
  std::vector<Elem> vars(2 * n);
  std::vector<bool> nz(2 * n);
  for (int i = 0; i < n; ++i) {
    vars[i] = a.x[i];
    vars[n + i] = op == WittOp::Neg ? zero(L) : coerce(b.x[i], L);
  }
  for (int v = 0; v < 2 * n; ++v) nz[v] = !is_zero(vars[v]) || !is_exact(vars[v]);
  std::vector<std::vector<Elem>> pw(2 * n);
  auto power = [&](int v, int k) -> const Elem& {
    auto& tab = pw[v];
    if (tab.empty()) tab.push_back(one(L));
    while (static_cast<int>(tab.size()) <= k) tab.push_back(mul(tab.back(), vars[v]));
    return tab[k];
  };
  WittVector out{L, {}};
  for (int k = 0; k < n; ++k) {
    Elem acc = zero(L);
    for (const auto& t : R.comps[k]) {
      bool vanish = false;
      for (int v = 0; v < 2 * n && !vanish; ++v)
        if (t.exps[v] > 0 && !nz[v]) vanish = true;
      if (vanish) continue;
      Elem prod;
      bool first = true;
      for (int v = 0; v < 2 * n; ++v) {
        if (t.exps[v] == 0) continue;
        const Elem& f = power(v, t.exps[v]);
        prod = first ? f : mul(prod, f);
        first = false;
      }
      if (first) prod = one(L);
      if (t.coeff != 1) prod = mul(prod, from_int(L, t.coeff));
      acc = add(acc, prod);
    }
    out.x.push_back(acc);
  }
  return out;
}

}  // namespace

int witt_cap() { return g_cap.load(); }
void set_witt_cap(int n) { g_cap.store(n); }

const std::vector<IntPoly>& structure_polys(WittOp op, int p, int n) {
  if (n > witt_cap())
    throw CapExceeded("Witt length " + std::to_string(n) + " exceeds cap " + std::to_string(witt_cap()));
  static std::map<std::tuple<int, int, int>, std::unique_ptr<std::vector<IntPoly>>> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto key = std::make_tuple(static_cast<int>(op), p, n);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  auto v = std::make_unique<std::vector<IntPoly>>(compute_polys(op, p, n));
  const auto& out = *v;
  cache.emplace(key, std::move(v));
  return out;
}

WittVector witt_zero(const Layer* L, int n) { return WittVector{L, std::vector<Elem>(n, zero(L))}; }

WittVector witt_from(const Layer* L, std::vector<Elem> comps) {
  for (auto& c : comps) c = coerce(c, L);
  return WittVector{L, std::move(comps)};
}

WittVector teichmuller(const Elem& a, int n) {
  WittVector w = witt_zero(a.layer(), n);
  w.x[0] = a;
  return w;
}

bool witt_eq(const WittVector& a, const WittVector& b) {
  if (a.n() != b.n()) return false;
  for (int i = 0; i < a.n(); ++i)
    if (!eq(a.x[i], b.x[i])) return false;
  return true;
}

bool witt_is_zero(const WittVector& a) {
  for (const auto& c : a.x)
    if (!is_zero(c)) return false;
  return true;
}

namespace {
// windowed zeros such as O(t^k) must still go through the arithmetic
bool exact_zero(const WittVector& a) {
  for (const auto& c : a.x)
    if (!is_zero(c) || !is_exact(c)) return false;
  return true;
}
}  // namespace

WittVector witt_add(const WittVector& a, const WittVector& b) {
  if (exact_zero(b)) return a;
  if (exact_zero(a)) return witt_coerce(b, a.layer);
  return apply_op(WittOp::Add, a, b);
}

WittVector witt_neg(const WittVector& a) {
  if (a.p() != 2) {
    WittVector r{a.layer, {}};
    for (const auto& c : a.x) r.x.push_back(neg(c));
    return r;
  }
  return apply_op(WittOp::Neg, a, a);
}

WittVector witt_sub(const WittVector& a, const WittVector& b) { return witt_add(a, witt_neg(b)); }

WittVector witt_mul(const WittVector& a, const WittVector& b) { return apply_op(WittOp::Mul, a, b); }

WittVector witt_mul_int(const WittVector& a, int64_t k) {
  if (k < 0) return witt_neg(witt_mul_int(a, -k));
  WittVector r = witt_zero(a.layer, a.n()), b = a;
  while (k > 0) {
    if (k & 1) r = witt_add(r, b);
    k >>= 1;
    if (k) b = witt_add(b, b);
  }
  return r;
}

WittVector witt_F(const WittVector& a) {
  if (bottom(a.layer)->gr_n != 1) throw CharacteristicMismatch("F needs a base ring of characteristic p");
  WittVector r{a.layer, {}};
  for (const auto& c : a.x) r.x.push_back(frob(c));
  return r;
}

WittVector witt_F_pow(const WittVector& a, int j) {
  WittVector r = a;
  for (int i = 0; i < j; ++i) r = witt_F(r);
  return r;
}

WittVector witt_V(const WittVector& a) {
  WittVector r{a.layer, {zero(a.layer)}};
  for (const auto& c : a.x) r.x.push_back(c);
  return r;
}

WittVector witt_truncate(const WittVector& a, int n) {
  if (n > a.n()) throw ShapeMismatch("cannot truncate to a longer length");
  return WittVector{a.layer, std::vector<Elem>(a.x.begin(), a.x.begin() + n)};
}

WittVector witt_extend(const WittVector& a, int n) {
  WittVector r = a;
  while (r.n() < n) r.x.push_back(zero(a.layer));
  return r;
}

WittVector witt_coerce(const WittVector& a, const Layer* L) {
  if (a.layer == L) return a;
  WittVector r{L, {}};
  for (const auto& c : a.x) r.x.push_back(coerce(c, L));
  return r;
}

WittVector witt_monomial(const Layer* L, int n, int j, const Elem& c) {
  WittVector w = witt_zero(L, n);
  w.x[n - 1 - j] = coerce(c, L);
  return w;
}

std::string render_witt(const WittVector& w) {
  std::string s = "W(";
  for (int i = 0; i < w.n(); ++i) s += (i ? "; " : "") + render(w.x[i]);
  return s + ")";
}

WittVector parse_witt(const std::string& src, const Layer* L, int n) {
  std::size_t i = 0;
  while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
  std::vector<Elem> comps;
  std::size_t after = i + 1;
  while (after < src.size() && std::isspace(static_cast<unsigned char>(src[after]))) ++after;
  if (i < src.size() && src[i] == 'W' && after < src.size() && src[after] == '(') {
    std::size_t open = src.find('(', i);
    std::size_t close = src.find_last_of(')');
    if (close == std::string::npos || close < open) throw ParseError("unterminated Witt literal", src.size(), "')'");
    for (std::size_t k = close + 1; k < src.size(); ++k)
      if (!std::isspace(static_cast<unsigned char>(src[k]))) throw ParseError("trailing text after Witt literal", k);
    int depth = 0;
    std::size_t start = open + 1;
    for (std::size_t k = open + 1; k <= close; ++k) {
      char c = src[k];
      if (k == close || (depth == 0 && (c == ';' || c == ','))) {
        std::string part = src.substr(start, k - start);
        try {
          comps.push_back(parse_elem(part, L));
        } catch (const ParseError& e) {
          throw ParseError(e.what(), start + e.position(), e.expected());
        }
        start = k + 1;
      } else if (c == '(') {
        ++depth;
      } else if (c == ')') {
        --depth;
      }
    }
  } else {
    comps.push_back(parse_elem(src, L));
  }
  if (n > 0 && static_cast<int>(comps.size()) != n)
    throw ParseError("Witt literal has " + std::to_string(comps.size()) + " components, expected " +
                         std::to_string(n), 0, std::to_string(n) + " components");
  return WittVector{L, std::move(comps)};
}

// ---- integer backend ----

std::vector<mpz_class> eval_structure_int(WittOp op, int p, const std::vector<mpz_class>& xs,
                                          const std::vector<mpz_class>& ys, const mpz_class& m) {
  const int n = static_cast<int>(xs.size());
  const auto& S = structure_polys(op, p, n);
  std::vector<mpz_class> vars(2 * n);
  for (int i = 0; i < n; ++i) {
    vars[i] = xs[i];
    vars[n + i] = op == WittOp::Neg ? mpz_class(0) : ys[i];
  }
  std::vector<mpz_class> out;
  for (const auto& s : S) {
    mpz_class acc = 0;
    for (const auto& t : s.terms) {
      mpz_class prod = t.coeff;
      for (int v = 0; v < 2 * n; ++v) {
        if (t.exps[v] == 0) continue;
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), vars[v].get_mpz_t(), t.exps[v]);
        prod *= pw;
      }
      acc += prod;
    }
    if (m != 0) {
      acc %= m;
      if (acc < 0) acc += m;
    }
    out.push_back(acc);
  }
  return out;
}

IntWitt int_witt_add(const IntWitt& a, const IntWitt& b) { return {a.p, eval_structure_int(WittOp::Add, a.p, a.x, b.x, 0)}; }
IntWitt int_witt_mul(const IntWitt& a, const IntWitt& b) { return {a.p, eval_structure_int(WittOp::Mul, a.p, a.x, b.x, 0)}; }
IntWitt int_witt_neg(const IntWitt& a) { return {a.p, eval_structure_int(WittOp::Neg, a.p, a.x, a.x, 0)}; }

std::vector<mpz_class> ghost(const IntWitt& a) {
  std::vector<mpz_class> w;
  for (std::size_t k = 0; k < a.x.size(); ++k) {
    mpz_class s = 0;
    for (std::size_t i = 0; i <= k; ++i) {
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), a.x[i].get_mpz_t(), zpow(a.p, static_cast<int>(k - i)).get_ui());
      s += zpow(a.p, static_cast<int>(i)) * pw;
    }
    w.push_back(s);
  }
  return w;
}

// ---- W_n(F_q) and Galois rings ----

Elem witt_to_galois(const WittVector& w, const Layer* gr) {
  Elem acc = zero(gr);
  Elem pk = one(gr);
  for (int k = 0; k < w.n(); ++k) {
    Elem d = w.x[k];
    for (int i = 0; i < k; ++i) d = pth_root(d);
    acc = add(acc, mul(pk, gr_teichmuller(gr, d)));
    pk = mul_int(pk, gr->p);
  }
  return acc;
}

WittVector galois_to_witt(const Elem& a, const Layer* residue) {
  const Layer* gr = a.layer();
  WittVector w{residue, {}};
  Elem r = a;
  for (int k = 0; k < gr->gr_n; ++k) {
    Elem d = Elem::make_galois(residue, gr_reduce(r).galois().c);
    Elem x = d;
    for (int i = 0; i < k; ++i) x = frob(x);
    w.x.push_back(x);
    if (k + 1 < gr->gr_n) r = gr_div_p(sub(r, gr_teichmuller(gr, d)));
  }
  return w;
}

}  // namespace wittfil
