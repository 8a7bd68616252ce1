#include "wittfil/filtration.hpp"

#include <algorithm>

namespace wittfil {

namespace {

int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

const Layer* top_laurent(const WittVector& x) {
  if (x.layer->kind != LayerKind::Laurent)
    throw UnsupportedRing("filtrations need a Laurent-series base field, got " + x.layer->name);
  return x.layer;
}

}  // namespace

int ord_p(int64_t m, int p) {
  if (m == 0) return 1 << 20;
  int k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return k;
}

int naive_level(const WittVector& x) {
  top_laurent(x);
  const int p = x.p();
  int64_t level = 0;
  for (int j = 0; j < x.n(); ++j) {
    const Elem& a = x.a(j);
    if (!has_valuation(a)) {
      auto pr = precision(a);
      if (pr && *pr < 0) throw PrecisionExhausted("pole order of a component is not determined by its window");
      continue;
    }
    int64_t v = valuation(a);
    if (v < 0) level = std::max(level, -v * ipow(p, j));
  }
  return static_cast<int>(level);
}

bool in_fil(const WittVector& x, int m) { return naive_level(x) <= m; }

bool in_flat_fil(const WittVector& x, int m) {
  if (m < 1) throw ShapeMismatch("flat filtration is defined for m >= 1");
  if (!in_fil(x, m)) return false;
  int i = ord_p(m, x.p());
  if (i >= x.n()) return true;
  const Elem& a = x.a(i);
  if (!has_valuation(a)) return true;
  return ipow(x.p(), i) * valuation(a) > -m;
}

WittVector FilDecomposition::reconstruct() const {
  if (parts.empty()) throw InvalidDecomposition("empty decomposition");
  WittVector acc = witt_zero(parts[0].layer, parts[0].n());
  for (std::size_t j = 0; j < parts.size(); ++j)
    acc = witt_add(acc, witt_F_pow(parts[j], static_cast<int>(j)));
  return acc;
}

bool FilDecomposition::valid() const {
  for (const auto& x : parts)
    if (naive_level(x) > m) return false;
  return true;
}

LevelResult filF_level(const WittVector& x, int max_parts) {
  const Layer* K = top_laurent(x);
  const int p = x.p(), n = x.n();
  std::vector<WittVector> parts{x};
  while (true) {
    int L = 0;
    for (const auto& y : parts) L = std::max(L, naive_level(y));
    if (L == 0) return {0, FilDecomposition{parts, 0}};
    const int o = ord_p(L, p);
    const int itop = std::min(o, n - 1);
    // pushed[j] collects F-reductions coming from part j-1
    std::vector<WittVector> next = parts, pushed(parts.size() + 1, witt_zero(K, n));
    next.push_back(witt_zero(K, n));
    for (std::size_t j = 0; j < parts.size(); ++j) {
      WittVector y = parts[j];
      if (naive_level(y) < L) continue;
      for (int i = itop; i >= 0; --i) {
        const int64_t e = L / ipow(p, i);
        Elem a = coeff(y.a(i), -e);
        if (is_zero(a)) continue;
        if (i == o || !is_pth_power(a)) return {L, FilDecomposition{parts, L}};
        y = witt_sub(y, witt_monomial(K, n, i, monomial(K, a, -e)));
        pushed[j + 1] = witt_add(pushed[j + 1], witt_monomial(K, n, i, monomial(K, pth_root(a), -e / p)));
      }
      next[j] = y;
    }
    for (std::size_t j = 1; j < next.size(); ++j) next[j] = witt_add(next[j], pushed[j]);
    while (next.size() > 1 && witt_is_zero(next.back())) next.pop_back();
    if (static_cast<int>(next.size()) > max_parts)
      throw CapExceeded("level reduction exceeded " + std::to_string(max_parts) + " Frobenius parts");
    parts = std::move(next);
  }
}

bool in_filF(const WittVector& x, int m) { return filF_level(x).s <= m; }

LogForm delta(const WittVector& x) {
  const int p = x.p();
  LogForm acc = form_zero(x.layer, 1);
  for (int i = 0; i < x.n(); ++i) {
    const Elem& a = x.a(i);
    if (is_zero(a)) continue;
    LogForm da = form_d(a);
    int64_t k = ipow(p, i) - 1;
    acc = form_add(acc, k == 0 ? da : form_scale(da, pow(a, k)));
  }
  return acc;
}

bool DBarElement::is_zero() const {
  for (const auto& [j, v] : coeffs)
    for (const auto& c : v)
      if (!wittfil::is_zero(c)) return false;
  return true;
}

bool DBarElement::dlog_zero() const {
  for (const auto& [j, v] : coeffs)
    if (!v.empty() && !wittfil::is_zero(v.back())) return false;
  return true;
}

std::vector<Elem> DBarElement::collapse() const {
  std::vector<Elem> out;
  for (const auto& [j, v] : coeffs) {
    if (out.empty()) {
      out = v;
      continue;
    }
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = add(out[k], v[k]);
  }
  return out;
}

DBarElement theta_bar(const FilDecomposition& d, int m) {
  if (d.parts.empty()) throw InvalidDecomposition("empty decomposition");
  const Layer* K = top_laurent(d.parts[0]);
  DBarElement out;
  out.m = m;
  out.basis = form_basis(K);
  for (std::size_t j = 0; j < d.parts.size(); ++j) {
    const WittVector& x = d.parts[j];
    if (naive_level(x) > m)
      throw InvalidDecomposition("part " + std::to_string(j) + " is not in fil_" + std::to_string(m));
    if (witt_is_zero(x)) continue;
    LogForm w = delta(x);
    std::vector<Elem> v;
    bool nonzero = false;
    for (std::size_t k = 0; k < out.basis.size(); ++k) {
      Elem c = coeff(w.coefficient({static_cast<int>(k)}), -m);
      nonzero = nonzero || !is_zero(c);
      v.push_back(c);
    }
    if (nonzero) out.coeffs[static_cast<int>(j)] = std::move(v);
  }
  return out;
}

int flat_filF_min(const WittVector& x) {
  LevelResult r = filF_level(x);
  if (r.s == 0) return 1;
  return theta_bar(r.witness, r.s).dlog_zero() ? r.s : r.s + 1;
}

bool in_flat_filF(const WittVector& x, int m) {
  if (m < 1) throw ShapeMismatch("flat filtration is defined for m >= 1");
  LevelResult r = filF_level(x);
  if (r.s <= m - 1) return true;
  if (r.s > m) return false;
  return theta_bar(r.witness, r.s).dlog_zero();
}

std::vector<WittVector> prop41_h(const std::vector<WittVector>& ys) {
  std::vector<WittVector> out;
  if (ys.empty()) return out;
  out.push_back(witt_F(ys[0]));
  for (std::size_t j = 1; j < ys.size(); ++j) out.push_back(witt_sub(witt_F(ys[j]), ys[j - 1]));
  out.push_back(witt_neg(ys.back()));
  return out;
}

Prop41Report verify_prop41(const std::vector<WittVector>& xs, int m) {
  Prop41Report rep;
  if (xs.empty()) return rep;
  const int p = xs[0].p();
  for (std::size_t j = 0; j < xs.size(); ++j)
    if (naive_level(xs[j]) > m) rep.failures.push_back("x_" + std::to_string(j) + " not in fil_m");
  FilDecomposition d{xs, m};
  if (!witt_is_zero(d.reconstruct())) rep.failures.push_back("sum of F^j x_j is not zero");
  if (!rep.failures.empty()) {
    rep.in_image = false;
    return rep;
  }
  const std::size_t J = xs.size() - 1;
  if (J == 0) {
    rep.in_image = witt_is_zero(xs[0]);
    if (!rep.in_image) rep.failures.push_back("x_0 nonzero");
    return rep;
  }
  std::vector<WittVector> ys(J);
  ys[J - 1] = witt_neg(xs[J]);
  for (std::size_t j = J - 1; j >= 1; --j) ys[j - 1] = witt_sub(witt_F(ys[j]), xs[j]);
  if (!witt_eq(witt_F(ys[0]), xs[0])) rep.failures.push_back("y_0 does not match F(x_0)");
  for (std::size_t j = 0; j < J; ++j)
    if (naive_level(ys[j]) > m / p) rep.failures.push_back("y_" + std::to_string(j) + " not in fil_[m/p]");
  rep.in_image = rep.failures.empty();
  rep.preimage = std::move(ys);
  return rep;
}

std::string render_dbar(const DBarElement& d) {
  if (d.is_zero()) return "0";
  std::string out;
  for (const auto& [j, v] : d.coeffs) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (is_zero(v[k])) continue;
      if (!out.empty()) out += " + ";
      out += "F^" + std::to_string(j) + "*(" + render(v[k]) + ")*" + d.basis[k].str();
    }
  }
  return out + " (mod t^" + std::to_string(1 - d.m) + ")";
}

}  // namespace wittfil
