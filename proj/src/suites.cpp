#include "wittfil/suites.hpp"

#include <functional>
#include <map>
#include <mutex>

#include "suite_util.hpp"

namespace wittfil {

namespace suite {

Elem rand_scalar(const Layer* kappa, Rng& g) {
  switch (kappa->kind) {
    case LayerKind::Galois: {
      std::vector<int64_t> c;
      for (int i = 0; i < kappa->gr_e; ++i) c.push_back(static_cast<int64_t>(g() % static_cast<uint64_t>(kappa->modulus)));
      return Elem::make_galois(kappa, c);
    }
    case LayerKind::Rational: {
      const Layer* b = kappa->base;
      Poly num{b, {rand_scalar(b, g), rand_scalar(b, g), rand_scalar(b, g)}};
      Poly den{b, {rand_nonzero_scalar(b, g), one(b)}};
      if (uniform(g, 0, 2) == 0) den = Poly{b, {one(b)}};
      return Elem::make_rational(kappa, num, den);
    }
    case LayerKind::Perfection:
      return coerce(rand_scalar(kappa->base, g), kappa);
    case LayerKind::Laurent:
      return rand_laurent(kappa, g, 2, 2, 2);
  }
  return zero(kappa);
}

Elem rand_nonzero_scalar(const Layer* kappa, Rng& g) {
  for (;;) {
    Elem a = rand_scalar(kappa, g);
    if (!is_zero(a) && (kappa->kind != LayerKind::Galois || kappa->gr_n == 1 || !gr_divisible_by_p(a))) return a;
  }
}

Elem rand_laurent(const Layer* K, Rng& g, int pole, int hi, int terms) {
  Elem s = zero(K);
  for (int i = 0; i < terms; ++i) s = add(s, monomial(K, rand_scalar(K->base, g), uniform(g, -pole, hi)));
  return s;
}

Elem rand_ring(const Layer* L, Rng& g) {
  if (L->kind == LayerKind::Laurent) return rand_laurent(L, g, 3, 3, 3);
  return rand_scalar(L, g);
}

WittVector rand_witt_ring(const Layer* L, int n, Rng& g) {
  WittVector w{L, {}};
  for (int i = 0; i < n; ++i) w.x.push_back(rand_ring(L, g));
  return w;
}

WittVector rand_fil(const Layer* K, int n, int m, Rng& g, int terms) {
  WittVector w = witt_zero(K, n);
  int64_t pw = 1;
  for (int j = 0; j < n; ++j, pw *= K->p)
    w.x[static_cast<std::size_t>(n - 1 - j)] = rand_laurent(K, g, static_cast<int>(m / pw), 1, terms);
  return w;
}

WittVector rand_filF(const Layer* K, int n, int m, Rng& g, int jmax) {
  WittVector w = rand_fil(K, n, m, g);
  for (int j = 1; j <= jmax; ++j)
    if (uniform(g, 0, 1)) w = witt_add(w, witt_F_pow(rand_fil(K, n, m, g, 1), j));
  return w;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

std::string cli_level(const Layer* K, const WittVector& w) {
  return "wittfil level -p " + std::to_string(K->p) + " -n " + std::to_string(w.n()) + " --field " + quote(K->name) +
         " " + quote(render_witt(w));
}

}  // namespace suite

namespace {

using Body = void (*)(SuiteReport&, uint64_t, long);

const std::map<std::string, Body>& registry() {
  using namespace suite;
  static const std::map<std::string, Body> r{
      {"witt-ring-axioms", suite_witt_ring_axioms},
      {"ghost-equivalence", suite_ghost},
      {"filF-oracle", suite_filF_oracle},
      {"filF-closed-form", suite_filF_closed_form},
      {"prop4.1", suite_prop41},
      {"prop4.6", suite_prop46},
      {"thm5.3", suite_thm53},
      {"thm3.3", suite_thm33},
      {"swan-jumps", suite_swan},
      {"prop4.8", suite_prop48},
      {"asw-invariance", suite_asw},
      {"symbol-laws", suite_symbol_laws},
      {"prop6.3", suite_prop63},
      {"prop6.4", suite_prop64},
      {"prop7.3", suite_prop73},
      {"prop7.5-surface", suite_prop75},
      {"lemma8.1", suite_lemma81},
      {"cor8.4", suite_cor84},
      {"wild-strictness", suite_wild},
      {"thm8.5", suite_thm85},
      {"thm8.6", suite_thm86},
      {"lemma8.8", suite_lemma88},
  };
  return r;
}

using Extra = std::map<std::string, std::function<void(SuiteReport&, uint64_t, long)>>;
std::mutex extra_mu;
Extra& extra() {
  static Extra e;
  return e;
}

}  // namespace

void register_suite(const std::string& name, std::function<void(SuiteReport&, uint64_t, long)> body) {
  std::lock_guard<std::mutex> lk(extra_mu);
  extra()[name] = std::move(body);
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

SuiteReport run_suite(const std::string& name, uint64_t seed, long trials) {
  SuiteReport r;
  r.name = name;
  auto it = registry().find(name);
  if (it != registry().end()) {
    it->second(r, seed, trials);
    return r;
  }
  std::function<void(SuiteReport&, uint64_t, long)> body;
  {
    std::lock_guard<std::mutex> lk(extra_mu);
    auto jt = extra().find(name);
    if (jt == extra().end()) throw UnknownSuite("unknown suite '" + name + "'");
    body = jt->second;
  }
  body(r, seed, trials);
  return r;
}

}  // namespace wittfil
