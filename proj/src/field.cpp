#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "field_impl.hpp"

namespace wittfil {

using namespace detail;

// ---- layers ----------------------------------------------------------------

bool Layer::is_field() const {
  switch (kind) {
    case LayerKind::Galois:
      return gr_n == 1;
    case LayerKind::Laurent:
      return base->is_field();
    default:
      return true;
  }
}

bool Layer::is_perfect() const {
  return (kind == LayerKind::Galois && gr_n == 1) || kind == LayerKind::Perfection;
}

int64_t Layer::q() const {
  int64_t r = 1;
  for (int i = 0; i < gr_e; ++i) r *= p;
  return r;
}

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}
std::map<std::string, std::unique_ptr<Layer>>& registry() {
  static std::map<std::string, std::unique_ptr<Layer>> r;
  return r;
}

const Layer* intern(const std::string& key, Layer proto) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& reg = registry();
  auto it = reg.find(key);
  if (it != reg.end()) return it->second.get();
  auto owned = std::make_unique<Layer>(std::move(proto));
  const Layer* out = owned.get();
  reg.emplace(key, std::move(owned));
  return out;
}

std::string ptr_key(const Layer* L) {
  std::ostringstream os;
  os << static_cast<const void*>(L);
  return os.str();
}

std::string poly_string(const std::vector<int64_t>& f, const std::string& x) {
  std::string s;
  for (std::size_t k = f.size(); k-- > 0;) {
    if (f[k] == 0) continue;
    if (!s.empty()) s += "+";
    if (k == 0 || f[k] != 1) s += std::to_string(f[k]);
    if (k >= 1) s += x + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return s;
}

}  // namespace

const Layer* galois_layer(int p, int n, int e, std::vector<int64_t> defpoly, std::string gen) {
  if (p < 2 || n < 1 || e < 1) throw UnsupportedRing("bad Galois ring parameters");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw UnsupportedRing("characteristic must be prime");
  std::vector<int64_t> dflt = smallest_irreducible(p, e);
  if (defpoly.empty()) defpoly = dflt;
  if (static_cast<int>(defpoly.size()) != e + 1 || defpoly.back() != 1)
    throw UnsupportedRing("defining polynomial must be monic of degree e");
  std::string key = "G:" + std::to_string(p) + ":" + std::to_string(n) + ":" + gen + ":" +
                    poly_string(defpoly, "X");
  Layer L;
  L.kind = LayerKind::Galois;
  L.p = p;
  L.gr_n = n;
  L.gr_e = e;
  L.modulus = 1;
  for (int i = 0; i < n; ++i) L.modulus *= p;
  L.defpoly = teichmuller_modulus(p, n, defpoly);
  L.gen = gen;
  int64_t q = L.q();
  if (n == 1)
    L.name = "F" + std::to_string(q);
  else if (e == 1)
    L.name = "Z/" + std::to_string(L.modulus);
  else
    L.name = "W" + std::to_string(n) + "(F" + std::to_string(q) + ")";
  if (defpoly != dflt) L.name += "[" + poly_string(defpoly, gen) + "]";
  return intern(key, std::move(L));
}

const Layer* rational_layer(const Layer* base, const std::string& var) {
  if (!base->is_field() || base->kind == LayerKind::Laurent)
    throw UnsupportedRing("rational functions need a finite or rational base");
  Layer L;
  L.kind = LayerKind::Rational;
  L.p = base->p;
  L.base = base;
  L.depth = base->depth + 1;
  L.var = var;
  if (base->kind == LayerKind::Rational)
    L.name = base->name.substr(0, base->name.size() - 1) + "," + var + ")";
  else
    L.name = base->name + "(" + var + ")";
  return intern("R:" + ptr_key(base) + ":" + var, std::move(L));
}

const Layer* perfection_layer(const Layer* base) {
  if (base->kind != LayerKind::Rational && base->kind != LayerKind::Galois)
    throw UnsupportedRing("perfection is supported over rational function fields only");
  Layer L;
  L.kind = LayerKind::Perfection;
  L.p = base->p;
  L.base = base;
  L.depth = base->depth + 1;
  L.name = base->name + "^perf";
  return intern("P:" + ptr_key(base), std::move(L));
}

const Layer* laurent_layer(const Layer* base, const std::string& var, int default_prec) {
  Layer L;
  L.kind = LayerKind::Laurent;
  L.p = base->p;
  L.base = base;
  L.depth = base->depth + 1;
  L.var = var;
  L.default_prec = default_prec;
  L.name = base->name + "((" + var + "))";
  return intern("L:" + ptr_key(base) + ":" + var + ":" + std::to_string(default_prec), std::move(L));
}

std::vector<const Layer*> chain(const Layer* L) {
  std::vector<const Layer*> out;
  for (; L != nullptr; L = L->base) out.push_back(L);
  std::reverse(out.begin(), out.end());
  return out;
}

const Layer* bottom(const Layer* L) {
  while (L->base) L = L->base;
  return L;
}

bool below_or_equal(const Layer* lo, const Layer* hi) {
  for (; hi != nullptr; hi = hi->base)
    if (hi == lo) return true;
  return false;
}

// ---- Elem payloads ---------------------------------------------------------

const GaloisData& Elem::galois() const { return std::get<GaloisData>(*d_); }
const RationalData& Elem::rational() const {
  return *std::get<std::shared_ptr<const RationalData>>(*d_);
}
const PerfData& Elem::perf() const { return *std::get<std::shared_ptr<const PerfData>>(*d_); }
const LaurentData& Elem::laurent() const {
  return *std::get<std::shared_ptr<const LaurentData>>(*d_);
}

Elem Elem::make_galois(const Layer* L, std::vector<int64_t> c) {
  Elem e;
  e.L_ = L;
  e.d_ = std::make_shared<const Data>(GaloisData{std::move(c)});
  return e;
}

namespace detail {

Elem rat_raw(const Layer* L, Poly num, Poly den) {
  num.base = den.base = L->base;
  return Elem::make_rational_raw(L, std::move(num), std::move(den));
}

}  // namespace detail

Elem Elem::make_rational_raw(const Layer* L, Poly num, Poly den) {
  Elem e;
  e.L_ = L;
  e.d_ = std::make_shared<const Data>(
      std::make_shared<const RationalData>(RationalData{std::move(num), std::move(den)}));
  return e;
}

Elem Elem::make_rational(const Layer* L, Poly num, Poly den) {
  num = poly_trim(std::move(num));
  den = poly_trim(std::move(den));
  num.base = den.base = L->base;
  if (poly_is_zero(den)) throw DivisionByZero("zero denominator");
  if (poly_is_zero(num)) {
    den = poly_const(L->base, one(L->base));
  } else if (poly_deg(den) > 0) {
    Poly g = poly_gcd(num, den);
    if (poly_deg(g) > 0) {
      Poly q, r;
      poly_divmod(num, g, q, r);
      num = q;
      poly_divmod(den, g, q, r);
      den = q;
    }
  }
  Elem lc = den.c.back();
  if (!is_one(lc)) {
    Elem li = inv(lc);
    num = poly_scale(num, li);
    den = poly_scale(den, li);
  }
  return make_rational_raw(L, std::move(num), std::move(den));
}

Elem Elem::make_perf(const Layer* L, int r, Elem inner) {
  inner = coerce(inner, L->base);
  while (r > 0 && rc_deflatable(inner)) {
    inner = rc_deflate(inner);
    --r;
  }
  if (is_zero(inner)) r = 0;
  Elem e;
  e.L_ = L;
  e.d_ = std::make_shared<const Data>(std::make_shared<const PerfData>(PerfData{r, std::move(inner)}));
  return e;
}

Elem Elem::make_laurent(const Layer* L, int64_t val, std::vector<Elem> c, std::optional<int64_t> prec) {
  if (prec && static_cast<int64_t>(c.size()) > *prec - val)
    c.resize(static_cast<std::size_t>(std::max<int64_t>(0, *prec - val)));
  std::size_t lead = 0;
  while (lead < c.size() && is_zero(c[lead])) ++lead;
  if (lead == c.size()) {
    c.clear();
    val = 0;
  } else {
    if (lead > 0) c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(lead));
    val += static_cast<int64_t>(lead);
    while (is_zero(c.back())) c.pop_back();
  }
  Elem e;
  e.L_ = L;
  e.d_ = std::make_shared<const Data>(
      std::make_shared<const LaurentData>(LaurentData{val, std::move(c), prec}));
  return e;
}

}  // namespace wittfil
