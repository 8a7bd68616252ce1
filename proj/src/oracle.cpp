#include "wittfil/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <unordered_map>

namespace wittfil {
namespace oracle {

namespace {

uint64_t clmul(uint64_t a, uint64_t b) {
  uint64_t r = 0;
  while (b) {
    int k = std::countr_zero(b);
    if (a && std::bit_width(a) + k > 64) throw SearchSpaceExceeded("oracle pole order above 63");
    r ^= a << k;
    b &= b - 1;
  }
  return r;
}

uint64_t spread(uint64_t a) {
  uint64_t r = 0;
  while (a) {
    int k = std::countr_zero(a);
    if (2 * k >= 64) throw SearchSpaceExceeded("oracle pole order above 63");
    r |= uint64_t{1} << (2 * k);
    a &= a - 1;
  }
  return r;
}

Polar padd(const Polar& a, const Polar& b) { return {a.lo ^ b.lo, a.hi ^ b.hi}; }

// (A0 + g A1)(B0 + g B1) with g^2 = g + 1
Polar pmul(const Polar& a, const Polar& b) {
  uint64_t a0b0 = clmul(a.lo, b.lo), a1b1 = clmul(a.hi, b.hi);
  uint64_t cross = clmul(a.lo, b.hi) ^ clmul(a.hi, b.lo);
  return {a0b0 ^ a1b1, cross ^ a1b1};
}

Polar psq(const Polar& a) { return {spread(a.lo ^ a.hi), spread(a.hi)}; }

std::vector<Polar> polys(int q, int k) {
  std::vector<Polar> out;
  const uint64_t span = uint64_t{1} << k;
  for (uint64_t lo = 0; lo < span; ++lo) {
    if (q == 2) {
      out.push_back({lo << 1, 0});
      continue;
    }
    for (uint64_t hi = 0; hi < span; ++hi) out.push_back({lo << 1, hi << 1});
  }
  return out;
}

struct PVecHash {
  std::size_t operator()(const PVec& v) const {
    uint64_t h = v.s0.lo * 0x9E3779B97F4A7C15ULL;
    h ^= v.s0.hi + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    h ^= v.s1.lo * 0xC2B2AE3D27D4EB4FULL + (h << 6) + (h >> 2);
    h ^= v.s1.hi * 0x165667B19E3779F9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

PVec pneg(const PVec& a, int n) {
  if (n == 1) return a;
  return {a.s0, padd(a.s1, psq(a.s0))};
}

}  // namespace

int pole(const Polar& a) {
  uint64_t m = a.lo | a.hi;
  return m ? std::bit_width(m) - 1 : 0;
}

int naive(const PVec& x, int n) { return n == 1 ? pole(x.s0) : std::max(2 * pole(x.s0), pole(x.s1)); }

PVec add(const PVec& a, const PVec& b, int n) {
  if (n == 1) return {padd(a.s0, b.s0), {}};
  return {padd(a.s0, b.s0), padd(padd(a.s1, b.s1), pmul(a.s0, b.s0))};
}

PVec frob(const PVec& a) { return {psq(a.s0), psq(a.s1)}; }

std::vector<PVec> enumerate_fil(int q, int n, int m) {
  std::vector<PVec> out;
  if (n == 1) {
    for (const auto& a : polys(q, m)) out.push_back({a, {}});
    return out;
  }
  auto top = polys(q, m / 2), low = polys(q, m);
  for (const auto& a : top)
    for (const auto& b : low) out.push_back({a, b});
  return out;
}

Table::Table(int q, int n, const OracleBounds& b) : n_(n) {
  std::unordered_map<PVec, int, PVecHash> best;
  best[PVec{}] = 0;
  for (int j = 1; j <= b.fdeg; ++j) {
    const int mj = b.box >> j;
    if (mj == 0) break;
    std::vector<std::pair<PVec, int>> terms;
    for (const auto& y : enumerate_fil(q, n, mj)) {
      PVec fy = y;
      for (int k = 0; k < j; ++k) fy = frob(fy);
      terms.push_back({fy, naive(y, n)});
    }
    std::unordered_map<PVec, int, PVecHash> next;
    next.reserve(best.size() * terms.size());
    for (const auto& [t, c] : best)
      for (const auto& [fy, cy] : terms) {
        PVec s = add(t, fy, n);
        int cost = std::max(c, cy);
        auto [it, fresh] = next.try_emplace(s, cost);
        if (!fresh && cost < it->second) it->second = cost;
      }
    best = std::move(next);
  }
  entries_.reserve(best.size());
  for (const auto& [t, c] : best) entries_.push_back({c, pneg(t, n)});
  std::sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first, a.second.s0.lo, a.second.s0.hi, a.second.s1.lo, a.second.s1.hi) <
           std::tie(b.first, b.second.s0.lo, b.second.s0.hi, b.second.s1.lo, b.second.s1.hi);
  });
}

int Table::level(const PVec& x) const {
  int best = naive(x, n_);
  for (const auto& [cost, negT] : entries_) {
    if (cost >= best) break;
    best = std::min(best, std::max(cost, naive(add(x, negT, n_), n_)));
  }
  return best;
}

namespace {

int kappa_q(const Layer* K) {
  if (K->kind != LayerKind::Laurent || K->p != 2) throw SearchSpaceExceeded("oracle needs F2((t)) or F4((t))");
  const Layer* k = K->base;
  if (k->kind != LayerKind::Galois || k->gr_n != 1 || k->gr_e > 2)
    throw SearchSpaceExceeded("oracle needs residue field F2 or F4");
  return k->gr_e == 1 ? 2 : 4;
}

Polar polar_part(const Elem& a, int max_pole) {
  Polar r;
  if (!has_valuation(a)) return r;
  int64_t v = valuation(a);
  if (v < -max_pole) throw SearchSpaceExceeded("oracle pole order above " + std::to_string(max_pole));
  for (int64_t k = v; k < 0; ++k) {
    Elem ck = coeff(a, k);
    if (is_zero(ck)) continue;
    const auto& c = ck.galois().c;
    if (c[0]) r.lo |= uint64_t{1} << (-k);
    if (c.size() > 1 && c[1]) r.hi |= uint64_t{1} << (-k);
  }
  return r;
}

Elem from_polar(const Layer* K, const Polar& a) {
  Elem acc = zero(K);
  const Layer* k = K->base;
  for (int e = 1; e < 64; ++e) {
    int lo = (a.lo >> e) & 1, hi = (a.hi >> e) & 1;
    if (!lo && !hi) continue;
    std::vector<int64_t> c{lo};
    if (k->gr_e > 1) c.push_back(hi);
    acc = add(acc, monomial(K, Elem::make_galois(k, c), -e));
  }
  return acc;
}

}  // namespace

PVec from_witt(const WittVector& x) {
  kappa_q(x.layer);
  if (x.n() > 2) throw SearchSpaceExceeded("oracle handles n <= 2");
  if (x.n() == 1) return {polar_part(x.x[0], 63), {}};
  // move the integral part of the weight-one coordinate into W_2(O)
  const Elem& s0 = x.x[0];
  Elem integral = zero(x.layer);
  if (has_valuation(s0)) {
    int64_t hi = 64;
    if (auto pr = precision(s0)) hi = std::min<int64_t>(hi, *pr);
    for (int64_t k = std::max<int64_t>(0, valuation(s0)); k < hi; ++k)
      integral = add(integral, monomial(x.layer, coeff(s0, k), k));
  }
  WittVector y = witt_sub(x, witt_from(x.layer, {integral, zero(x.layer)}));
  return {polar_part(y.x[0], 63), polar_part(y.x[1], 63)};
}

WittVector to_witt(const PVec& x, const Layer* K, int n) {
  std::vector<Elem> c{from_polar(K, x.s0)};
  if (n == 2) c.push_back(from_polar(K, x.s1));
  return witt_from(K, c);
}

}  // namespace oracle

int brute_force_filF_level(const WittVector& x, const OracleBounds& b) {
  using namespace oracle;
  const int q = x.layer->kind == LayerKind::Laurent && x.layer->base->kind == LayerKind::Galois
                    ? (x.layer->base->gr_e == 1 ? 2 : 4)
                    : 0;
  if (x.n() < 1 || x.n() > 2) throw SearchSpaceExceeded("oracle handles n <= 2");
  for (const auto& c : x.x)
    if (has_valuation(c) && valuation(c) < -b.max_pole)
      throw SearchSpaceExceeded("oracle pole order above " + std::to_string(b.max_pole));
  PVec v = from_witt(x);
  const int M = std::min(naive(v, x.n()), b.box);
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, int>, std::shared_ptr<const Table>> cache;
  std::shared_ptr<const Table> t;
  {
    std::lock_guard lock(mu);
    auto key = std::make_tuple(q, x.n(), M, b.fdeg);
    auto it = cache.find(key);
    if (it == cache.end()) {
      OracleBounds bb = b;
      bb.box = M;
      it = cache.emplace(key, std::make_shared<const Table>(q, x.n(), bb)).first;
    }
    t = it->second;
  }
  return t->level(v);
}

}  // namespace wittfil
