#pragma once

#include <cstdint>
#include <vector>

#include "wittfil/witt.hpp"

namespace wittfil {

/// Independent exhaustive search for the fil^F level on tiny instances:
/// p = 2, n <= 2, kappa in {F2, F4}, pole orders <= max_pole.
/// Searches x = x_0 + F x_1 + F^2 x_2 + F^3 x_3 with x_j (j >= 1) ranging over
/// polar vectors in fil_{floor(box / 2^j)}.
struct OracleBounds {
  int max_pole = 8;
  int fdeg = 3;
  int box = 16;  // level budget for the F-parts
};

int brute_force_filF_level(const WittVector& x, const OracleBounds& b = {});

namespace oracle {

/// Polar Laurent polynomial over F2 or F4 in bit-sliced form: bit k of lo/hi
/// holds the F2/g-part of the coefficient of t^{-k}.
struct Polar {
  uint64_t lo = 0, hi = 0;
  bool operator==(const Polar&) const = default;
};

/// Witt vector of length <= 2 with polar components, storage order.
struct PVec {
  Polar s0, s1;
  bool operator==(const PVec&) const = default;
};

int pole(const Polar& a);
int naive(const PVec& x, int n);
PVec add(const PVec& a, const PVec& b, int n);
PVec frob(const PVec& a);

/// Minimal level of x given a precomputed table of reachable F-parts.
class Table {
 public:
  Table(int q, int n, const OracleBounds& b);
  int level(const PVec& x) const;
  std::size_t size() const { return entries_.size(); }

 private:
  int n_;
  std::vector<std::pair<int, PVec>> entries_;  // (cost, sum F^j x_j), sorted by cost
};

/// All polar vectors with naive level <= m.
std::vector<PVec> enumerate_fil(int q, int n, int m);
PVec from_witt(const WittVector& x);
WittVector to_witt(const PVec& x, const Layer* K, int n);

}  // namespace oracle

}  // namespace wittfil
