#pragma once

#include <map>
#include <string>
#include <vector>

#include "wittfil/forms.hpp"
#include "wittfil/witt.hpp"

namespace wittfil {

/// x = sum_j F^j(parts[j]).
struct FilDecomposition {
  std::vector<WittVector> parts;
  int m = 0;

  WittVector reconstruct() const;
  bool valid() const;  // every part lies in fil_m
};

/// Element of the graded piece at level m: for each F-power j the t^{-m}
/// coefficients of delta(x_j) on the form basis (dlog of the uniformizer last).
struct DBarElement {
  int m = 0;
  std::vector<FormSymbol> basis;
  std::map<int, std::vector<Elem>> coeffs;

  bool is_zero() const;
  bool dlog_zero() const;  // lies in the flat part
  std::vector<Elem> collapse() const;  // sum over j of the coefficient vectors
};

int ord_p(int64_t m, int p);
int naive_level(const WittVector& x);
bool in_fil(const WittVector& x, int m);
bool in_flat_fil(const WittVector& x, int m);

struct LevelResult {
  int s = 0;
  FilDecomposition witness;
};

/// Least s with x in fil^F_s, with a decomposition valid at level s.
LevelResult filF_level(const WittVector& x, int max_parts = 64);
bool in_filF(const WittVector& x, int m);
int flat_filF_min(const WittVector& x);
bool in_flat_filF(const WittVector& x, int m);

LogForm delta(const WittVector& x);
DBarElement theta_bar(const FilDecomposition& d, int m);

struct Prop41Report {
  bool in_image = true;
  std::vector<WittVector> preimage;  // y_0 .. y_{J-1}
  std::vector<std::string> failures;
};

/// Back-substitution for a kernel element of (x_j) -> sum F^j x_j.
Prop41Report verify_prop41(const std::vector<WittVector>& xs, int m);
/// The map h: (y_j) -> (F(y_0), F(y_1) - y_0, ..., -y_{J-1}).
std::vector<WittVector> prop41_h(const std::vector<WittVector>& ys);

std::string render_dbar(const DBarElement& d);

}  // namespace wittfil
