#pragma once

#include <string>
#include <vector>

#include "wittfil/filtration.hpp"
#include "wittfil/forms.hpp"
#include "wittfil/witt.hpp"

namespace wittfil {

/// k_r = kappa((t_1))...((t_r)) together with A_r = W_n(kappa)((t_1))...((t_r)).
struct ATower {
  const Layer* K = nullptr;
  const Layer* kappa = nullptr;
  const Layer* A = nullptr;
  int n = 1;
  int r = 0;
};

int rank_cap();  // default 2
void set_rank_cap(int r);

ATower a_tower(const Layer* K, int n);
/// Coefficientwise Teichmuller lift into a tower layer with the same shape.
Elem teichmuller_lift(const Elem& a, const Layer* A);
Elem phi_n(const WittVector& f, const Layer* A);

/// Tame symbol on kappa((t)); any residue field.
Elem local_symbol_gm(const Elem& f, const Elem& g);
/// Res(f dlog g) on kappa((t)).
Elem local_symbol_ga(const Elem& f, const Elem& g);
/// F^{1-n} Res(phi_n(f) dlog g_1 ^ ... ^ dlog g_r) with r = g.size() = rank of the tower.
WittVector local_symbol_wn(const WittVector& f, const std::vector<Elem>& g);

/// Finite residue extension kappa -> F_{q^d}, realized by a root of kappa's modulus.
struct ResidueExtension {
  const Layer* small = nullptr;
  const Layer* big = nullptr;
  Elem root;
};
ResidueExtension residue_extension(const Layer* kappa, int d);
const Layer* extend_layer(const Layer* L, const ResidueExtension& ext);
Elem extend_elem(const Elem& a, const ResidueExtension& ext);
WittVector extend_witt(const WittVector& f, const ResidueExtension& ext);
/// Least d with q^d > bound.
int extension_degree_for(const Layer* kappa, int64_t bound);
Elem multiplicative_generator(const Layer* Fq);

/// Least m with (f, U^(m)) = 0, generators 1 + b t^j (j in [1, B], b over a
/// residue extension large enough to separate additive polynomials).
int symbol_vanishing_threshold_wn(const WittVector& f, int B = -1);
int symbol_vanishing_threshold_gm(const Elem& f, int B = 4);
/// The pairing used by the threshold: Res(phi_n(f) dlog(1 + b t^j)) before F^{1-n}.
Elem residue_with_unit(const Elem& phi, const Elem& b_lift, int j);

struct UnitFiltrationGen {
  char kind = 'U';
  int m = 0;
  std::vector<Elem> symbol;
};
UnitFiltrationGen s_map(const Layer* K, int m, const Elem& a, const std::vector<Elem>& bs);
UnitFiltrationGen sprime_map(const Layer* K, int m, const Elem& a, const std::vector<Elem>& bs);

/// Sign constants relating the residue formulas to the symbol for odd p (1 for p = 2).
int sign_prop64(int p);
int sign_prop73_21(int p);
int sign_prop73_22(int p);

/// Predicted (phi, 1 + b t^m) for phi in fil^F_m, r = 1.
WittVector prop64_predict(const WittVector& phi, int m, const Elem& b);
/// Predicted (phi, {1 + beta t_2^m, t_1}) for phi in fil^F_m, r = 2.
WittVector prop73_21_predict(const WittVector& phi, int m, const Elem& beta);
/// Predicted (phi, {1 + beta t_2^m, t_2}) for phi in flat fil^F_m, r = 2.
WittVector prop73_22_predict(const WittVector& phi, int m, const Elem& beta);

struct ProbeReport {
  int generators = 0;
  std::vector<std::string> nonzero;  // "symbol -> value"
};
/// Pairs f against a fixed family of U^(m) or V^(m) generators.
ProbeReport probe_filtration_via_pairing(const WittVector& f, int m, char kind, int span = 3);
std::vector<UnitFiltrationGen> unit_generators(const Layer* K, int m, char kind, int span = 3);

std::string render_symbol(const std::vector<Elem>& g);
std::vector<Elem> parse_symbol(const std::string& src, const Layer* K);

}  // namespace wittfil
