#pragma once

#include <random>
#include <string>

#include "wittfil/suites.hpp"
#include "wittfil/witt.hpp"

namespace wittfil::suite {

using Rng = std::mt19937_64;

inline int uniform(Rng& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

Elem rand_scalar(const Layer* kappa, Rng& g);  // any residue-type layer
Elem rand_nonzero_scalar(const Layer* kappa, Rng& g);
/// Finite sum of monomials c t^k with k in [-pole, hi]; exact.
Elem rand_laurent(const Layer* K, Rng& g, int pole, int hi = 2, int terms = 3);
Elem rand_ring(const Layer* L, Rng& g);
WittVector rand_witt_ring(const Layer* L, int n, Rng& g);
/// Random element of fil_m W_n(K): paper coordinate a_j has pole <= m / p^j.
WittVector rand_fil(const Layer* K, int n, int m, Rng& g, int terms = 2);
/// Random element of fil^F_m: sum of F^j of fil_m elements, j <= jmax.
WittVector rand_filF(const Layer* K, int n, int m, Rng& g, int jmax = 2);

std::string quote(const std::string& s);
std::string cli_level(const Layer* K, const WittVector& w);

struct Recorder {
  SuiteReport& r;
  void check(bool ok, const std::string& what) {
    ++r.instances;
    if (!ok) {
      r.passed = false;
      if (r.counterexamples.size() < 20) r.counterexamples.push_back(what);
    }
  }
};

// suite bodies
void suite_witt_ring_axioms(SuiteReport& r, uint64_t seed, long trials);
void suite_ghost(SuiteReport& r, uint64_t seed, long trials);
void suite_filF_oracle(SuiteReport& r, uint64_t seed, long trials);
void suite_filF_closed_form(SuiteReport& r, uint64_t seed, long trials);
void suite_prop41(SuiteReport& r, uint64_t seed, long trials);
void suite_prop46(SuiteReport& r, uint64_t seed, long trials);
void suite_thm53(SuiteReport& r, uint64_t seed, long trials);
void suite_thm33(SuiteReport& r, uint64_t seed, long trials);
void suite_swan(SuiteReport& r, uint64_t seed, long trials);
void suite_prop48(SuiteReport& r, uint64_t seed, long trials);
void suite_asw(SuiteReport& r, uint64_t seed, long trials);
void suite_symbol_laws(SuiteReport& r, uint64_t seed, long trials);
void suite_prop63(SuiteReport& r, uint64_t seed, long trials);
void suite_prop64(SuiteReport& r, uint64_t seed, long trials);
void suite_prop73(SuiteReport& r, uint64_t seed, long trials);
void suite_prop75(SuiteReport& r, uint64_t seed, long trials);
void suite_lemma81(SuiteReport& r, uint64_t seed, long trials);
void suite_cor84(SuiteReport& r, uint64_t seed, long trials);
void suite_wild(SuiteReport& r, uint64_t seed, long trials);
void suite_thm85(SuiteReport& r, uint64_t seed, long trials);
void suite_thm86(SuiteReport& r, uint64_t seed, long trials);
void suite_lemma88(SuiteReport& r, uint64_t seed, long trials);

}  // namespace wittfil::suite
