#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "wittfil/field.hpp"

namespace wittfil {

/// Integer polynomial in 2n variables X_0..X_{n-1}, Y_0..Y_{n-1}.
struct IntPoly {
  struct Term {
    std::vector<uint16_t> exps;
    mpz_class coeff;
  };
  std::vector<Term> terms;
};

enum class WittOp { Add, Mul, Neg };

/// Structure polynomials S_0..S_{n-1} for (p, n), computed once from the ghost
/// identities and cached. Thread safe.
const std::vector<IntPoly>& structure_polys(WittOp op, int p, int n);

/// Largest n for which structure polynomials are built (default 4).
int witt_cap();
void set_witt_cap(int n);

/// Truncated Witt vector. x[0] is the leftmost (weight-one) coordinate; in
/// the (a_{n-1}, ..., a_0) display, a_j is x[n-1-j].
struct WittVector {
  const Layer* layer = nullptr;
  std::vector<Elem> x;

  int n() const { return static_cast<int>(x.size()); }
  int p() const { return layer->p; }
  const Elem& a(int j) const { return x[x.size() - 1 - static_cast<std::size_t>(j)]; }
};

WittVector witt_zero(const Layer* L, int n);
WittVector witt_from(const Layer* L, std::vector<Elem> comps);
WittVector teichmuller(const Elem& a, int n);
bool witt_eq(const WittVector& a, const WittVector& b);
bool witt_is_zero(const WittVector& a);

WittVector witt_add(const WittVector& a, const WittVector& b);
WittVector witt_neg(const WittVector& a);
WittVector witt_sub(const WittVector& a, const WittVector& b);
WittVector witt_mul(const WittVector& a, const WittVector& b);
WittVector witt_mul_int(const WittVector& a, int64_t k);

WittVector witt_F(const WittVector& a);
WittVector witt_F_pow(const WittVector& a, int j);
WittVector witt_V(const WittVector& a);
WittVector witt_truncate(const WittVector& a, int n);
WittVector witt_extend(const WittVector& a, int n);  // pad with zeros on the right
WittVector witt_coerce(const WittVector& a, const Layer* L);

/// Single nonzero coordinate c at paper subscript j: V^{n-1-j}[c].
WittVector witt_monomial(const Layer* L, int n, int j, const Elem& c);

std::string render_witt(const WittVector& w);
WittVector parse_witt(const std::string& src, const Layer* L, int n = -1);

// Integer-coefficient Witt vectors (testing backend for ghost identities).
struct IntWitt {
  int p;
  std::vector<mpz_class> x;
};
IntWitt int_witt_add(const IntWitt& a, const IntWitt& b);
IntWitt int_witt_mul(const IntWitt& a, const IntWitt& b);
IntWitt int_witt_neg(const IntWitt& a);
std::vector<mpz_class> ghost(const IntWitt& a);

/// Evaluate S_k over Z/m (m = 0 means over Z).
std::vector<mpz_class> eval_structure_int(WittOp op, int p, const std::vector<mpz_class>& xs,
                                          const std::vector<mpz_class>& ys, const mpz_class& m);

/// Witt vectors over W(F_q) digits <-> Galois ring elements.
Elem witt_to_galois(const WittVector& w, const Layer* gr);
WittVector galois_to_witt(const Elem& a, const Layer* residue);

}  // namespace wittfil
