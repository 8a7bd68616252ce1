#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wittfil/error.hpp"

namespace wittfil {

enum class LayerKind { Galois, Rational, Perfection, Laurent };

/// One layer of a field tower. Layers are interned and never mutated after
/// construction, so raw pointers to them are stable for the process lifetime.
struct Layer {
  LayerKind kind;
  int p = 2;
  const Layer* base = nullptr;
  int depth = 0;

  // Galois: Z/p^n [g] / (defpoly), defpoly monic of degree e.
  int gr_n = 1;
  int gr_e = 1;
  int64_t modulus = 2;  // p^gr_n
  std::vector<int64_t> defpoly;
  std::string gen = "g";

  // Rational / Laurent variable name.
  std::string var;
  int default_prec = 32;

  std::string name;  // canonical descriptor, e.g. "F2(u)((t))"

  bool is_field() const;
  bool is_perfect() const;
  int64_t q() const;  // residue field size for Galois layers
};

class Elem;

/// Dense univariate polynomial over a layer; c[i] is the coefficient of X^i.
struct Poly {
  const Layer* base = nullptr;
  std::vector<Elem> c;
};

struct GaloisData {
  std::vector<int64_t> c;  // length gr_e, reduced mod p^gr_n
};
struct RationalData;
struct PerfData;
struct LaurentData;

/// Element of some layer. Cheap to copy; payload is shared and immutable.
class Elem {
 public:
  Elem() = default;
  const Layer* layer() const { return L_; }
  bool valid() const { return L_ != nullptr; }

  const GaloisData& galois() const;
  const RationalData& rational() const;
  const PerfData& perf() const;
  const LaurentData& laurent() const;

  static Elem make_galois(const Layer* L, std::vector<int64_t> c);
  static Elem make_rational(const Layer* L, Poly num, Poly den);  // normalizes
  static Elem make_rational_raw(const Layer* L, Poly num, Poly den);  // already normalized
  static Elem make_perf(const Layer* L, int r, Elem inner);       // normalizes
  static Elem make_laurent(const Layer* L, int64_t val, std::vector<Elem> c,
                           std::optional<int64_t> prec);  // normalizes

 private:
  using Data = std::variant<GaloisData, std::shared_ptr<const RationalData>,
                            std::shared_ptr<const PerfData>, std::shared_ptr<const LaurentData>>;
  const Layer* L_ = nullptr;
  std::shared_ptr<const Data> d_;
};

struct RationalData {
  Poly num, den;  // den monic, gcd(num, den) = 1
};
struct PerfData {
  int r = 0;  // element is inner(v^(1/p^r)) for every variable v below
  Elem inner;
};
struct LaurentData {
  int64_t val = 0;        // exponent of c[0]; c[0] != 0 when c is nonempty
  std::vector<Elem> c;    // no trailing zeros
  std::optional<int64_t> prec;  // O(var^prec) when set, exact otherwise
};

// ---- layer construction -------------------------------------------------
const Layer* galois_layer(int p, int n, int e, std::vector<int64_t> defpoly = {},
                          std::string gen = "g");
const Layer* rational_layer(const Layer* base, const std::string& var);
const Layer* perfection_layer(const Layer* base);
const Layer* laurent_layer(const Layer* base, const std::string& var, int default_prec = 32);

/// Chain from bottom (index 0) to L.
std::vector<const Layer*> chain(const Layer* L);
const Layer* bottom(const Layer* L);
bool below_or_equal(const Layer* lo, const Layer* hi);

// ---- generic arithmetic -------------------------------------------------
Elem zero(const Layer* L);
Elem one(const Layer* L);
Elem from_int(const Layer* L, int64_t k);
Elem coerce(const Elem& a, const Layer* L);  // embed into a higher layer
Elem generator(const Layer* L);               // g, the variable, or t

bool is_zero(const Elem& a);
bool is_one(const Elem& a);
bool eq(const Elem& a, const Elem& b);
Elem add(const Elem& a, const Elem& b);
Elem sub(const Elem& a, const Elem& b);
Elem neg(const Elem& a);
Elem mul(const Elem& a, const Elem& b);
Elem inv(const Elem& a);
Elem div(const Elem& a, const Elem& b);
Elem pow(const Elem& a, int64_t k);
Elem mul_int(const Elem& a, int64_t k);

/// x -> x^p on char-p layers; the Frobenius automorphism on Galois rings.
Elem frob(const Elem& a);
Elem pth_root(const Elem& a);
bool is_pth_power(const Elem& a);

// Galois-layer helpers
Elem gr_teichmuller(const Layer* gr, const Elem& residue);  // residue in the n=1 layer
Elem gr_reduce(const Elem& a);                              // GR -> residue field layer
Elem gr_lift(const Layer* gr, const Elem& residue);         // coefficientwise lift
Elem gr_sigma_inv(const Elem& a);
bool gr_divisible_by_p(const Elem& a);
Elem gr_div_p(const Elem& a);
const Layer* residue_galois(const Layer* gr);  // n=1 layer with the reduced polynomial
std::vector<Elem> galois_elements(const Layer* L);  // all q elements of an F_q layer

// Laurent helpers
int64_t valuation(const Elem& a);             // throws on zero / precision
bool has_valuation(const Elem& a);            // false for the zero element
Elem coeff(const Elem& a, int64_t k);         // throws PrecisionExhausted beyond window
Elem monomial(const Layer* L, const Elem& c, int64_t k);
Elem with_prec(const Elem& a, int64_t prec);  // truncate to O(t^prec)
std::optional<int64_t> precision(const Elem& a);
bool is_exact(const Elem& a);
int64_t laurent_min_known_exponent(const Elem& a);

// Poly helpers (over field layers)
Poly poly_trim(Poly a);
bool poly_is_zero(const Poly& a);
int poly_deg(const Poly& a);
Poly poly_const(const Layer* base, const Elem& c);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Elem& c);
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_monic(const Poly& a);
Poly poly_deriv(const Poly& a);
Poly poly_powmod(const Poly& a, const std::string& e_decimal, const Poly& m);
Poly poly_powmod(const Poly& a, int64_t e, const Poly& m);
bool poly_eq(const Poly& a, const Poly& b);
Elem poly_eval(const Poly& a, const Elem& x);  // x may live in a higher layer

// ---- differentials ------------------------------------------------------
struct FormSymbol {
  enum Kind { D, DLOG } kind;
  const Layer* layer;  // layer owning the variable
  std::string var;
  std::string str() const { return (kind == D ? "d(" : "dlog(") + var + ")"; }
};

/// Basis of log 1-forms of a field layer: one symbol per rational variable and
/// per Laurent variable above the last perfection, ordered bottom to top.
std::vector<FormSymbol> form_basis(const Layer* L);
/// The derivation dual to a basis symbol (t d/dt for dlog symbols).
Elem derivation(const Elem& a, const FormSymbol& s);

// ---- parsing / rendering -------------------------------------------------
const Layer* parse_field(const std::string& descriptor, int default_prec = 32);
std::string render(const Elem& a);
Elem parse_elem(const std::string& src, const Layer* L);

}  // namespace wittfil
