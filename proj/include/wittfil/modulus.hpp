#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wittfil/filtration.hpp"
#include "wittfil/homword.hpp"
#include "wittfil/witt.hpp"

namespace wittfil {

// ---- factorization over F_q ------------------------------------------------
/// Monic irreducible factors with multiplicity, sorted by (degree, coefficients).
std::vector<std::pair<Poly, int>> factor_poly(const Poly& f);
std::vector<std::pair<Poly, int>> squarefree_factorization(const Poly& f);
std::vector<Poly> distinct_degree_factorization(const Poly& f, std::vector<int>* degrees);
std::vector<Poly> equal_degree_factorization(const Poly& f, int d);

// ---- places of F_q(x) ------------------------------------------------------
struct Place {
  bool infinity = false;
  Poly P;  // monic irreducible over F_q (empty at infinity)
  int degree = 1;
  std::string name;
};
bool operator<(const Place& a, const Place& b);
Place place_infinity(const Layer* Kglob);
Place place_from_poly(const Layer* Kglob, const Poly& P);
Place parse_place(const std::string& src, const Layer* Kglob);

/// The completion kappa_v((pi)) as a layer, with the given default window.
const Layer* completion_layer(const Layer* Kglob, const Place& v, int prec = 32);
Elem completion_at_place(const Elem& f, const Place& v, int prec = 32);
WittVector completion_at_place(const WittVector& f, const Place& v, int prec = 32);

// ---- split groups ---------------------------------------------------------
struct SplitGroup {
  int tm = 0;                // torus rank
  std::vector<int> shape;    // Witt lengths
  std::optional<HomWord> post;  // applied to the Witt coordinates
};
SplitGroup parse_group(const std::string& src);
std::string render_group(const SplitGroup& G);

struct GroupPoint {
  std::vector<Elem> torus;
  std::vector<WittVector> witt;
};
GroupPoint parse_point(const std::string& src, const SplitGroup& G, const Layer* K);
std::string render_point(const GroupPoint& x);
GroupPoint apply_post(const SplitGroup& G, const GroupPoint& x);

/// Local modulus: 0 on G(O), else 1 + max filF level of the Witt coordinates.
int mod_v(const GroupPoint& local);

struct ModulusDivisor {
  std::vector<std::pair<Place, int>> terms;  // nonzero multiplicities, sorted
  int degree() const;
};
std::vector<Place> candidate_places(const GroupPoint& x, const Layer* Kglob);
ModulusDivisor modulus_divisor(const GroupPoint& x, const SplitGroup& G, const Layer* Kglob, int prec = 32);

struct EmbeddingReport {
  std::vector<std::string> mismatches;  // empty when independent
  std::vector<std::pair<int, int>> values;  // (mod via h1, mod via h2) per place
};
/// Modulus of the Witt part computed through two injective homomorphisms.
EmbeddingReport check_embedding_independence(const GroupPoint& x, const HomWord& h1, const HomWord& h2,
                                             const Layer* Kglob, int prec = 32);
/// Same on a local point (one place).
std::pair<int, int> local_embedding_pair(const std::vector<WittVector>& w, const HomWord& h1, const HomWord& h2);

// ---- Swan conductor -------------------------------------------------------
struct SwanResult {
  int swan = 0;
  WittVector reduced;  // representative of the same class in fil_swan
};
SwanResult swan_conductor(const WittVector& f);
/// t^{-m} coefficients of delta(reduced) on the form basis.
std::vector<Elem> refined_swan(const SwanResult& s);

struct Prop48Report {
  bool ok = true;
  int level = 0;
  int swan = 0;
  std::string detail;
};
Prop48Report verify_prop48(const WittVector& f);

// ---- surface test: K = F_p(x, y) at v = {x = 0} inside F_p((y))((x)) ----------
/// Coefficientwise expansion of F_p(y)((x)) into F_p((y))((x)).
Elem expand_rational_coefficients(const Elem& a, const Layer* target);
WittVector expand_rational_coefficients(const WittVector& f, const Layer* target);
/// Least m with (phi, U_2^(m)) = 0 over a generator family in F_p((y))((x)).
int surface_pairing_threshold(const WittVector& phi_kv, const Layer* k2, int span = 3);

}  // namespace wittfil
