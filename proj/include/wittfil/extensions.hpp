#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wittfil/filtration.hpp"
#include "wittfil/witt.hpp"

namespace wittfil {

enum class ResidueKind { Identity, Separable, PerfectClosure };
std::string residue_kind_name(ResidueKind k);

/// K = kappa((pi)) -> K' = kappa'((t)) with pi -> pi_image and each p-base
/// variable b -> its listed image; everything else in kappa goes to kappa'.
struct DVEmbedding {
  const Layer* src = nullptr;
  const Layer* dst = nullptr;
  int e = 1;
  Elem pi_image;
  std::vector<std::pair<std::string, Elem>> pbase_images;
  ResidueKind residue = ResidueKind::Identity;
  std::string name;

  bool valid() const;
};

/// Variables of the Rational layers of kappa above its topmost perfection.
std::vector<std::string> p_base(const Layer* kappa);

DVEmbedding identity_embedding(const Layer* K);
DVEmbedding make_tame_extension(const Layer* K, int e);
DVEmbedding make_wild_extension(const Layer* K, int e);
/// kappa' = perfection of kappa(T_i), b_i -> b_i + T_i t, pi -> t^e.
DVEmbedding make_perfect_residue_extension(const Layer* K, int e);
/// {"e":1,"pi_image":"t","pbase_images":{"u":"u + T*t"},"residue":"perfect-closure"}
DVEmbedding embedding_from_config(const Layer* K, const std::string& json);

Elem apply_embedding(const DVEmbedding& emb, const Elem& x);
WittVector apply_embedding(const DVEmbedding& emb, const WittVector& x);

struct LevelComparison {
  int sK = 0;
  int sKp = 0;
  int e = 1;
  int flat_minK = 1;
  bool containment_ok = true;  // sKp <= e sK
  bool zero_map_ok = true;     // p | e: image lies in the flat part at e sK
  bool equality_checked = false;
  bool equality_ok = true;     // p !| e, separable residue: sKp == e sK
  bool ok() const { return containment_ok && zero_map_ok && equality_ok; }
};
LevelComparison compare_levels(const DVEmbedding& emb, const WittVector& phi);

/// Perfect-residue targets used for the sup/max statements.
std::vector<DVEmbedding> configured_family(const Layer* K);

struct FamilyEntry {
  std::string name;
  int e = 1;
  int sKp = 0;
};

struct ThmBReport {
  int sK = 0;
  std::vector<FamilyEntry> entries;
  int best_num = 0, best_den = 1;  // max of sKp / e
  bool exceeded = false;           // some sKp / e > sK
  bool attained = false;           // max equals sK
  bool flat_case = false;          // phi in the flat part at sK: sup approached, not attained
  bool ok() const { return !exceeded && (attained || flat_case); }
};
ThmBReport thmB_witness(const WittVector& phi);
ThmBReport thmB_witness(const WittVector& phi, const std::vector<DVEmbedding>& family);

struct ThmCReport {
  int flat_min = 1;
  int max_sKp = 0;  // over the e = 1 members
  std::vector<FamilyEntry> entries;
  bool ok() const { return flat_min == 1 + max_sKp; }
};
ThmCReport thmC_witness(const WittVector& phi);
ThmCReport thmC_witness(const WittVector& phi, const std::vector<DVEmbedding>& family);

struct Lemma88Report {
  bool ok = true;
  int m = 0;
  int e = 1;
  bool class_nonzero = false;  // source class in the relevant graded quotient
  int image_level = 0;
  int expected_level = 0;      // e m - 1
  bool rule_checked = false;   // graded coefficients compared
  std::string detail;
};
/// Flat-graded comparison along an embedding of the perfect-residue type. When
/// the class survives, the graded coefficients of the image are compared with
/// db -> T dt, dpi -> 0 (modulo kappa[F] for e = 1).
Lemma88Report verify_lemma88(const DVEmbedding& emb, const WittVector& phi, int m);

}  // namespace wittfil
