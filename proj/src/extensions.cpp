#include "wittfil/extensions.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <numeric>
#include <set>

namespace wittfil {

std::string residue_kind_name(ResidueKind k) {
  switch (k) {
    case ResidueKind::Identity: return "identity";
    case ResidueKind::Separable: return "separable";
    case ResidueKind::PerfectClosure: return "perfect-closure";
  }
  return "?";
}

namespace {

const Layer* residue_of(const Layer* K) {
  if (K->kind != LayerKind::Laurent) throw UnsupportedRing("embeddings need a layer kappa((pi))");
  if (K->base->kind == LayerKind::Laurent) throw UnsupportedResidueField("residue field must not be a Laurent layer");
  return K->base;
}

bool is_power_of(int e, int p) {
  if (e < 1) return false;
  while (e % p == 0) e /= p;
  return e == 1;
}

// generous window on the target so negative powers of pi keep enough terms
int target_prec(const Layer* K, int e) { return e * K->default_prec + 32; }

DVEmbedding monomial_embedding(const Layer* K, int e, ResidueKind kind, std::string name) {
  const Layer* kappa = residue_of(K);
  DVEmbedding emb;
  emb.src = K;
  emb.dst = laurent_layer(kappa, "t", target_prec(K, e));
  emb.e = e;
  emb.pi_image = monomial(emb.dst, one(kappa), e);
  emb.residue = kind;
  emb.name = std::move(name);
  return emb;
}

const Elem* image_of(const DVEmbedding& emb, const std::string& var) {
  for (const auto& [v, img] : emb.pbase_images)
    if (v == var) return &img;
  return nullptr;
}

Elem map_coeff(const DVEmbedding& emb, const Elem& c);

Elem eval_mapped(const DVEmbedding& emb, const Poly& P, const Elem& X) {
  Elem r = zero(emb.dst);
  for (std::size_t i = P.c.size(); i-- > 0;) r = add(mul(r, X), map_coeff(emb, P.c[i]));
  return r;
}

// kappa -> O_{K'}
Elem map_coeff(const DVEmbedding& emb, const Elem& c) {
  const Layer* R = c.layer();
  if (R->kind == LayerKind::Rational) {
    if (const Elem* X = image_of(emb, R->var)) {
      const RationalData& d = c.rational();
      return div(eval_mapped(emb, d.num, *X), eval_mapped(emb, d.den, *X));
    }
  }
  return monomial(emb.dst, coerce(c, emb.dst->base), 0);
}

// a lies in the image of kappa inside kappa'
bool in_subfield(const Elem& a, const Layer* kappa) {
  const Layer* L = a.layer();
  if (L == kappa || below_or_equal(L, kappa)) return true;
  if (L->kind == LayerKind::Perfection) return a.perf().r == 0 && in_subfield(a.perf().inner, kappa);
  if (L->kind == LayerKind::Rational) {
    const RationalData& d = a.rational();
    return poly_deg(d.den) == 0 && poly_deg(d.num) <= 0 && (d.num.c.empty() || in_subfield(d.num.c[0], kappa));
  }
  return false;
}

Elem frob_pow(Elem a, int j) {
  for (int i = 0; i < j; ++i) a = frob(a);
  return a;
}

// left normal form coefficient of F^j (x) c: c^(p^j)
std::string check_rule(const DVEmbedding& emb, const DBarElement& src, const DBarElement& img) {
  const Layer* kp = emb.dst->base;
  const Layer* kappa = emb.src->base;
  std::vector<Elem> Ts;
  for (std::size_t k = 0; k + 1 < src.basis.size(); ++k) {
    const Elem* b = image_of(emb, src.basis[k].var);
    Ts.push_back(b ? coeff(*b, 1) : zero(kp));
  }
  std::set<int> js;
  for (const auto& [j, v] : src.coeffs) js.insert(j);
  for (const auto& [j, v] : img.coeffs) js.insert(j);
  for (int j : js) {
    Elem want = zero(kp), got = zero(kp);
    if (auto it = src.coeffs.find(j); it != src.coeffs.end())
      for (std::size_t k = 0; k < Ts.size(); ++k) want = add(want, mul(coerce(it->second[k], kp), Ts[k]));
    if (auto it = img.coeffs.find(j); it != img.coeffs.end()) got = it->second.back();
    Elem diff = frob_pow(sub(got, want), j);
    if (emb.e == 1 ? !in_subfield(diff, kappa) : !is_zero(diff))
      return "F^" + std::to_string(j) + " coefficient " + render(got) + " vs " + render(want);
  }
  return "";
}

}  // namespace

bool DVEmbedding::valid() const {
  if (!src || !dst || e < 1) return false;
  if (!has_valuation(pi_image) || valuation(pi_image) != e) return false;
  for (const auto& [v, img] : pbase_images)
    if (!has_valuation(img) || valuation(img) != 0) return false;
  return true;
}

std::vector<std::string> p_base(const Layer* kappa) {
  std::vector<std::string> out;
  for (const Layer* L = kappa; L && L->kind != LayerKind::Perfection; L = L->base)
    if (L->kind == LayerKind::Rational) out.insert(out.begin(), L->var);
  return out;
}

DVEmbedding identity_embedding(const Layer* K) { return monomial_embedding(K, 1, ResidueKind::Identity, "identity"); }

DVEmbedding make_tame_extension(const Layer* K, int e) {
  if (e < 1 || e % K->p == 0) throw ShapeMismatch("tame extension needs e >= 1 prime to p");
  return monomial_embedding(K, e, ResidueKind::Identity, "tame e=" + std::to_string(e));
}

DVEmbedding make_wild_extension(const Layer* K, int e) {
  if (e < K->p || !is_power_of(e, K->p)) throw ShapeMismatch("wild extension needs e a positive power of p");
  return monomial_embedding(K, e, ResidueKind::Identity, "wild e=" + std::to_string(e));
}

DVEmbedding make_perfect_residue_extension(const Layer* K, int e) {
  if (e < 1) throw ShapeMismatch("ramification index must be positive");
  const Layer* kappa = residue_of(K);
  const std::vector<std::string> pb = p_base(kappa);
  const Layer* k2 = kappa;
  std::vector<std::string> tvars;
  for (std::size_t i = 0; i < pb.size(); ++i) {
    std::string T = pb.size() == 1 ? "T" : "T" + std::to_string(i + 1);
    if (std::find(pb.begin(), pb.end(), T) != pb.end()) throw UnsupportedResidueField("variable name " + T + " is taken");
    tvars.push_back(T);
    k2 = rational_layer(k2, T);
  }
  const Layer* kp = k2->is_perfect() ? k2 : perfection_layer(k2);
  DVEmbedding emb;
  emb.src = K;
  emb.dst = laurent_layer(kp, "t", target_prec(K, e));
  emb.e = e;
  emb.pi_image = monomial(emb.dst, one(kp), e);
  emb.residue = ResidueKind::PerfectClosure;
  emb.name = "perfect-residue e=" + std::to_string(e);
  // b -> b + T t
  for (std::size_t i = 0; i < pb.size(); ++i) {
    const Layer* Rb = kappa;
    while (Rb->kind != LayerKind::Rational || Rb->var != pb[i]) Rb = Rb->base;
    const Layer* RT = k2;
    while (RT->var != tvars[i]) RT = RT->base;
    Elem b = coerce(generator(Rb), kp), T = coerce(generator(RT), kp);
    emb.pbase_images.push_back({pb[i], add(monomial(emb.dst, b, 0), monomial(emb.dst, T, 1))});
  }
  return emb;
}

DVEmbedding embedding_from_config(const Layer* K, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(ex.what(), ex.byte ? ex.byte - 1 : 0, "embedding JSON");
  }
  const int e = j.value("e", 1);
  const std::string res = j.value("residue", std::string("identity"));
  DVEmbedding emb;
  if (res == "perfect-closure") {
    emb = make_perfect_residue_extension(K, e);
    emb.pbase_images.clear();
  } else if (res == "identity" || res == "separable") {
    emb = monomial_embedding(K, e, res == "identity" ? ResidueKind::Identity : ResidueKind::Separable, "configured");
  } else {
    throw ParseError("unknown residue kind '" + res + "'", 0, "identity, separable or perfect-closure");
  }
  emb.name = "configured e=" + std::to_string(e);
  if (j.contains("pi_image")) emb.pi_image = parse_elem(j["pi_image"].get<std::string>(), emb.dst);
  if (j.contains("pbase_images"))
    for (auto& [v, img] : j["pbase_images"].items()) emb.pbase_images.push_back({v, parse_elem(img.get<std::string>(), emb.dst)});
  if (!emb.valid()) throw ShapeMismatch("embedding does not respect valuations");
  emb.e = static_cast<int>(valuation(emb.pi_image));
  return emb;
}

Elem apply_embedding(const DVEmbedding& emb, const Elem& x) {
  if (x.layer() != emb.src) throw ShapeMismatch("element is not in the source field of the embedding");
  const LaurentData& d = x.laurent();
  Elem r = zero(emb.dst);
  Elem pik = pow(emb.pi_image, d.val);
  for (const auto& c : d.c) {
    if (!is_zero(c)) r = add(r, mul(map_coeff(emb, c), pik));
    pik = mul(pik, emb.pi_image);
  }
  if (d.prec) r = with_prec(add(r, Elem::make_laurent(emb.dst, 0, {}, *d.prec * emb.e)), *d.prec * emb.e);
  return r;
}

WittVector apply_embedding(const DVEmbedding& emb, const WittVector& x) {
  WittVector w{emb.dst, {}};
  for (const auto& c : x.x) w.x.push_back(apply_embedding(emb, c));
  return w;
}

LevelComparison compare_levels(const DVEmbedding& emb, const WittVector& phi) {
  LevelComparison c;
  c.e = emb.e;
  c.sK = filF_level(phi).s;
  c.flat_minK = flat_filF_min(phi);
  WittVector img = apply_embedding(emb, phi);
  c.sKp = filF_level(img).s;
  const int p = phi.p();
  c.containment_ok = c.sKp <= emb.e * c.sK;
  if (emb.e % p == 0 && c.sK >= 1) c.zero_map_ok = in_flat_filF(img, emb.e * c.sK);
  if (emb.e % p != 0 && emb.residue != ResidueKind::PerfectClosure) {
    c.equality_checked = true;
    c.equality_ok = c.sKp == emb.e * c.sK;
  }
  return c;
}

std::vector<DVEmbedding> configured_family(const Layer* K) {
  const Layer* kappa = residue_of(K);
  const int p = K->p;
  std::vector<DVEmbedding> fam;
  if (kappa->is_perfect()) {
    fam.push_back(identity_embedding(K));
    for (int e : {2, 3}) fam.push_back(e % p ? make_tame_extension(K, e) : make_wild_extension(K, e));
  } else {
    for (int e : {1, 2, 3}) fam.push_back(make_perfect_residue_extension(K, e));
  }
  return fam;
}

ThmBReport thmB_witness(const WittVector& phi) { return thmB_witness(phi, configured_family(phi.layer)); }

ThmBReport thmB_witness(const WittVector& phi, const std::vector<DVEmbedding>& family) {
  ThmBReport r;
  r.sK = filF_level(phi).s;
  r.flat_case = r.sK >= 1 && in_flat_filF(phi, r.sK);
  for (const auto& emb : family) {
    FamilyEntry fe{emb.name, emb.e, filF_level(apply_embedding(emb, phi)).s};
    r.entries.push_back(fe);
    // compare fe.sKp / e with best_num / best_den
    if (static_cast<int64_t>(fe.sKp) * r.best_den > static_cast<int64_t>(r.best_num) * fe.e) {
      const int g = std::gcd(fe.sKp, fe.e);
      r.best_num = fe.sKp / g;
      r.best_den = fe.e / g;
    }
    if (fe.sKp > static_cast<int64_t>(r.sK) * fe.e) r.exceeded = true;
  }
  r.attained = r.best_den == 1 && r.best_num == r.sK;
  return r;
}

ThmCReport thmC_witness(const WittVector& phi) { return thmC_witness(phi, configured_family(phi.layer)); }

ThmCReport thmC_witness(const WittVector& phi, const std::vector<DVEmbedding>& family) {
  ThmCReport r;
  r.flat_min = flat_filF_min(phi);
  for (const auto& emb : family) {
    if (emb.e != 1) continue;
    FamilyEntry fe{emb.name, emb.e, filF_level(apply_embedding(emb, phi)).s};
    r.entries.push_back(fe);
    r.max_sKp = std::max(r.max_sKp, fe.sKp);
  }
  return r;
}

Lemma88Report verify_lemma88(const DVEmbedding& emb, const WittVector& phi, int m) {
  Lemma88Report r;
  r.m = m;
  r.e = emb.e;
  r.expected_level = emb.e * m - 1;
  if (m < 2) {
    r.ok = false;
    r.detail = "needs m >= 2";
    return r;
  }
  if (!in_flat_filF(phi, m)) {
    r.ok = false;
    r.detail = "phi is outside the flat part at level m";
    return r;
  }
  // e = 1 compares flat_m / flat_{m-1}; e >= 2 compares flat_m / fil_{m-1}
  r.class_nonzero = emb.e == 1 ? !in_flat_filF(phi, m - 1) : !in_filF(phi, m - 1);
  LevelResult img = filF_level(apply_embedding(emb, phi));
  r.image_level = img.s;
  if (r.image_level > r.expected_level) {
    r.ok = false;
    r.detail = "image level " + std::to_string(r.image_level) + " exceeds " + std::to_string(r.expected_level);
  } else if (r.class_nonzero && r.image_level != r.expected_level) {
    r.ok = false;
    r.detail = "nonzero class lost: image level " + std::to_string(r.image_level);
  } else if (!r.class_nonzero && r.image_level == r.expected_level) {
    r.ok = false;
    r.detail = "zero class has image of full level";
  } else if (r.class_nonzero && emb.residue == ResidueKind::PerfectClosure && phi.layer->base->kind != LayerKind::Galois) {
    FilDecomposition d = filF_level(phi).witness;
    d.m = m;
    img.witness.m = r.expected_level;
    r.rule_checked = true;
    r.detail = check_rule(emb, theta_bar(d, m), theta_bar(img.witness, r.expected_level));
    r.ok = r.detail.empty();
  }
  return r;
}

}  // namespace wittfil
