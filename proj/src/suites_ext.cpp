// Suites for embedding independence and for extensions of the base field.
#include "suite_util.hpp"
#include "wittfil/extensions.hpp"
#include "wittfil/homword.hpp"
#include "wittfil/modulus.hpp"
#include "wittfil/oracle.hpp"

namespace wittfil::suite {

namespace {

long pick(long trials, long dflt) { return trials > 0 ? trials : dflt; }

std::string ext_cmd(const DVEmbedding& emb, const WittVector& phi) {
  return "wittfil extend --field " + quote(emb.src->name) + " -n " + std::to_string(phi.n()) + " --e " +
         std::to_string(emb.e) + " --residue " + residue_kind_name(emb.residue) + " " + quote(render_witt(phi));
}

const std::vector<std::pair<const char*, int>>& curated() {
  static const std::vector<std::pair<const char*, int>> c{
      {"W(u*pi^-2)", 1},     {"W(pi^-3)", 1},          {"W(u)", 1},          {"W(u*pi^-3)", 1},
      {"W(pi^-1)", 1},       {"W(u*pi^-1)", 1},        {"W(u*pi^-4 + pi^-1)", 1}, {"W(u^3*pi^-6)", 1},
      {"W(pi^-2; u*pi^-1)", 2}, {"W(u*pi^-1; 0)", 2}, {"W(0; u*pi^-2)", 2}, {"W(u*pi^-2; pi^-1)", 2}};
  return c;
}

std::vector<WittVector> sec8_family(Rng& g, long extra) {
  const Layer* Ku = parse_field("F2(u)((pi))");
  std::vector<WittVector> out;
  for (const auto& [s, n] : curated()) out.push_back(parse_witt(s, Ku, n));
  for (long i = 0; i < extra; ++i) out.push_back(rand_filF(Ku, uniform(g, 1, 2), uniform(g, 1, 6), g, 1));
  return out;
}

}  // namespace

void suite_thm33(SuiteReport& r, uint64_t, long) {
  Recorder rec{r};
  const Layer* Kx = parse_field("F2(x)");
  const std::vector<HomWord> homs1{hom_identity(1), hom_V(1), hom_diag_id_F(1), hom_compose(hom_V(2), hom_V(1))};
  for (const char* s : {"1/x", "1/x^3", "x^5 + 1/(x+1)^2", "1/(x^2+x+1)^3", "x^3/(x^3+x+1)"}) {
    GroupPoint x{{}, {parse_witt(s, Kx, 1)}};
    for (std::size_t i = 1; i < homs1.size(); ++i) {
      EmbeddingReport rep = check_embedding_independence(x, homs1[0], homs1[i], Kx);
      rec.check(rep.mismatches.empty(), std::string("embedding independence for ") + s + " via " + render_hom(homs1[i]) +
                                            (rep.mismatches.empty() ? "" : ": " + rep.mismatches[0]));
    }
  }
  // local, exhaustive small family
  const Layer* K = parse_field("F2((t))");
  for (int n = 1; n <= 2; ++n) {
    const std::vector<HomWord> homs{hom_identity(n), hom_V(n), hom_F(n), hom_diag_id_F(n)};
    for (const auto& v : oracle::enumerate_fil(2, n, n == 1 ? 8 : 4)) {
      std::vector<WittVector> w{oracle::to_witt(v, K, n)};
      for (std::size_t i = 1; i < homs.size(); ++i) {
        auto [a, b] = local_embedding_pair(w, homs[0], homs[i]);
        rec.check(a == b, cli_level(K, w[0]) + "  # mod " + std::to_string(a) + " vs " + std::to_string(b) + " via " +
                              render_hom(homs[i]));
      }
    }
  }
}

void suite_lemma81(SuiteReport& r, uint64_t seed, long trials) {
  Rng g(seed);
  Recorder rec{r};
  const long T = pick(trials, 240);
  std::vector<DVEmbedding> embs;
  for (const char* d : {"F2((pi))", "F4((pi))", "F2(u)((pi))"}) {
    const Layer* K = parse_field(d);
    embs.push_back(identity_embedding(K));
    embs.push_back(make_tame_extension(K, 3));
    embs.push_back(make_wild_extension(K, 2));
    embs.push_back(make_wild_extension(K, 4));
    if (d[2] == '(') {
      embs.push_back(make_perfect_residue_extension(K, 1));
      embs.push_back(make_perfect_residue_extension(K, 2));
    }
  }
  for (long i = 0; i < T; ++i) {
    const DVEmbedding& emb = embs[static_cast<std::size_t>(i) % embs.size()];
    WittVector phi = rand_filF(emb.src, uniform(g, 1, 2), uniform(g, 0, 6), g, 1);
    LevelComparison c = compare_levels(emb, phi);
    rec.check(c.containment_ok && c.zero_map_ok, ext_cmd(emb, phi) + "  # sK=" + std::to_string(c.sK) +
                                                     " sK'=" + std::to_string(c.sKp));
  }
}

void suite_cor84(SuiteReport& r, uint64_t seed, long trials) {
  Rng g(seed);
  Recorder rec{r};
  const long T = pick(trials, 240);
  std::vector<DVEmbedding> embs;
  for (const char* d : {"F2((pi))", "F4((pi))", "F2(u)((pi))", "F3((pi))"}) {
    const Layer* K = parse_field(d);
    embs.push_back(identity_embedding(K));
    for (int e : {2, 3, 5})
      if (e % K->p) embs.push_back(make_tame_extension(K, e));
  }
  for (long i = 0; i < T; ++i) {
    const DVEmbedding& emb = embs[static_cast<std::size_t>(i) % embs.size()];
    WittVector phi = rand_filF(emb.src, uniform(g, 1, 2), uniform(g, 0, 6), g, 1);
    LevelComparison c = compare_levels(emb, phi);
    rec.check(c.equality_checked && c.equality_ok && c.ok(),
              ext_cmd(emb, phi) + "  # sK=" + std::to_string(c.sK) + " sK'=" + std::to_string(c.sKp));
  }
}

void suite_wild(SuiteReport& r, uint64_t, long) {
  Recorder rec{r};
  for (const char* d : {"F2((pi))", "F3((pi))", "F2(u)((pi))"}) {
    const Layer* K = parse_field(d);
    DVEmbedding emb = make_wild_extension(K, K->p);
    WittVector phi = parse_witt("W(pi^-1)", K, 1);
    LevelComparison c = compare_levels(emb, phi);
    rec.check(c.sK == 1 && c.sKp == 1 && c.sKp < emb.e * c.sK && c.ok(), ext_cmd(emb, phi));
  }
}

void suite_thm85(SuiteReport& r, uint64_t seed, long trials) {
  Rng g(seed);
  Recorder rec{r};
  long flat = 0;
  for (const auto& phi : sec8_family(g, pick(trials, 40))) {
    ThmBReport b = thmB_witness(phi);
    bool ok = b.ok();
    // on the flat part the e-th member reaches e s - 1
    if (b.flat_case) {
      ++flat;
      for (const auto& fe : b.entries) ok = ok && fe.sKp == fe.e * b.sK - 1;
    }
    rec.check(ok, "wittfil extend --field 'F2(u)((pi))' -n " + std::to_string(phi.n()) + " --family " +
                      quote(render_witt(phi)) + "  # sK=" + std::to_string(b.sK) + " best=" + std::to_string(b.best_num) +
                      "/" + std::to_string(b.best_den));
  }
  r.notes.push_back(std::to_string(flat) + " inputs in the flat part: the supremum is approached, not attained, on a finite family");
}

void suite_thm86(SuiteReport& r, uint64_t seed, long trials) {
  Rng g(seed);
  Recorder rec{r};
  for (const auto& phi : sec8_family(g, pick(trials, 100))) {
    ThmCReport c = thmC_witness(phi);
    rec.check(c.ok(), "wittfil extend --field 'F2(u)((pi))' -n " + std::to_string(phi.n()) + " --family " +
                          quote(render_witt(phi)) + "  # flat_min=" + std::to_string(c.flat_min) +
                          " max=" + std::to_string(c.max_sKp));
  }
  // the named witness
  const Layer* Ku = parse_field("F2(u)((pi))");
  WittVector w = parse_witt("W(u*pi^-2)", Ku, 1);
  ThmCReport c = thmC_witness(w);
  rec.check(c.flat_min == 2 && c.max_sKp == 1, "witness u*pi^-2");
}

void suite_lemma88(SuiteReport& r, uint64_t seed, long trials) {
  Rng g(seed);
  Recorder rec{r};
  const Layer* Ku = parse_field("F2(u)((pi))");
  const DVEmbedding embs[] = {make_perfect_residue_extension(Ku, 1), make_perfect_residue_extension(Ku, 2)};
  long rules = 0;
  for (const auto& phi : sec8_family(g, pick(trials, 40))) {
    const int fm = flat_filF_min(phi);
    for (int m = std::max(2, fm); m <= std::max(2, fm) + 1; ++m)
      for (const auto& emb : embs) {
        Lemma88Report rep = verify_lemma88(emb, phi, m);
        rules += rep.rule_checked;
        rec.check(rep.ok, ext_cmd(emb, phi) + "  # m=" + std::to_string(m) + " " + rep.detail);
      }
  }
  rec.check(rules > 0, "no coefficient-rule comparisons were made");
  r.notes.push_back(std::to_string(rules) + " coefficient-rule comparisons");
}

}  // namespace wittfil::suite
