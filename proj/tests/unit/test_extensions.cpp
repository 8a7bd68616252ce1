#include <gtest/gtest.h>

#include "wittfil/extensions.hpp"

using namespace wittfil;

TEST(Extensions, Images) {
  const Layer* K = parse_field("F2((pi))");
  DVEmbedding tame = make_tame_extension(K, 3);
  EXPECT_EQ(render(apply_embedding(tame, parse_elem("pi^-1", K))), "t^-3");
  EXPECT_THROW(make_tame_extension(K, 2), ShapeMismatch);
  DVEmbedding wild = make_wild_extension(K, 2);
  EXPECT_EQ(render(apply_embedding(wild, parse_elem("pi", K))), "t^2");

  const Layer* Ku = parse_field("F2(u)((pi))");
  DVEmbedding pr = make_perfect_residue_extension(Ku, 1);
  EXPECT_EQ(pr.residue, ResidueKind::PerfectClosure);
  EXPECT_TRUE(pr.dst->base->is_perfect());
  Elem img = apply_embedding(pr, parse_elem("u*pi^-2", Ku));
  EXPECT_EQ(valuation(img), -2);
  EXPECT_TRUE(eq(coeff(img, -1), coerce(parse_elem("T", pr.dst->base), pr.dst->base)));

  Elem a = parse_elem("u*pi^-1 + 1", Ku), b = parse_elem("pi^2 + u", Ku);
  EXPECT_TRUE(eq(apply_embedding(pr, mul(a, b)), mul(apply_embedding(pr, a), apply_embedding(pr, b))));
  EXPECT_TRUE(eq(apply_embedding(pr, add(a, b)), add(apply_embedding(pr, a), apply_embedding(pr, b))));
}

TEST(Extensions, CompareLevels) {
  const Layer* K = parse_field("F2((pi))");
  WittVector phi = parse_witt("pi^-1", K, 1);
  LevelComparison t = compare_levels(make_tame_extension(K, 3), phi);
  EXPECT_EQ(t.sK, 1);
  EXPECT_EQ(t.sKp, 3);
  EXPECT_TRUE(t.ok());
  LevelComparison w = compare_levels(make_wild_extension(K, 2), phi);
  EXPECT_EQ(w.sKp, 1);
  EXPECT_TRUE(w.ok());
  LevelComparison id = compare_levels(identity_embedding(K), parse_witt("W(pi^-3; pi^-1)", K, 2));
  EXPECT_EQ(id.sK, id.sKp);
}

TEST(Extensions, Witnesses) {
  const Layer* Ku = parse_field("F2(u)((pi))");
  ThmCReport c = thmC_witness(parse_witt("u*pi^-2", Ku, 1));
  EXPECT_EQ(c.flat_min, 2);
  EXPECT_EQ(c.max_sKp, 1);
  EXPECT_TRUE(c.ok());
  DVEmbedding e1 = make_perfect_residue_extension(Ku, 1);
  EXPECT_EQ(compare_levels(e1, parse_witt("pi^-3", Ku, 1)).sKp, 3);
  EXPECT_EQ(thmC_witness(parse_witt("u + pi", Ku, 1)).flat_min, 1);
  ThmBReport b = thmB_witness(parse_witt("pi^-3", Ku, 1));
  EXPECT_TRUE(b.ok());
  EXPECT_TRUE(b.attained);
}

TEST(Extensions, Lemma88) {
  const Layer* Ku = parse_field("F2(u)((pi))");
  for (int e : {1, 2}) {
    DVEmbedding emb = make_perfect_residue_extension(Ku, e);
    for (const char* s : {"u*pi^-3", "u*pi^-2", "pi^-3", "u^3*pi^-6"}) {
      WittVector phi = parse_witt(s, Ku, 1);
      const int m = flat_filF_min(phi);
      Lemma88Report r = verify_lemma88(emb, phi, m);
      EXPECT_TRUE(r.ok) << s << " e=" << e << ": " << r.detail;
      EXPECT_EQ(r.expected_level, e * m - 1);
    }
    // a class already in the lower filtration maps to zero
    Lemma88Report z = verify_lemma88(emb, parse_witt("u*pi^-1", Ku, 1), 4);
    EXPECT_TRUE(z.ok) << z.detail;
    EXPECT_FALSE(z.class_nonzero);
  }
}

TEST(Extensions, Config) {
  const Layer* Ku = parse_field("F2(u)((pi))");
  DVEmbedding emb =
      embedding_from_config(Ku, R"j({"e":1,"pi_image":"t","pbase_images":{"u":"u + T*t"},"residue":"perfect-closure"})j");
  EXPECT_TRUE(emb.valid());
  EXPECT_THROW(embedding_from_config(parse_field("F2((pi))"), R"j({"e":1,"pi_image":"t^2"})j"), Error);
}
