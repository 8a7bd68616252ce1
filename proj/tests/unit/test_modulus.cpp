#include <gtest/gtest.h>

#include "wittfil/modulus.hpp"

using namespace wittfil;

namespace {
const Layer* Kx() { return parse_field("F2(x)"); }
int mult_at(const ModulusDivisor& D, const std::string& name) {
  for (const auto& [v, m] : D.terms)
    if (v.name == name) return m;
  return 0;
}
}  // namespace

TEST(Modulus, Completions) {
  Place v0 = parse_place("x", Kx());
  Elem a = completion_at_place(parse_elem("1/x", Kx()), v0);
  EXPECT_EQ(render(a), "t^-1");
  Place inf = place_infinity(Kx());
  EXPECT_EQ(render(completion_at_place(parse_elem("x", Kx()), inf)), "t^-1");
  Place v1 = parse_place("x + 1", Kx());
  Elem b = completion_at_place(parse_elem("1/x", Kx()), v1, 12);
  for (int k = 0; k < 12; ++k) EXPECT_TRUE(is_one(coeff(b, k))) << k;
}

TEST(Modulus, LocalModulus) {
  const Layer* K = parse_field("F2((t))");
  EXPECT_EQ(mod_v(GroupPoint{{}, {parse_witt("t^-1", K, 1)}}), 2);
  EXPECT_EQ(mod_v(GroupPoint{{parse_elem("t", K)}, {}}), 1);
  EXPECT_EQ(mod_v(GroupPoint{{}, {parse_witt("W(t^-1; 0)", K, 2)}}), 3);
  EXPECT_EQ(mod_v(GroupPoint{{parse_elem("1 + t", K)}, {parse_witt("t", K, 1)}}), 0);
}

TEST(Modulus, Divisors) {
  SplitGroup Ga = parse_group("Ga"), Gm = parse_group("Gm");
  ModulusDivisor a = modulus_divisor(parse_point("1/x", Ga, Kx()), Ga, Kx());
  EXPECT_EQ(a.degree(), 2);
  EXPECT_EQ(mult_at(a, "x"), 2);
  ModulusDivisor b = modulus_divisor(parse_point("x", Gm, Kx()), Gm, Kx());
  EXPECT_EQ(mult_at(b, "x"), 1);
  EXPECT_EQ(mult_at(b, "inf"), 1);
  ModulusDivisor c = modulus_divisor(parse_point("1/x^2", Ga, Kx()), Ga, Kx());
  EXPECT_EQ(mult_at(c, "x"), 2);
  EXPECT_EQ(c.degree(), 2);
}

TEST(Modulus, Factorization) {
  const Layer* F2 = parse_field("F2");
  // x^4 + x = x (x + 1) (x^2 + x + 1)
  Poly f{F2, {zero(F2), one(F2), zero(F2), zero(F2), one(F2)}};
  auto fac = factor_poly(f);
  ASSERT_EQ(fac.size(), 3u);
  Poly prod{F2, {one(F2)}};
  for (const auto& [q, e] : fac)
    for (int i = 0; i < e; ++i) prod = poly_mul(prod, q);
  EXPECT_TRUE(poly_eq(prod, f));
}

TEST(Modulus, EmbeddingIndependence) {
  const Layer* K = parse_field("F2((t))");
  for (const char* s : {"t^-1", "t^-6 + t^-3", "t^-5"}) {
    std::vector<WittVector> w{parse_witt(s, K, 1)};
    auto [a, b] = local_embedding_pair(w, hom_identity(1), hom_V(1));
    EXPECT_EQ(a, b) << s;
    EXPECT_EQ(filF_level(witt_V(w[0])).s, filF_level(w[0]).s);
  }
}

TEST(Modulus, Swan) {
  const Layer* K = parse_field("F2((t))");
  EXPECT_EQ(swan_conductor(parse_witt("t^-2", K, 1)).swan, 1);
  EXPECT_EQ(swan_conductor(parse_witt("t^-3", K, 1)).swan, 3);
  EXPECT_EQ(swan_conductor(parse_witt("1 + t", K, 1)).swan, 0);
  EXPECT_THROW(swan_conductor(parse_witt("t^-4 + O(t^-2)", K, 1)), PrecisionExhausted);
  Prop48Report r = verify_prop48(parse_witt("t^-6 + t^-3", K, 1));
  EXPECT_TRUE(r.ok) << r.detail;
}
