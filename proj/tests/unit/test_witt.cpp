#include <gtest/gtest.h>

#include "wittfil/homword.hpp"
#include "wittfil/local_symbols.hpp"
#include "wittfil/witt.hpp"

using namespace wittfil;

namespace {
WittVector W(const char* s, const Layer* L, int n) { return parse_witt(s, L, n); }
}  // namespace

TEST(Witt, AdditionCarries) {
  const Layer* F2 = parse_field("F2");
  EXPECT_TRUE(witt_eq(witt_add(W("W(1; 0)", F2, 2), W("W(1; 0)", F2, 2)), W("W(0; 1)", F2, 2)));
  WittVector x = W("W(1; 1)", F2, 2);
  EXPECT_TRUE(witt_eq(witt_add(x, witt_zero(F2, 2)), x));
  EXPECT_TRUE(witt_eq(witt_mul(W("W(1; 0)", F2, 2), W("W(1; 0)", F2, 2)), W("W(1; 0)", F2, 2)));
}

TEST(Witt, MatchesZMod4) {
  // W_2(F_2) = Z/4 through the Galois ring identification
  const Layer* F2 = parse_field("F2");
  const Layer* Z4 = parse_field("Z/4");
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      WittVector x = galois_to_witt(from_int(Z4, a), F2), y = galois_to_witt(from_int(Z4, b), F2);
      EXPECT_TRUE(eq(witt_to_galois(witt_add(x, y), Z4), from_int(Z4, a + b)));
      EXPECT_TRUE(eq(witt_to_galois(witt_mul(x, y), Z4), from_int(Z4, a * b)));
    }
}

TEST(Witt, GhostOverIntegers) {
  auto gh = ghost(IntWitt{2, {3, 5}});
  ASSERT_EQ(gh.size(), 2u);
  EXPECT_EQ(gh[0], 3);
  EXPECT_EQ(gh[1], 19);
}

TEST(Witt, FrobeniusAndVerschiebung) {
  const Layer* K = parse_field("F2((t))");
  EXPECT_TRUE(witt_eq(witt_F(W("W(t^-1; 0)", K, 2)), W("W(t^-2; 0)", K, 2)));
  EXPECT_TRUE(witt_is_zero(witt_F(witt_zero(K, 3))));
  EXPECT_TRUE(witt_eq(witt_V(W("t^-1", K, 1)), W("W(0; t^-1)", K, 2)));
  WittVector x = W("W(t^-1 + t; 1 + t^-2)", K, 2);
  EXPECT_TRUE(witt_eq(witt_truncate(witt_F(witt_V(x)), 2), witt_mul_int(x, 2)));
  EXPECT_TRUE(witt_eq(witt_truncate(witt_V(witt_F(x)), 2), witt_mul_int(x, 2)));
}

TEST(Witt, TeichmullerMultiplicative) {
  const Layer* K = parse_field("F4((t))");
  Elem a = parse_elem("g*t^-1 + 1", K), b = parse_elem("(g + 1)*t^2", K);
  EXPECT_TRUE(witt_eq(witt_mul(teichmuller(a, 3), teichmuller(b, 3)), teichmuller(mul(a, b), 3)));
}

TEST(Witt, PhiNOfVerschiebung) {
  // phi_2((0, t^-1)) = 2 [t]^-1: coefficient 2 in Z/4 at t^-1
  const Layer* K = parse_field("F2((t))");
  ATower T = a_tower(K, 2);
  Elem ph = phi_n(W("W(0; t^-1)", K, 2), T.A);
  EXPECT_EQ(valuation(ph), -1);
  EXPECT_TRUE(eq(coeff(ph, -1), from_int(T.A->base, 2)));
}

TEST(HomWords, VAndScalars) {
  const Layer* K = parse_field("F2((t))");
  auto out = apply_hom(hom_V(1), {W("t^-1", K, 1)});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_TRUE(witt_eq(out[0], W("W(0; t^-1)", K, 2)));

  const Layer* F4 = parse_field("F4");
  const Layer* K4 = parse_field("F4((t))");
  Elem a = generator(F4), b = add(generator(F4), one(F4));
  WittVector c = teichmuller(a, 2);
  auto r = apply_hom(hom_scalar(c), {teichmuller(coerce(b, K4), 2)});
  EXPECT_TRUE(witt_eq(r[0], teichmuller(coerce(mul(a, b), K4), 2)));
}

TEST(HomWords, TypecheckRejectsBadShapes) {
  HomWord h = hom_identity(1);
  h.dst = {2};
  EXPECT_THROW(hom_typecheck(h), ShapeMismatch);
}
