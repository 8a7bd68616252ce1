#include <gtest/gtest.h>

#include "wittfil/local_symbols.hpp"

using namespace wittfil;

namespace {
const Layer* F2t() { return parse_field("F2((t))"); }
Elem E(const char* s, const Layer* L) { return parse_elem(s, L); }
}  // namespace

TEST(Symbols, Tame) {
  EXPECT_TRUE(is_one(local_symbol_gm(E("t", F2t()), E("t", F2t()))));
  EXPECT_TRUE(is_one(local_symbol_gm(E("t", F2t()), E("1 + t", F2t()))));
  EXPECT_TRUE(is_one(local_symbol_gm(E("1 + t", F2t()), E("1 + t^2", F2t()))));
  // over F3: (t, t) = -1
  const Layer* K3 = parse_field("F3((t))");
  EXPECT_TRUE(eq(local_symbol_gm(E("t", K3), E("t", K3)), from_int(K3->base, -1)));
}

TEST(Symbols, WittLengthOneAndTwo) {
  const Layer* K = F2t();
  WittVector s1 = local_symbol_wn(parse_witt("t^-1", K, 1), {E("1 + t", K)});
  EXPECT_TRUE(is_one(s1.x[0]));
  WittVector s2 = local_symbol_wn(parse_witt("W(0; t^-1)", K, 2), {E("1 + t", K)});
  EXPECT_TRUE(witt_eq(s2, parse_witt("W(0; 1)", parse_field("F2"), 2)));
  WittVector s3 = local_symbol_wn(parse_witt("W(1 + t; t^2)", K, 2), {E("1 + t + t^3", K)});
  EXPECT_TRUE(witt_is_zero(s3));
}

TEST(Symbols, Thresholds) {
  const Layer* K = F2t();
  EXPECT_EQ(symbol_vanishing_threshold_wn(parse_witt("t^-1", K, 1)), 2);
  EXPECT_EQ(symbol_vanishing_threshold_wn(parse_witt("t^-2", K, 1)), 2);
  EXPECT_EQ(symbol_vanishing_threshold_wn(parse_witt("1 + t", K, 1)), 0);
  EXPECT_EQ(symbol_vanishing_threshold_wn(parse_witt("W(t^-3; 0)", K, 2)), 7);
}

TEST(Symbols, HigherResidue) {
  const Layer* K = parse_field("F2((t1))((t2))");
  ATower T = a_tower(K, 1);
  Elem t1 = coerce(generator(T.A->base), T.A), t2 = generator(T.A);
  EXPECT_TRUE(is_one(higher_residue(form_wedge(form_dlog(t1), form_dlog(t2)))));
  EXPECT_TRUE(is_zero(higher_residue(form_scale(form_wedge(form_dlog(t1), form_dlog(t2)), inv(t1)))));
  EXPECT_TRUE(is_zero(higher_residue(form_scale(form_wedge(form_dlog(t1), form_dlog(t2)), t2))));
}

TEST(Symbols, RankTwo) {
  const Layer* K = parse_field("F2((t1))((t2))");
  WittVector f = parse_witt("t2^-1", K, 1);
  EXPECT_TRUE(is_one(local_symbol_wn(f, parse_symbol("{1 + t2; t1}", K)).x[0]));
  // with b = t1^-1 the db-term dies and the t1^-1 coefficient has no residue
  EXPECT_TRUE(witt_is_zero(local_symbol_wn(f, parse_symbol("{1 + t1^-1*t2; t1}", K))));
  EXPECT_TRUE(witt_is_zero(local_symbol_wn(parse_witt("1 + t1^-1*t2", K, 1), parse_symbol("{1 + t2; t1}", K))));
}

TEST(Symbols, ParseSymbolLiteral) {
  const Layer* K = parse_field("F2(u)((t))");
  auto g = parse_symbol("{1 + u*t; u}", K);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_TRUE(eq(g[1], E("u", K)));
  EXPECT_EQ(render_symbol(g), "{" + render(g[0]) + "; u}");
  EXPECT_THROW(parse_symbol("{1 + u*t; u", K), ParseError);
}

TEST(Symbols, Prop64FormulaSpotCheck) {
  const Layer* K = F2t();
  for (const char* s : {"t^-3", "t^-5 + t^-2", "W(t^-1; t^-3)"}) {
    WittVector phi = parse_witt(s, K);
    const int m = filF_level(phi).s;
    Elem b = one(K->base);
    EXPECT_TRUE(witt_eq(local_symbol_wn(phi, {add(one(K), monomial(K, b, m))}), prop64_predict(phi, m, b))) << s;
  }
}
