#include <gtest/gtest.h>

#include <random>

#include "wittfil/field.hpp"
#include "wittfil/forms.hpp"
#include "wittfil/extensions.hpp"

using namespace wittfil;

namespace {
Elem P(const char* s, const Layer* L) { return parse_elem(s, L); }
}  // namespace

TEST(Fields, CharacteristicTwoCancels) {
  const Layer* L = parse_field("F2(u)");
  Elem u = P("u", L);
  EXPECT_TRUE(is_zero(add(u, u)));
}

TEST(Fields, WindowedProductShifts) {
  const Layer* L = parse_field("F2((t))");
  Elem a = mul(P("t^-1 + 1 + O(t^3)", L), P("t", L));
  EXPECT_TRUE(eq(a, P("1 + t + O(t^4)", L)));
  EXPECT_EQ(*precision(a), 4);
}

TEST(Fields, WindowedInverse) {
  const Layer* L = parse_field("F2((t))");
  Elem a = inv(P("1 + t + O(t^4)", L));
  EXPECT_TRUE(eq(a, P("1 + t + t^2 + t^3 + O(t^4)", L)));
  EXPECT_TRUE(eq(mul(a, P("1 + t + O(t^4)", L)), P("1 + O(t^4)", L)));
}

TEST(Fields, FrobeniusAndRoots) {
  const Layer* F4 = parse_field("F4");
  EXPECT_TRUE(eq(frob(generator(F4)), pow(generator(F4), 2)));
  const Layer* Fu = parse_field("F2(u)");
  EXPECT_TRUE(eq(pth_root(P("u^2", Fu)), P("u", Fu)));
  EXPECT_THROW(pth_root(P("u", Fu)), NotAPthPower);
  EXPECT_FALSE(is_pth_power(P("u", Fu)));
  const Layer* Ft = parse_field("F2((t))");
  EXPECT_TRUE(eq(pth_root(P("t^2 + t^4 + O(t^8)", Ft)), P("t + t^2 + O(t^4)", Ft)));
}

TEST(Fields, PBase) {
  EXPECT_TRUE(p_base(parse_field("F4")).empty());
  EXPECT_EQ(p_base(parse_field("F2(u)")), std::vector<std::string>{"u"});
  // the Laurent variable of k_1 = F2((t1)) is its own p-base element: dlog(t1) spans the forms
  auto b = form_basis(parse_field("F2((t1))"));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].var, "t1");
}

TEST(Forms, ResidueOne) {
  const Layer* L = parse_field("F2((t))");
  Elem t = generator(L);
  EXPECT_TRUE(is_one(residue1(form_scale(form_dlog(t), mul(inv(t), t)))));
  EXPECT_TRUE(is_zero(residue1(form_scale(form_dlog(t), inv(t)))));
  // t (1 + t)^-1 = t + t^2 + ... has no constant term
  EXPECT_TRUE(is_zero(residue1(form_scale(form_dlog(t), mul(inv(P("1 + t", L)), t)))));
  EXPECT_TRUE(is_one(residue1(form_scale(form_dlog(t), inv(P("1 + t", L))))));
}

TEST(Forms, DifferentialOfMonomial) {
  // d(u t^-2) = t^-2 du in characteristic 2
  const Layer* L = parse_field("F2(u)((t))");
  LogForm w = form_d(P("u*t^-2", L));
  ASSERT_EQ(w.basis.size(), 2u);
  EXPECT_TRUE(eq(w.coefficient({0}), P("t^-2", L)));
  EXPECT_TRUE(is_zero(w.coefficient({1})));
}

TEST(GaloisRing, ZMod4) {
  const Layer* Z4 = parse_field("Z/4");
  EXPECT_TRUE(is_zero(add(from_int(Z4, 2), from_int(Z4, 2))));
  EXPECT_TRUE(is_one(mul(from_int(Z4, 3), from_int(Z4, 3))));
}

TEST(GaloisRing, TeichmullerOrderThree) {
  const Layer* GR = parse_field("GR(2,2,2)");
  const Layer* F4 = residue_galois(GR);
  Elem tg = gr_teichmuller(GR, generator(F4));
  EXPECT_TRUE(is_one(pow(tg, 3)));
  EXPECT_FALSE(is_one(tg));
}

TEST(Parse, SparseSeriesAndErrors) {
  const Layer* L = parse_field("F2((t))");
  Elem a = P("t^-3 + t^-2", L);
  EXPECT_EQ(valuation(a), -3);
  EXPECT_TRUE(is_one(coeff(a, -2)));
  EXPECT_TRUE(is_zero(coeff(a, -1)));
  try {
    P("t^-3 + * t", L);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_GT(e.position(), 0u);
  }
  EXPECT_THROW(parse_field("Q((t))"), ParseError);
}

TEST(Parse, RoundTripRandom) {
  std::mt19937_64 g(7);
  for (const char* d : {"F2((t))", "F4((t))", "F3((t))", "F2(u)((t))", "F2((t1))((t2))", "F2(x)"}) {
    const Layer* L = parse_field(d);
    const Layer* kappa = L->kind == LayerKind::Laurent ? L->base : L;
    for (int i = 0; i < 50; ++i) {
      Elem s = zero(L);
      for (int k = 0; k < 3; ++k) {
        Elem c = from_int(kappa, static_cast<int64_t>(g() % 5));
        if (kappa->kind == LayerKind::Galois && kappa->gr_e > 1) c = add(c, mul(generator(kappa), from_int(kappa, g() % 2)));
        if (kappa->kind == LayerKind::Rational) c = add(c, div(generator(kappa), add(generator(kappa), one(kappa))));
        if (kappa->kind == LayerKind::Laurent) c = monomial(kappa, from_int(kappa->base, 1), static_cast<int64_t>(g() % 5) - 2);
        s = L->kind == LayerKind::Laurent ? add(s, monomial(L, c, static_cast<int64_t>(g() % 9) - 5))
                                          : add(s, mul(c, pow(generator(L), static_cast<int64_t>(g() % 4))));
      }
      const std::string r = render(s);
      EXPECT_TRUE(eq(parse_elem(r, L), s)) << d << ": " << r;
      EXPECT_EQ(render(parse_elem(r, L)), r);
    }
  }
}
