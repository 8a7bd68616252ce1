#include <gtest/gtest.h>

#include "wittfil/filtration.hpp"
#include "wittfil/oracle.hpp"

using namespace wittfil;

namespace {
const Layer* F2t() { return parse_field("F2((t))"); }
WittVector W(const char* s, const Layer* L, int n) { return parse_witt(s, L, n); }
}  // namespace

TEST(Filtration, NaiveLevel) {
  EXPECT_EQ(naive_level(W("W(t^-3; 0)", F2t(), 2)), 6);
  EXPECT_EQ(naive_level(W("W(0; t^-3)", F2t(), 2)), 3);
  EXPECT_EQ(naive_level(witt_zero(F2t(), 2)), 0);
}

TEST(Filtration, FlatFil) {
  EXPECT_FALSE(in_flat_fil(W("t^-3", F2t(), 1), 3));
  EXPECT_TRUE(in_flat_fil(W("t^-2", F2t(), 1), 2));
  EXPECT_FALSE(in_flat_fil(W("W(t^-1; 0)", F2t(), 2), 2));
}

TEST(Filtration, FilFLevel) {
  LevelResult a = filF_level(W("W(t^-2; 0)", F2t(), 2));
  EXPECT_EQ(a.s, 2);
  EXPECT_TRUE(a.witness.valid());
  EXPECT_TRUE(witt_eq(a.witness.reconstruct(), W("W(t^-2; 0)", F2t(), 2)));
  ASSERT_GE(a.witness.parts.size(), 2u);
  EXPECT_TRUE(witt_eq(a.witness.parts[1], W("W(t^-1; 0)", F2t(), 2)));
  EXPECT_EQ(filF_level(W("W(t^-3; 0)", F2t(), 2)).s, 6);
  EXPECT_EQ(filF_level(W("t^-2 + t^-3", F2t(), 1)).s, 3);
  EXPECT_EQ(filF_level(W("W(0; t^-4)", F2t(), 2)).s, 1);
}

TEST(Filtration, FlatMinimum) {
  for (const char* s : {"t^-1", "t^-3 + t^-2", "t^-6", "t^-5 + t"}) {
    WittVector x = W(s, F2t(), 1);
    EXPECT_EQ(flat_filF_min(x), filF_level(x).s + 1) << s;
  }
  const Layer* Ku = parse_field("F2(u)((t))");
  EXPECT_EQ(flat_filF_min(W("u*t^-2", Ku, 1)), 2);
  EXPECT_EQ(flat_filF_min(W("u*t^-3", Ku, 1)), 4);
  EXPECT_EQ(flat_filF_min(W("W(t^-3; 0)", F2t(), 2)), 7);
}

TEST(Filtration, Delta) {
  LogForm d = delta(W("W(t^-3; 0)", F2t(), 2));
  EXPECT_TRUE(eq(d.coefficient({0}), parse_elem("t^-6", F2t())));
  EXPECT_TRUE(delta(witt_zero(F2t(), 2)).is_zero());
  LogForm d1 = delta(W("t^-3 + t", F2t(), 1));
  EXPECT_TRUE(form_eq(d1, form_d(parse_elem("t^-3 + t", F2t()))));
}

TEST(Filtration, ThetaBar) {
  // n = 1, x = g t^-3 over F4: coefficient -3 g = g on dlog t
  const Layer* K4 = parse_field("F4((t))");
  WittVector x = W("g*t^-3", K4, 1);
  LevelResult lr = filF_level(x);
  ASSERT_EQ(lr.s, 3);
  DBarElement th = theta_bar(lr.witness, 3);
  auto col = th.collapse();
  ASSERT_EQ(col.size(), 1u);
  EXPECT_TRUE(eq(col[0], generator(K4->base)));
  // x in fil_{m-1} gives zero
  EXPECT_TRUE(theta_bar(FilDecomposition{{W("t^-2", F2t(), 1)}, 3}, 3).is_zero());
  // F(t^-1) presented as x_1 = t^-1 at m = 2: t^-2 already lies in fil^F_1, so the class vanishes
  DBarElement f = theta_bar(FilDecomposition{{witt_zero(F2t(), 1), W("t^-1", F2t(), 1)}, 2}, 2);
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(filF_level(W("t^-2", F2t(), 1)).s, 1);
  // at its own level m = 1 the same presentation is nonzero on F^1
  DBarElement f1 = theta_bar(FilDecomposition{{witt_zero(F2t(), 1), W("t^-1", F2t(), 1)}, 1}, 1);
  ASSERT_TRUE(f1.coeffs.count(1));
  EXPECT_TRUE(is_one(f1.coeffs.at(1)[0]));
}

TEST(Filtration, Oracle) {
  EXPECT_EQ(brute_force_filF_level(W("W(t^-2; 0)", F2t(), 2)), 2);
  EXPECT_EQ(brute_force_filF_level(W("t^-5", F2t(), 1)), 5);
  EXPECT_EQ(brute_force_filF_level(W("W(0; t^-4)", F2t(), 2)), 1);
}

TEST(Filtration, Prop41Kernel) {
  const Layer* K = F2t();
  std::vector<WittVector> ys{W("t^-1 + t^-3", K, 1), W("t^-2", K, 1)};
  auto xs = prop41_h(ys);
  WittVector sum = witt_zero(K, 1);
  for (std::size_t j = 0; j < xs.size(); ++j) sum = witt_add(sum, witt_F_pow(xs[j], static_cast<int>(j)));
  EXPECT_TRUE(witt_is_zero(sum));
  Prop41Report r = verify_prop41(xs, 6);
  EXPECT_TRUE(r.in_image) << (r.failures.empty() ? "" : r.failures[0]);
}

TEST(Filtration, WindowTooShortRaises) {
  EXPECT_THROW(filF_level(W("t^-4 + O(t^-2)", F2t(), 1)), PrecisionExhausted);
  // an explicit window that covers every pole is fine
  EXPECT_EQ(filF_level(W("t^-3 + O(t^0)", F2t(), 1)).s, 3);
}
