#pragma once

#include <string>
#include <vector>

#include "wittfil/witt.hpp"

namespace wittfil {

struct HomLetter {
  enum class Kind { F, V, Scalar, Trunc };
  Kind kind = Kind::F;
  WittVector scalar;  // Kind::Scalar, over the constant field
  int len = 0;        // Kind::Trunc target length

  static HomLetter f() { return {Kind::F, {}, 0}; }
  static HomLetter v() { return {Kind::V, {}, 0}; }
  static HomLetter mul(WittVector c) { return {Kind::Scalar, std::move(c), 0}; }
  static HomLetter trunc(int n) { return {Kind::Trunc, {}, n}; }
};

/// Letters applied left to right.
using Word = std::vector<HomLetter>;

/// Homomorphism (+)_i W_{src[i]} -> (+)_j W_{dst[j]}; entry [j][i] is a sum of
/// words, each truncated to dst[j] after evaluation.
struct HomWord {
  std::vector<int> src, dst;
  std::vector<std::vector<std::vector<Word>>> entries;  // [dst][src]
};

HomWord hom_zero(std::vector<int> src, std::vector<int> dst);
HomWord hom_identity(int n);
HomWord hom_V(int n);  // W_n -> W_{n+1}
HomWord hom_F(int n);
HomWord hom_scalar(const WittVector& c);  // W_{c.n()} -> W_{c.n()}
HomWord hom_diag_id_F(int n);             // W_n -> W_n (+) W_n, x -> (x, F x)
HomWord hom_sum(const HomWord& a, const HomWord& b);
HomWord hom_compose(const HomWord& outer, const HomWord& inner);  // outer after inner

/// Throws ShapeMismatch when a word cannot reach its target length.
void hom_typecheck(const HomWord& h);
std::vector<WittVector> apply_hom(const HomWord& h, const std::vector<WittVector>& x);
/// No nonzero sample maps to zero (h is additive, so this is injectivity on the samples).
bool hom_injective_on(const HomWord& h, const std::vector<std::vector<WittVector>>& samples);

std::string render_hom(const HomWord& h);

}  // namespace wittfil
