#pragma once

// Per-kind kernels shared between the field translation units.

#include "wittfil/field.hpp"

namespace wittfil::detail {

// Galois layer kernels
Elem gal_add(const Elem& a, const Elem& b);
Elem gal_neg(const Elem& a);
Elem gal_mul(const Elem& a, const Elem& b);
Elem gal_inv(const Elem& a);
Elem gal_sigma(const Elem& a);
Elem gal_from_int(const Layer* L, int64_t k);
bool gal_is_zero(const Elem& a);
bool gal_eq(const Elem& a, const Elem& b);
std::vector<int64_t> smallest_irreducible(int p, int e);
std::vector<int64_t> teichmuller_modulus(int p, int n, const std::vector<int64_t>& f);

// rational-chain helpers used by the perfection layer
Elem rc_inflate(const Elem& a);
bool rc_deflatable(const Elem& a);
Elem rc_deflate(const Elem& a);
Elem rc_twist(const Elem& a, int k);

Elem rat_raw(const Layer* L, Poly num, Poly den);

}  // namespace wittfil::detail
