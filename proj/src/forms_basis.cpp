#include <algorithm>

#include "field_impl.hpp"

namespace wittfil {

std::vector<FormSymbol> form_basis(const Layer* L) {
  std::vector<FormSymbol> out;
  for (const Layer* x = L; x != nullptr; x = x->base) {
    if (x->kind == LayerKind::Perfection || x->kind == LayerKind::Galois) break;
    if (x->kind == LayerKind::Rational)
      out.push_back({FormSymbol::D, x, x->var});
    else
      out.push_back({FormSymbol::DLOG, x, x->var});
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Elem derivation(const Elem& a, const FormSymbol& s) {
  const Layer* L = a.layer();
  if (!below_or_equal(s.layer, L)) return zero(L);
  switch (L->kind) {
    case LayerKind::Galois:
    case LayerKind::Perfection:
      return zero(L);
    case LayerKind::Laurent: {
      const LaurentData& d = a.laurent();
      std::vector<Elem> c;
      c.reserve(d.c.size());
      for (std::size_t i = 0; i < d.c.size(); ++i) {
        if (L == s.layer)
          c.push_back(mul_int(d.c[i], d.val + static_cast<int64_t>(i)));
        else
          c.push_back(derivation(d.c[i], s));
      }
      return Elem::make_laurent(L, d.val, std::move(c), d.prec);
    }
    case LayerKind::Rational: {
      const RationalData& d = a.rational();
      auto dp = [&](const Poly& f) {
        if (L == s.layer) return poly_deriv(f);
        Poly g{f.base, {}};
        for (const auto& x : f.c) g.c.push_back(derivation(x, s));
        return poly_trim(std::move(g));
      };
      Poly num = poly_sub(poly_mul(dp(d.num), d.den), poly_mul(d.num, dp(d.den)));
      return Elem::make_rational(L, num, poly_mul(d.den, d.den));
    }
  }
  return zero(L);
}

}  // namespace wittfil
