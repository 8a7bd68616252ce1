#include "wittfil/forms.hpp"

#include <algorithm>

namespace wittfil {

bool LogForm::is_zero() const {
  for (const auto& [s, c] : coeffs)
    if (!wittfil::is_zero(c)) return false;
  return true;
}

Elem LogForm::coefficient(const std::vector<int>& subset) const {
  auto it = coeffs.find(subset);
  return it == coeffs.end() ? zero(layer) : it->second;
}

LogForm form_zero(const Layer* L, int degree) { return LogForm{L, form_basis(L), degree, {}}; }

LogForm form_scalar(const Elem& f) {
  LogForm w = form_zero(f.layer(), 0);
  if (!is_zero(f)) w.coeffs[{}] = f;
  return w;
}

LogForm form_d(const Elem& f) {
  LogForm w = form_zero(f.layer(), 1);
  for (std::size_t i = 0; i < w.basis.size(); ++i) {
    Elem c = derivation(f, w.basis[i]);
    if (!is_zero(c)) w.coeffs[{static_cast<int>(i)}] = c;
  }
  return w;
}

LogForm form_dlog(const Elem& f) { return form_scale(form_d(f), inv(f)); }

LogForm form_add(const LogForm& a, const LogForm& b) {
  if (a.degree != b.degree) throw ShapeMismatch("adding forms of different degree");
  LogForm r = a;
  for (const auto& [s, c] : b.coeffs) {
    auto it = r.coeffs.find(s);
    Elem v = it == r.coeffs.end() ? c : add(it->second, c);
    if (is_zero(v))
      r.coeffs.erase(s);
    else
      r.coeffs[s] = v;
  }
  return r;
}

LogForm form_scale(const LogForm& a, const Elem& c) {
  LogForm r{a.layer, a.basis, a.degree, {}};
  for (const auto& [s, v] : a.coeffs) {
    Elem x = mul(v, c);
    if (!is_zero(x)) r.coeffs[s] = x;
  }
  return r;
}

LogForm form_wedge(const LogForm& a, const LogForm& b) {
  LogForm r{a.layer, a.basis, a.degree + b.degree, {}};
  for (const auto& [sa, ca] : a.coeffs)
    for (const auto& [sb, cb] : b.coeffs) {
      std::vector<int> s = sa;
      s.insert(s.end(), sb.begin(), sb.end());
      // sign of the sorting permutation; repeated symbols vanish
      int sign = 1;
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
          if (s[i] == s[j]) sign = 0;
          if (s[i] > s[j]) sign = -sign;
        }
      if (sign == 0) continue;
      std::sort(s.begin(), s.end());
      Elem v = mul(ca, cb);
      if (sign < 0) v = neg(v);
      auto it = r.coeffs.find(s);
      if (it != r.coeffs.end()) v = add(it->second, v);
      if (is_zero(v))
        r.coeffs.erase(s);
      else
        r.coeffs[s] = v;
    }
  return r;
}

bool form_eq(const LogForm& a, const LogForm& b) {
  LogForm d = form_add(a, form_scale(b, from_int(b.layer, -1)));
  return d.is_zero();
}

Elem residue1(const LogForm& w) {
  if (w.layer->kind != LayerKind::Laurent || w.basis.empty() || w.degree != 1)
    throw ShapeMismatch("residue needs a 1-form over a Laurent layer");
  int top = static_cast<int>(w.basis.size()) - 1;
  return coeff(w.coefficient({top}), 0);
}

Elem higher_residue(const LogForm& w) {
  LogForm cur = w;
  while (cur.degree > 0) {
    if (cur.layer->kind != LayerKind::Laurent) throw ShapeMismatch("residue below the Laurent layers");
    const int top = static_cast<int>(cur.basis.size()) - 1;
    const Layer* lower = cur.layer->base;
    LogForm next = form_zero(lower, cur.degree - 1);
    for (const auto& [s, c] : cur.coeffs) {
      if (s.empty() || s.back() != top) continue;
      std::vector<int> rest(s.begin(), s.end() - 1);
      Elem r = coeff(c, 0);
      if (!is_zero(r)) next.coeffs[rest] = r;
    }
    cur = next;
  }
  return cur.coefficient({});
}

std::string render_form(const LogForm& w) {
  std::string out;
  for (const auto& [s, c] : w.coeffs) {
    std::string sym;
    for (int i : s) sym += (sym.empty() ? "" : "^") + w.basis[i].str();
    if (!out.empty()) out += " + ";
    out += "(" + render(c) + ")" + (sym.empty() ? "" : "*" + sym);
  }
  return out.empty() ? "0" : out;
}

}  // namespace wittfil
