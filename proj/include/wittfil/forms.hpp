#pragma once

#include <map>
#include <string>
#include <vector>

#include "wittfil/field.hpp"

namespace wittfil {

/// Differential form on the log basis of a field layer. Coefficients are kept
/// on strictly increasing index subsets of the basis.
struct LogForm {
  const Layer* layer = nullptr;
  std::vector<FormSymbol> basis;
  int degree = 0;
  std::map<std::vector<int>, Elem> coeffs;

  bool is_zero() const;
  Elem coefficient(const std::vector<int>& subset) const;
};

LogForm form_zero(const Layer* L, int degree);
LogForm form_scalar(const Elem& f);  // degree-0 form
LogForm form_d(const Elem& f);
LogForm form_dlog(const Elem& f);
LogForm form_add(const LogForm& a, const LogForm& b);
LogForm form_scale(const LogForm& a, const Elem& c);
LogForm form_wedge(const LogForm& a, const LogForm& b);
bool form_eq(const LogForm& a, const LogForm& b);

/// t^0 coefficient of the dlog(t) component of a 1-form over a Laurent layer.
Elem residue1(const LogForm& w);
/// Iterated residue of a top-degree form: peels the top Laurent variable first.
Elem higher_residue(const LogForm& w);

std::string render_form(const LogForm& w);

}  // namespace wittfil
