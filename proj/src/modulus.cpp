#include "wittfil/modulus.hpp"

#include <algorithm>
#include <sstream>

#include "wittfil/local_symbols.hpp"

namespace wittfil {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

// split at top-level separators (outside parentheses)
std::vector<std::pair<std::string, std::size_t>> split_top(const std::string& s, char sep) {
  std::vector<std::pair<std::string, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size()) {
      if (s[i] == '(' || s[i] == '{') ++depth;
      if (s[i] == ')' || s[i] == '}') --depth;
    }
    if (i == s.size() || (s[i] == sep && depth == 0)) {
      out.push_back({s.substr(start, i - start), start});
      start = i + 1;
    }
  }
  return out;
}

bool unit_or_integral(const GroupPoint& x) {
  for (const auto& t : x.torus)
    if (valuation(t) != 0) return false;
  for (const auto& w : x.witt)
    if (naive_level(w) > 0) return false;
  return true;
}

}  // namespace

SplitGroup parse_group(const std::string& src) {
  SplitGroup G;
  std::string s = src;
  // factors are separated by " x " or "*"
  std::vector<std::string> parts;
  std::size_t pos = 0;
  std::string cur;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    if (tok == "x" || tok == "*") {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += tok;
    }
  }
  parts.push_back(cur);
  for (const auto& raw : parts) {
    const std::string t = trim(raw);
    pos = s.find(t);
    if (t.empty()) throw ParseError("empty group factor", pos == std::string::npos ? 0 : pos, "Gm, Ga or Wn");
    if (t.rfind("Gm", 0) == 0) {
      int k = 1;
      if (t.size() > 2) {
        if (t[2] != '^') throw ParseError("expected '^' after Gm", pos + 2, "^");
        try {
          k = std::stoi(t.substr(3));
        } catch (...) {
          throw ParseError("bad torus rank", pos + 3, "integer");
        }
      }
      G.tm += k;
    } else if (t == "Ga") {
      G.shape.push_back(1);
    } else if (t[0] == 'W') {
      int n = 0;
      try {
        n = std::stoi(t.substr(1));
      } catch (...) {
        throw ParseError("bad Witt length", pos + 1, "integer");
      }
      if (n < 1) throw ParseError("Witt length must be positive", pos + 1, "integer >= 1");
      G.shape.push_back(n);
    } else {
      throw ParseError("unknown group factor '" + t + "'", pos, "Gm, Ga or Wn");
    }
  }
  return G;
}

std::string render_group(const SplitGroup& G) {
  std::string s;
  if (G.tm) s = "Gm^" + std::to_string(G.tm);
  for (int n : G.shape) s += (s.empty() ? "" : " x ") + (n == 1 ? std::string("Ga") : "W" + std::to_string(n));
  return s.empty() ? "0" : s;
}

GroupPoint parse_point(const std::string& src, const SplitGroup& G, const Layer* K) {
  auto parts = split_top(src, ';');
  const std::size_t want = G.tm + G.shape.size();
  if (parts.size() != want)
    throw ParseError("expected " + std::to_string(want) + " coordinates separated by ';'", 0, "coordinate list");
  GroupPoint x;
  std::size_t i = 0;
  for (; i < static_cast<std::size_t>(G.tm); ++i) {
    try {
      Elem e = parse_elem(parts[i].first, K);
      if (is_zero(e)) throw DivisionByZero("torus coordinate is zero");
      x.torus.push_back(e);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), parts[i].second + e.position(), e.expected());
    }
  }
  for (int n : G.shape) {
    try {
      x.witt.push_back(parse_witt(parts[i].first, K, n));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), parts[i].second + e.position(), e.expected());
    }
    ++i;
  }
  return x;
}

std::string render_point(const GroupPoint& x) {
  std::string s;
  for (const auto& t : x.torus) s += (s.empty() ? "" : " ; ") + render(t);
  for (const auto& w : x.witt) s += (s.empty() ? "" : " ; ") + render_witt(w);
  return s;
}

GroupPoint apply_post(const SplitGroup& G, const GroupPoint& x) {
  if (!G.post) return x;
  GroupPoint y{x.torus, apply_hom(*G.post, x.witt)};
  return y;
}

int mod_v(const GroupPoint& local) {
  if (unit_or_integral(local)) return 0;
  int r = 0;
  for (const auto& w : local.witt) r = std::max(r, filF_level(w).s);
  return 1 + r;
}

int ModulusDivisor::degree() const {
  int d = 0;
  for (const auto& [v, m] : terms) d += m * v.degree;
  return d;
}

namespace {

GroupPoint localize(const GroupPoint& x, const Place& v, int prec) {
  GroupPoint y;
  for (const auto& t : x.torus) y.torus.push_back(completion_at_place(t, v, prec));
  for (const auto& w : x.witt) y.witt.push_back(completion_at_place(w, v, prec));
  return y;
}

}  // namespace

ModulusDivisor modulus_divisor(const GroupPoint& x0, const SplitGroup& G, const Layer* Kglob, int prec) {
  GroupPoint x = apply_post(G, x0);
  ModulusDivisor D;
  for (const auto& v : candidate_places(x, Kglob)) {
    int m = mod_v(localize(x, v, prec));
    if (m) D.terms.push_back({v, m});
  }
  return D;
}

std::pair<int, int> local_embedding_pair(const std::vector<WittVector>& w, const HomWord& h1, const HomWord& h2) {
  GroupPoint a{{}, apply_hom(h1, w)}, b{{}, apply_hom(h2, w)};
  return {mod_v(a), mod_v(b)};
}

EmbeddingReport check_embedding_independence(const GroupPoint& x, const HomWord& h1, const HomWord& h2,
                                             const Layer* Kglob, int prec) {
  EmbeddingReport rep;
  GroupPoint a{x.torus, apply_hom(h1, x.witt)}, b{x.torus, apply_hom(h2, x.witt)};
  std::vector<Place> places = candidate_places(a, Kglob);
  for (const auto& v : candidate_places(b, Kglob))
    if (std::none_of(places.begin(), places.end(), [&](const Place& w) { return w.name == v.name; }))
      places.push_back(v);
  std::sort(places.begin(), places.end());
  for (const auto& v : places) {
    int ma = mod_v(localize(a, v, prec)), mb = mod_v(localize(b, v, prec));
    rep.values.push_back({ma, mb});
    if (ma != mb)
      rep.mismatches.push_back("place " + v.name + ": " + std::to_string(ma) + " via " + render_hom(h1) + ", " +
                               std::to_string(mb) + " via " + render_hom(h2));
  }
  return rep;
}

// ---- Swan ---------------------------------------------------------------------

SwanResult swan_conductor(const WittVector& f) {
  const Layer* K = f.layer;
  if (K->kind != LayerKind::Laurent) throw UnsupportedRing("Swan conductor needs kappa((t))");
  const int p = f.p(), n = f.n();
  WittVector g = f;
  while (true) {
    const int L = naive_level(g);
    if (L == 0) return {0, g};
    const int o = ord_p(L, p);
    bool changed = false;
    for (int i = std::min(o, n - 1); i >= 0; --i) {
      int64_t e = L;
      for (int k = 0; k < i; ++k) e /= p;
      Elem a = coeff(g.a(i), -e);
      if (is_zero(a)) continue;
      if (i == o) return {L, g};
      if (!is_pth_power(a)) throw UnsupportedResidueField("Swan reduction needs a perfect residue field");
      // subtract (F - 1)(y) with F(y) the boundary monomial
      WittVector y = witt_monomial(K, n, i, monomial(K, pth_root(a), -e / p));
      g = witt_add(witt_sub(g, witt_monomial(K, n, i, monomial(K, a, -e))), y);
      changed = true;
      break;
    }
    if (!changed) throw InvalidDecomposition("Swan reduction made no progress");
  }
}

std::vector<Elem> refined_swan(const SwanResult& s) {
  std::vector<FormSymbol> basis = form_basis(s.reduced.layer);
  std::vector<Elem> out;
  const Layer* kappa = s.reduced.layer->base;
  if (s.swan == 0) {
    for (std::size_t k = 0; k < basis.size(); ++k) out.push_back(zero(kappa));
    return out;
  }
  LogForm w = delta(s.reduced);
  for (std::size_t k = 0; k < basis.size(); ++k) out.push_back(coeff(w.coefficient({static_cast<int>(k)}), -s.swan));
  return out;
}

Prop48Report verify_prop48(const WittVector& f) {
  Prop48Report rep;
  LevelResult lr = filF_level(f);
  SwanResult sw = swan_conductor(f);
  rep.level = lr.s;
  rep.swan = sw.swan;
  if (sw.swan > lr.s) {
    rep.ok = false;
    rep.detail = "swan exceeds filF level";
    return rep;
  }
  if (lr.s == 0) return rep;
  std::vector<Elem> col = theta_bar(lr.witness, lr.s).collapse();
  std::vector<Elem> rsw = refined_swan(sw);
  if (col.empty()) col.assign(rsw.size(), zero(f.layer->base));
  for (std::size_t k = 0; k < rsw.size(); ++k) {
    Elem expect = sw.swan == lr.s ? rsw[k] : zero(f.layer->base);
    if (!eq(col[k], expect)) {
      rep.ok = false;
      rep.detail = "coordinate " + std::to_string(k) + ": collapse " + render(col[k]) + " vs " + render(expect);
    }
  }
  return rep;
}

// ---- surface ----------------------------------------------------------------------

Elem expand_rational_coefficients(const Elem& a, const Layer* target) {
  const Layer* k1 = target->base;  // F_p((y))
  const LaurentData& d = a.laurent();
  std::vector<Elem> c;
  for (const auto& r : d.c) {
    const RationalData& rd = r.rational();
    Elem num = zero(k1), den = zero(k1);
    for (std::size_t i = 0; i < rd.num.c.size(); ++i)
      num = add(num, monomial(k1, rd.num.c[i], static_cast<int64_t>(i)));
    for (std::size_t i = 0; i < rd.den.c.size(); ++i)
      den = add(den, monomial(k1, rd.den.c[i], static_cast<int64_t>(i)));
    c.push_back(div(num, den));
  }
  return Elem::make_laurent(target, d.val, std::move(c), d.prec);
}

WittVector expand_rational_coefficients(const WittVector& f, const Layer* target) {
  WittVector w{target, {}};
  for (const auto& x : f.x) w.x.push_back(expand_rational_coefficients(x, target));
  return w;
}

int surface_pairing_threshold(const WittVector& phi_kv, const Layer* k2, int span) {
  WittVector phi = expand_rational_coefficients(phi_kv, k2);
  const int N = naive_level(phi);
  if (N == 0) return 0;
  for (int j = N + 1; j >= 1; --j)
    for (const auto& g : unit_generators(k2, j, 'U', span)) {
      if (valuation(sub(g.symbol[0], one(k2))) != j) continue;  // exact level j only
      if (!witt_is_zero(local_symbol_wn(phi, g.symbol))) return j + 1;
    }
  return 0;
}

}  // namespace wittfil
