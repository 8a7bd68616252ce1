#include <cctype>
#include <map>
#include <numeric>

#include "field_impl.hpp"

namespace wittfil {

// ---- field descriptors --------------------------------------------------

namespace {

int64_t parse_uint(const std::string& s, std::size_t& i) {
  std::size_t start = i;
  int64_t v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
  if (i == start) throw ParseError("expected integer in field descriptor", i, "digit");
  return v;
}

// q = p^e with p prime
std::pair<int, int> prime_power(int64_t q, std::size_t pos) {
  if (q < 2) throw ParseError("field size must be a prime power", pos);
  int64_t p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) throw ParseError("field size must be a prime power", pos);
  return {static_cast<int>(p), e};
}

std::string read_ident(const std::string& s, std::size_t& i) {
  std::size_t start = i;
  while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
  if (i == start) throw ParseError("expected variable name", i, "identifier");
  return s.substr(start, i - start);
}

}  // namespace

const Layer* parse_field(const std::string& src, int default_prec) {
  std::string s;
  for (char ch : src)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  std::size_t i = 0;
  const Layer* L = nullptr;
  if (s.compare(0, 2, "Z/") == 0) {
    i = 2;
    int64_t m = parse_uint(s, i);
    auto [p, n] = prime_power(m, 2);
    L = galois_layer(p, n, 1);
  } else if (s.compare(0, 3, "GR(") == 0) {
    i = 3;
    int64_t p = parse_uint(s, i);
    if (s[i++] != ',') throw ParseError("bad GR descriptor", i - 1, "','");
    int64_t n = parse_uint(s, i);
    if (s[i++] != ',') throw ParseError("bad GR descriptor", i - 1, "','");
    int64_t e = parse_uint(s, i);
    if (s[i++] != ')') throw ParseError("bad GR descriptor", i - 1, "')'");
    L = galois_layer(static_cast<int>(p), static_cast<int>(n), static_cast<int>(e));
  } else if (!s.empty() && s[0] == 'W' && s.size() > 1 && std::isdigit(static_cast<unsigned char>(s[1]))) {
    i = 1;
    int64_t n = parse_uint(s, i);
    if (s.compare(i, 2, "(F") != 0) throw ParseError("bad Witt ring descriptor", i, "'(F'");
    i += 2;
    auto [p, e] = prime_power(parse_uint(s, i), i);
    if (i >= s.size() || s[i++] != ')') throw ParseError("bad Witt ring descriptor", i - 1, "')'");
    L = galois_layer(p, static_cast<int>(n), e);
  } else if (!s.empty() && s[0] == 'F') {
    i = 1;
    auto [p, e] = prime_power(parse_uint(s, i), 1);
    L = galois_layer(p, 1, e);
  } else {
    throw ParseError("unknown base field", 0, "F<q>, Z/<p^n>, W<n>(F<q>)");
  }
  while (i < s.size()) {
    if (s.compare(i, 2, "((") == 0) {
      i += 2;
      std::string v = read_ident(s, i);
      if (s.compare(i, 2, "))") != 0) throw ParseError("unterminated Laurent layer", i, "'))'");
      i += 2;
      L = laurent_layer(L, v, default_prec);
    } else if (s[i] == '(') {
      ++i;
      while (true) {
        L = rational_layer(L, read_ident(s, i));
        if (i < s.size() && s[i] == ',') {
          ++i;
          continue;
        }
        if (i < s.size() && s[i] == ')') {
          ++i;
          break;
        }
        throw ParseError("bad variable list", i, "',' or ')'");
      }
    } else if (s.compare(i, 5, "^perf") == 0) {
      i += 5;
      L = perfection_layer(L);
    } else {
      throw ParseError("unexpected text in field descriptor", i, "'(', '((' or '^perf'");
    }
  }
  return L;
}

// ---- rendering ------------------------------------------------------------

namespace {

std::string render_impl(const Elem& a, int64_t den);

bool needs_parens(const std::string& s) {
  if (!s.empty() && s[0] == '-') return true;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == ' ' || c == '/')) return true;
  }
  return false;
}

std::string exponent_str(int64_t k, int64_t den) {
  if (den == 1) return k == 1 ? "" : "^" + std::to_string(k);
  int64_t g = std::gcd(k < 0 ? -k : k, den);
  int64_t nk = k / g, nd = den / g;
  if (nd == 1) return nk == 1 ? "" : "^" + std::to_string(nk);
  return "^(" + std::to_string(nk) + "/" + std::to_string(nd) + ")";
}

std::string term(const std::string& cs, bool coeff_is_one, const std::string& var, int64_t k, int64_t den) {
  if (k == 0) return cs;
  std::string mono = var + exponent_str(k, den);
  if (coeff_is_one) return mono;
  return (needs_parens(cs) ? "(" + cs + ")" : cs) + "*" + mono;
}

std::string join(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& t : terms) s += (s.empty() ? "" : " + ") + t;
  return s;
}

std::string render_poly(const Poly& f, const std::string& var, int64_t den) {
  std::vector<std::string> terms;
  for (std::size_t k = f.c.size(); k-- > 0;) {
    if (is_zero(f.c[k])) continue;
    terms.push_back(term(render_impl(f.c[k], den), is_one(f.c[k]), var, static_cast<int64_t>(k), den));
  }
  return join(terms);
}

std::string render_impl(const Elem& a, int64_t den) {
  const Layer* L = a.layer();
  switch (L->kind) {
    case LayerKind::Galois: {
      const auto& c = a.galois().c;
      std::vector<std::string> terms;
      for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        terms.push_back(term(std::to_string(c[k]), c[k] == 1, L->gen, static_cast<int64_t>(k), 1));
      }
      return join(terms);
    }
    case LayerKind::Rational: {
      const RationalData& d = a.rational();
      std::string num = render_poly(d.num, L->var, den);
      if (poly_deg(d.den) == 0) return num;
      std::string ds = render_poly(d.den, L->var, den);
      return (needs_parens(num) ? "(" + num + ")" : num) + "/(" + ds + ")";
    }
    case LayerKind::Perfection: {
      int64_t d = den;
      for (int i = 0; i < a.perf().r; ++i) d *= L->p;
      return render_impl(a.perf().inner, d);
    }
    case LayerKind::Laurent: {
      const LaurentData& d = a.laurent();
      std::vector<std::string> terms;
      for (std::size_t i = 0; i < d.c.size(); ++i) {
        if (is_zero(d.c[i])) continue;
        terms.push_back(term(render_impl(d.c[i], 1), is_one(d.c[i]), L->var, d.val + static_cast<int64_t>(i), 1));
      }
      if (d.prec) {
        terms.push_back("O(" + L->var + "^" + std::to_string(*d.prec) + ")");
        std::string s;
        for (const auto& t : terms) s += (s.empty() ? "" : " + ") + t;
        return s;
      }
      return join(terms);
    }
  }
  return "?";
}

}  // namespace

std::string render(const Elem& a) { return render_impl(a, 1); }

// ---- element parser -----------------------------------------------------------

namespace {

Elem prec_at(const Elem& a, const Layer* target, int64_t N) {
  const Layer* L = a.layer();
  if (L == target) return with_prec(a, N);
  if (L->kind != LayerKind::Laurent) throw ParseError("O-term variable is not a Laurent variable", 0);
  const LaurentData& d = a.laurent();
  std::vector<Elem> c;
  for (const auto& x : d.c) c.push_back(prec_at(x, target, N));
  return Elem::make_laurent(L, d.val, std::move(c), d.prec);
}

class Parser {
 public:
  Parser(const std::string& s, const Layer* L) : s_(s), L_(L) {
    for (const Layer* x : chain(L)) {
      if (x->kind == LayerKind::Galois && x->gr_e > 1) vars_[x->gen] = x;
      if (x->kind == LayerKind::Rational || x->kind == LayerKind::Laurent) vars_[x->var] = x;
    }
  }

  Elem parse() {
    Elem r = expr();
    skip();
    if (i_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[i_]) + "'", i_, "operator or end");
    return apply_windows(coerce(r, L_), 0);
  }

 private:
  const std::string& s_;
  const Layer* L_;
  std::size_t i_ = 0;
  std::map<std::string, const Layer*> vars_;
  std::vector<std::pair<const Layer*, int64_t>> windows_;

  Elem apply_windows(Elem r, std::size_t mark) {
    for (std::size_t k = mark; k < windows_.size(); ++k) {
      r = coerce(r, below_or_equal(windows_[k].first, r.layer()) ? r.layer() : windows_[k].first);
      r = prec_at(r, windows_[k].first, windows_[k].second);
    }
    windows_.resize(mark);
    return r;
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  void expect(char c) {
    if (!peek(c)) throw ParseError("expected '" + std::string(1, c) + "'", i_, std::string("'") + c + "'");
    ++i_;
  }
  int64_t integer() {
    skip();
    bool negative = false;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) negative = s_[i_++] == '-';
    skip();
    std::size_t start = i_;
    int64_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + (s_[i_++] - '0');
      if (v > (int64_t(1) << 40)) throw ParseError("integer too large", start);
    }
    if (i_ == start) throw ParseError("expected integer", i_, "integer");
    return negative ? -v : v;
  }

  Elem expr() {
    skip();
    bool negate = false;
    if (peek('-')) {
      ++i_;
      negate = true;
    } else if (peek('+')) {
      ++i_;
    }
    Elem acc = term_();
    if (negate) acc = neg(acc);
    while (true) {
      if (peek('+')) {
        ++i_;
        acc = add(acc, term_());
      } else if (peek('-')) {
        ++i_;
        acc = sub(acc, term_());
      } else {
        return acc;
      }
    }
  }

  bool starts_factor() {
    skip();
    if (i_ >= s_.size()) return false;
    char c = s_[i_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  Elem term_() {
    Elem acc = factor();
    while (true) {
      if (peek('*')) {
        ++i_;
        acc = mul(acc, factor());
      } else if (peek('/')) {
        ++i_;
        std::size_t at = i_;
        Elem d = factor();
        try {
          acc = div(acc, d);
        } catch (const DivisionByZero&) {
          throw ParseError("division by zero", at);
        }
      } else if (starts_factor()) {
        acc = mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  Elem factor() {
    Elem base = atom();
    if (!peek('^')) return base;
    ++i_;
    int64_t num = 1, den = 1;
    if (peek('(')) {
      ++i_;
      num = integer();
      if (peek('/')) {
        ++i_;
        den = integer();
      }
      expect(')');
    } else {
      num = integer();
    }
    if (den <= 0) throw ParseError("bad exponent denominator", i_);
    Elem r = pow(base, num);
    for (int64_t d = den; d > 1; d /= L_->p) {
      if (d % L_->p != 0) throw ParseError("exponent denominator must be a power of p", i_);
      r = pth_root(coerce(r, L_));
    }
    return r;
  }

  Elem atom() {
    skip();
    if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_, "term");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      std::size_t mark = windows_.size();
      Elem r = expr();
      expect(')');
      r = apply_windows(r, mark);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return from_int(L_, integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      std::string name = read_ident(s_, i_);
      auto it = vars_.find(name);
      if (it != vars_.end()) return generator(it->second);
      if (name == "O" && peek('(')) {
        ++i_;
        skip();
        std::size_t vpos = i_;
        std::string v = read_ident(s_, i_);
        auto jt = vars_.find(v);
        if (jt == vars_.end() || jt->second->kind != LayerKind::Laurent)
          throw ParseError("O-term needs a Laurent variable", vpos, "Laurent variable");
        int64_t N = 1;
        if (peek('^')) {
          ++i_;
          N = integer();
        }
        expect(')');
        windows_.emplace_back(jt->second, N);
        return zero(L_);
      }
      throw ParseError("unknown variable '" + name + "'", start, "declared variable");
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", i_, "term");
  }
};

}  // namespace

Elem parse_elem(const std::string& src, const Layer* L) {
  Parser p(src, L);
  return p.parse();
}

}  // namespace wittfil
