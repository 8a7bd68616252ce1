#include "wittfil/homword.hpp"

namespace wittfil {

namespace {

int word_out_len(const Word& w, int len) {
  for (const auto& l : w) {
    switch (l.kind) {
      case HomLetter::Kind::F: break;
      case HomLetter::Kind::V: ++len; break;
      case HomLetter::Kind::Scalar:
        if (l.scalar.n() < len) throw ShapeMismatch("scalar shorter than the vector it multiplies");
        break;
      case HomLetter::Kind::Trunc:
        if (l.len > len) throw ShapeMismatch("truncation to a longer length");
        len = l.len;
        break;
    }
  }
  return len;
}

WittVector apply_word(const Word& w, WittVector x) {
  for (const auto& l : w) {
    switch (l.kind) {
      case HomLetter::Kind::F: x = witt_F(x); break;
      case HomLetter::Kind::V: x = witt_V(x); break;
      case HomLetter::Kind::Scalar:
        x = witt_mul(witt_truncate(witt_coerce(l.scalar, x.layer), x.n()), x);
        break;
      case HomLetter::Kind::Trunc: x = witt_truncate(x, l.len); break;
    }
  }
  return x;
}

std::string render_word(const Word& w) {
  // rendered as a composite, outermost letter first
  std::string s;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (!s.empty()) s += "*";
    switch (it->kind) {
      case HomLetter::Kind::F: s += "F"; break;
      case HomLetter::Kind::V: s += "V"; break;
      case HomLetter::Kind::Scalar: s += "[" + render_witt(it->scalar) + "]"; break;
      case HomLetter::Kind::Trunc: s += "R" + std::to_string(it->len); break;
    }
  }
  return s.empty() ? "id" : s;
}

HomWord single(int n_src, int n_dst, Word w) {
  HomWord h = hom_zero({n_src}, {n_dst});
  h.entries[0][0].push_back(std::move(w));
  return h;
}

}  // namespace

HomWord hom_zero(std::vector<int> src, std::vector<int> dst) {
  HomWord h;
  h.entries.assign(dst.size(), std::vector<std::vector<Word>>(src.size()));
  h.src = std::move(src);
  h.dst = std::move(dst);
  return h;
}

HomWord hom_identity(int n) { return single(n, n, {}); }
HomWord hom_V(int n) { return single(n, n + 1, {HomLetter::v()}); }
HomWord hom_F(int n) { return single(n, n, {HomLetter::f()}); }
HomWord hom_scalar(const WittVector& c) { return single(c.n(), c.n(), {HomLetter::mul(c)}); }

HomWord hom_diag_id_F(int n) {
  HomWord h = hom_zero({n}, {n, n});
  h.entries[0][0].push_back({});
  h.entries[1][0].push_back({HomLetter::f()});
  return h;
}

HomWord hom_sum(const HomWord& a, const HomWord& b) {
  if (a.src != b.src || a.dst != b.dst) throw ShapeMismatch("sum of homomorphisms with different shapes");
  HomWord h = a;
  for (std::size_t j = 0; j < h.dst.size(); ++j)
    for (std::size_t i = 0; i < h.src.size(); ++i)
      h.entries[j][i].insert(h.entries[j][i].end(), b.entries[j][i].begin(), b.entries[j][i].end());
  return h;
}

HomWord hom_compose(const HomWord& outer, const HomWord& inner) {
  if (outer.src != inner.dst) throw ShapeMismatch("composition of incompatible homomorphisms");
  HomWord h = hom_zero(inner.src, outer.dst);
  for (std::size_t k = 0; k < outer.dst.size(); ++k)
    for (std::size_t j = 0; j < inner.dst.size(); ++j)
      for (std::size_t i = 0; i < inner.src.size(); ++i)
        for (const Word& wi : inner.entries[j][i])
          for (const Word& wo : outer.entries[k][j]) {
            Word w = wi;
            // inner words are implicitly truncated to their target before outer letters run
            w.push_back(HomLetter::trunc(inner.dst[j]));
            w.insert(w.end(), wo.begin(), wo.end());
            h.entries[k][i].push_back(std::move(w));
          }
  return h;
}

void hom_typecheck(const HomWord& h) {
  if (h.entries.size() != h.dst.size()) throw ShapeMismatch("entry rows do not match targets");
  for (std::size_t j = 0; j < h.dst.size(); ++j) {
    if (h.entries[j].size() != h.src.size()) throw ShapeMismatch("entry columns do not match sources");
    for (std::size_t i = 0; i < h.src.size(); ++i)
      for (const Word& w : h.entries[j][i])
        if (word_out_len(w, h.src[i]) < h.dst[j])
          throw ShapeMismatch("word " + render_word(w) + " cannot reach length " + std::to_string(h.dst[j]));
  }
}

std::vector<WittVector> apply_hom(const HomWord& h, const std::vector<WittVector>& x) {
  hom_typecheck(h);
  if (x.size() != h.src.size()) throw ShapeMismatch("wrong number of Witt coordinates");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i].n() != h.src[i]) throw ShapeMismatch("Witt coordinate has the wrong length");
  const Layer* L = x.empty() ? nullptr : x[0].layer;
  std::vector<WittVector> out;
  for (std::size_t j = 0; j < h.dst.size(); ++j) {
    if (!L) throw ShapeMismatch("empty source");
    WittVector acc = witt_zero(L, h.dst[j]);
    for (std::size_t i = 0; i < h.src.size(); ++i)
      for (const Word& w : h.entries[j][i]) acc = witt_add(acc, witt_truncate(apply_word(w, x[i]), h.dst[j]));
    out.push_back(std::move(acc));
  }
  return out;
}

bool hom_injective_on(const HomWord& h, const std::vector<std::vector<WittVector>>& samples) {
  for (const auto& x : samples) {
    bool xz = true;
    for (const auto& c : x) xz = xz && witt_is_zero(c);
    if (xz) continue;
    bool yz = true;
    for (const auto& c : apply_hom(h, x)) yz = yz && witt_is_zero(c);
    if (yz) return false;
  }
  return true;
}

std::string render_hom(const HomWord& h) {
  std::string s = "[";
  for (std::size_t j = 0; j < h.dst.size(); ++j) {
    if (j) s += "; ";
    for (std::size_t i = 0; i < h.src.size(); ++i) {
      if (i) s += ", ";
      std::string e;
      for (const Word& w : h.entries[j][i]) e += (e.empty() ? "" : " + ") + render_word(w);
      s += e.empty() ? "0" : e;
    }
  }
  return s + "]";
}

}  // namespace wittfil
