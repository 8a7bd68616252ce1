#include "wittfil/api.hpp"

#include <sstream>

#include "wittfil/extensions.hpp"
#include "wittfil/filtration.hpp"
#include "wittfil/local_symbols.hpp"
#include "wittfil/modulus.hpp"
#include "wittfil/suites.hpp"

namespace wittfil {

namespace {

struct VerificationFailed {};

std::string arg(const Request& r, std::size_t i, const char* what) {
  if (i >= r.args.size()) throw ParseError(std::string("missing argument: ") + what, 0, what);
  return r.args[i];
}

const Layer* field_of(const Request& r, const char* dflt) {
  std::string d = r.field;
  if (d.empty()) d = r.p ? "F" + std::to_string(r.p) + "((t))" : dflt;
  const Layer* K = parse_field(d, r.prec);
  if (r.p && K->p != r.p)
    throw CharacteristicMismatch("-p " + std::to_string(r.p) + " does not match field " + K->name);
  return K;
}

WittVector witt_arg(const Request& r, const Layer* K, const std::string& src) {
  WittVector w = parse_witt(src, K, r.n > 0 ? r.n : -1);
  return w;
}

ojson components(const WittVector& w) {
  ojson a = ojson::array();
  for (const auto& c : w.x) a.push_back(render(c));
  return a;
}

ojson cmd_witt(const Request& r) {
  const Layer* K = field_of(r, "F2((t))");
  static const char* ops[] = {"add", "sub", "mul", "neg", "F", "V", "teichmuller", "ghost"};
  std::string op = "normalize";
  std::size_t i = 0;
  for (const char* o : ops)
    if (!r.args.empty() && r.args[0] == o) {
      op = o;
      i = 1;
    }
  ojson out;
  out["op"] = op;
  if (op == "teichmuller") {
    Elem a = parse_elem(arg(r, i, "element"), K);
    out["result"] = render_witt(teichmuller(a, r.n > 0 ? r.n : 1));
    return out;
  }
  WittVector x = witt_arg(r, K, arg(r, i, "Witt vector"));
  WittVector res;
  if (op == "add" || op == "sub" || op == "mul") {
    WittVector y = witt_arg(r, K, arg(r, i + 1, "second Witt vector"));
    if (y.n() != x.n()) throw ShapeMismatch("Witt lengths differ");
    res = op == "add" ? witt_add(x, y) : op == "sub" ? witt_sub(x, y) : witt_mul(x, y);
  } else if (op == "neg") {
    res = witt_neg(x);
  } else if (op == "F") {
    res = witt_F(x);
  } else if (op == "V") {
    res = witt_V(x);
  } else if (op == "ghost") {
    // w_k = sum_{i<=k} p^i x_i^{p^{k-i}}
    ojson g = ojson::array();
    for (int k = 0; k < x.n(); ++k) {
      Elem s = zero(K);
      int64_t pk = 1;
      for (int j = 0; j <= k; ++j, pk *= K->p) {
        int64_t e = 1;
        for (int t = 0; t < k - j; ++t) e *= K->p;
        s = add(s, mul_int(pow(x.x[static_cast<std::size_t>(j)], e), pk));
      }
      g.push_back(render(s));
    }
    out["ghost"] = g;
    return out;
  } else {
    res = x;
  }
  out["result"] = render_witt(res);
  return out;
}

ojson cmd_level(const Request& r) {
  const Layer* K = field_of(r, "F2((t))");
  WittVector x = witt_arg(r, K, r.phi.empty() ? arg(r, 0, "Witt vector") : r.phi);
  ojson out;
  out["naive"] = naive_level(x);
  out["filF"] = filF_level(x).s;
  out["flat_min"] = flat_filF_min(x);
  return out;
}

ojson cmd_flat(const Request& r) {
  const Layer* K = field_of(r, "F2((t))");
  WittVector x = witt_arg(r, K, r.phi.empty() ? arg(r, 0, "Witt vector") : r.phi);
  LevelResult lr = filF_level(x);
  ojson out;
  out["filF"] = lr.s;
  out["flat_min"] = flat_filF_min(x);
  out["flat_at_level"] = in_flat_filF(x, lr.s);
  ojson parts = ojson::array();
  for (const auto& w : lr.witness.parts) parts.push_back(render_witt(w));
  out["decomposition"] = parts;
  out["theta_bar"] = lr.s > 0 ? render_dbar(theta_bar(lr.witness, lr.s)) : std::string("0");
  return out;
}

ojson cmd_symbol(const Request& r) {
  const Layer* K = field_of(r, "F2((t))");
  const std::string fsrc = arg(r, 0, "f"), gsrc = arg(r, 1, "symbol {g1; ...}");
  std::vector<Elem> g = parse_symbol(gsrc, K);
  std::string grp = r.group;
  if (grp.empty()) grp = "W" + std::to_string(r.n > 0 ? r.n : 1);
  ojson out;
  ojson value = ojson::array();
  if (grp == "Ga" || grp == "Gm") {
    if (g.size() != 1) throw ShapeMismatch(grp + " symbols take one entry");
    Elem f = parse_elem(fsrc, K);
    out["f"] = render(f);
    value.push_back(render(grp == "Ga" ? local_symbol_ga(f, g[0]) : local_symbol_gm(f, g[0])));
  } else {
    SplitGroup G = parse_group(grp);
    if (G.tm || G.shape.size() != 1) throw ShapeMismatch("symbol group must be Ga, Gm or Wn");
    WittVector f = parse_witt(fsrc, K, G.shape[0]);
    out["f"] = render_witt(f);
    value = components(local_symbol_wn(f, g));
  }
  out["g"] = render_symbol(g);
  out["value"] = value;
  out["group"] = grp;
  return out;
}

ojson cmd_modulus(const Request& r) {
  const Layer* K = field_of(r, "F2(x)");
  SplitGroup G = parse_group(r.group.empty() ? "Ga" : r.group);
  GroupPoint x = parse_point(r.phi.empty() ? arg(r, 0, "point") : r.phi, G, K);
  ModulusDivisor D = modulus_divisor(x, G, K, r.prec);
  ojson div = ojson::array();
  for (const auto& [v, m] : D.terms) {
    ojson t;
    t["place"] = v.name;
    t["mult"] = m;
    div.push_back(t);
  }
  ojson out;
  out["divisor"] = div;
  out["degree"] = D.degree();
  return out;
}

ojson cmd_swan(const Request& r) {
  const Layer* K = field_of(r, "F2((t))");
  WittVector x = witt_arg(r, K, r.phi.empty() ? arg(r, 0, "Witt vector") : r.phi);
  SwanResult s = swan_conductor(x);
  std::vector<Elem> rsw = refined_swan(s);
  std::vector<FormSymbol> basis = form_basis(K);
  ojson out;
  out["swan"] = s.swan;
  ojson rs = ojson::object();
  if (s.swan > 0)
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (!is_zero(rsw[k]))
        rs[(basis[k].kind == FormSymbol::D ? "d" : "dlog") + basis[k].var] =
            "t^-" + std::to_string(s.swan) + " * " + render(rsw[k]);
  out["rsw"] = rs;
  return out;
}

DVEmbedding embedding_of(const Request& r, const Layer* K) {
  if (!r.embedding.empty()) return embedding_from_config(K, r.embedding);
  if (r.e < 1) throw ShapeMismatch("--e must be positive");
  if (r.residue == "perfect-closure") return make_perfect_residue_extension(K, r.e);
  if (r.residue == "separable") throw UnsupportedResidueField("separable residue extensions are not constructed");
  if (r.residue != "identity") throw ParseError("unknown residue kind '" + r.residue + "'", 0, "identity, perfect-closure");
  if (r.e == 1) return identity_embedding(K);
  return r.e % K->p ? make_tame_extension(K, r.e) : make_wild_extension(K, r.e);
}

ojson cmd_extend(const Request& r, bool& failed) {
  const Layer* K = field_of(r, "F2((pi))");
  WittVector x = witt_arg(r, K, r.phi.empty() ? arg(r, 0, "Witt vector") : r.phi);
  ojson out;
  if (r.family) {
    ThmBReport b = thmB_witness(x);
    ThmCReport c = thmC_witness(x);
    out["sK"] = b.sK;
    ojson ents = ojson::array();
    for (const auto& fe : b.entries) {
      ojson t;
      t["name"] = fe.name;
      t["e"] = fe.e;
      t["sKp"] = fe.sKp;
      ents.push_back(t);
    }
    out["family"] = ents;
    out["sup"] = std::to_string(b.best_num) + "/" + std::to_string(b.best_den);
    out["sup_attained"] = b.attained;
    out["flat_case"] = b.flat_case;
    out["flat_min"] = c.flat_min;
    out["max_sKp_e1"] = c.max_sKp;
    out["ok"] = b.ok() && c.ok();
    failed = !(b.ok() && c.ok());
    return out;
  }
  DVEmbedding emb = embedding_of(r, K);
  LevelComparison c = compare_levels(emb, x);
  out["embedding"] = emb.name;
  out["e"] = emb.e;
  out["residue"] = residue_kind_name(emb.residue);
  out["image"] = render_witt(apply_embedding(emb, x));
  out["sK"] = c.sK;
  out["sKp"] = c.sKp;
  out["flat_minK"] = c.flat_minK;
  out["containment_ok"] = c.containment_ok;
  out["zero_map_ok"] = c.zero_map_ok;
  if (c.equality_checked) out["equality_ok"] = c.equality_ok;
  out["ok"] = c.ok();
  failed = !c.ok();
  return out;
}

ojson cmd_verify(const Request& r, bool& failed) {
  const std::string name = arg(r, 0, "suite name");
  ojson out;
  if (name == "list") {
    out["suites"] = suite_names();
    return out;
  }
  SuiteReport rep = run_suite(name, r.seed, r.trials);
  out["passed"] = rep.passed;
  out["instances"] = rep.instances;
  if (!rep.counterexamples.empty()) out["counterexamples"] = rep.counterexamples;
  failed = !rep.passed;
  return out;
}

}  // namespace

std::string descriptor_from_json(const nlohmann::json& d) {
  if (d.is_string()) return d.get<std::string>();
  const int p = d.at("p").get<int>();
  std::string s;
  for (const auto& l : d.at("layers")) {
    const std::string kind = l.at("kind").get<std::string>();
    if (kind == "galois") {
      int64_t q = 1;
      for (int i = 0; i < l.value("e", 1); ++i) q *= p;
      s += "F" + std::to_string(q);
    } else if (kind == "rational") {
      std::string vs;
      for (const auto& v : l.at("vars")) vs += (vs.empty() ? "" : ",") + v.get<std::string>();
      s += "(" + vs + ")";
    } else if (kind == "perfection") {
      s += "^perf";
    } else if (kind == "laurent") {
      s += "((" + l.at("var").get<std::string>() + "))";
    } else {
      throw ParseError("unknown layer kind '" + kind + "'", 0, "galois, rational, perfection, laurent");
    }
  }
  return s;
}

void apply_config(Request& req, const nlohmann::json& cfg) {
  if (cfg.contains("command")) req.command = cfg["command"].get<std::string>();
  if (cfg.contains("args")) req.args = cfg["args"].get<std::vector<std::string>>();
  if (cfg.contains("field")) req.field = descriptor_from_json(cfg["field"]);
  if (cfg.contains("group")) req.group = cfg["group"].get<std::string>();
  if (cfg.contains("phi")) req.phi = cfg["phi"].get<std::string>();
  if (cfg.contains("residue")) req.residue = cfg["residue"].get<std::string>();
  if (cfg.contains("embedding")) req.embedding = cfg["embedding"].dump();
  if (cfg.contains("p")) req.p = cfg["p"].get<int>();
  if (cfg.contains("n")) req.n = cfg["n"].get<int>();
  if (cfg.contains("prec")) req.prec = cfg["prec"].get<int>();
  if (cfg.contains("e")) req.e = cfg["e"].get<int>();
  if (cfg.contains("cap-n")) req.cap_n = cfg["cap-n"].get<int>();
  if (cfg.contains("seed")) req.seed = cfg["seed"].get<uint64_t>();
  if (cfg.contains("trials")) req.trials = cfg["trials"].get<long>();
  if (cfg.contains("family")) req.family = cfg["family"].get<bool>();
}

Response run_command(const Request& req) {
  Response resp;
  bool failed = false;
  try {
    if (req.cap_n > 0) set_witt_cap(req.cap_n);
    if (req.prec < 1) throw ShapeMismatch("--prec must be positive");
    const std::string& c = req.command;
    if (c == "witt") resp.body = cmd_witt(req);
    else if (c == "level") resp.body = cmd_level(req);
    else if (c == "flat") resp.body = cmd_flat(req);
    else if (c == "symbol") resp.body = cmd_symbol(req);
    else if (c == "modulus") resp.body = cmd_modulus(req);
    else if (c == "swan") resp.body = cmd_swan(req);
    else if (c == "extend") resp.body = cmd_extend(req, failed);
    else if (c == "verify") resp.body = cmd_verify(req, failed);
    else throw ParseError("unknown command '" + c + "'", 0, "witt, level, flat, symbol, modulus, swan, extend, verify");
    resp.exit_code = failed ? 4 : 0;
  } catch (const ParseError& e) {
    resp.exit_code = 2;
    resp.error = e.what();
  } catch (const nlohmann::json::exception& e) {
    resp.exit_code = 2;
    resp.error = e.what();
  } catch (const PrecisionExhausted& e) {
    resp.exit_code = 3;
    resp.error = e.what();
  } catch (const std::exception& e) {
    resp.exit_code = 1;
    resp.error = e.what();
  }
  if (resp.exit_code && resp.exit_code != 4) {
    resp.body = ojson();
    resp.body["error"] = resp.error;
    resp.body["exit_code"] = resp.exit_code;
  }
  return resp;
}

std::string render_text(const ojson& body) {
  std::ostringstream os;
  for (const auto& [k, v] : body.items()) {
    if (v.is_string()) os << k << ": " << v.get<std::string>() << "\n";
    else if (v.is_array() && !v.empty() && v[0].is_string()) {
      os << k << ":";
      for (const auto& s : v) os << "\n  " << s.get<std::string>();
      os << "\n";
    } else {
      os << k << ": " << v.dump() << "\n";
    }
  }
  return os.str();
}

}  // namespace wittfil
