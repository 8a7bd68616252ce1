// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "wittfil/api.hpp"
#include "wittfil/local_symbols.hpp"
#include "wittfil/suites.hpp"

using namespace wittfil;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome suites(const std::vector<std::string>& names) {
  Outcome o;
  for (const auto& n : names) {
    SuiteReport r = run_suite(n, 1, 0);
    o.ok = o.ok && r.passed;
    if (!o.detail.empty()) o.detail += ", ";
    o.detail += n + " " + (r.passed ? "ok" : "FAILED") + " (" + std::to_string(r.instances) + ")";
    for (const auto& c : r.counterexamples) std::fprintf(stderr, "  [%s] %s\n", n.c_str(), c.c_str());
    for (const auto& note : r.notes) o.detail += "; " + note;
  }
  return o;
}

Request req(const std::string& cmd, std::vector<std::string> args, const std::string& field = "", int n = 0) {
  Request r;
  r.command = cmd;
  r.args = std::move(args);
  r.field = field;
  r.n = n;
  return r;
}

Outcome cli_contract() {
  Outcome o;
  int checks = 0, bad = 0;
  auto fail = [&](const std::string& what) {
    ++bad;
    std::fprintf(stderr, "  [cli] %s\n", what.c_str());
  };
  struct Fixture {
    Request r;
    int rc;
    std::string body;  // empty: only the exit code is checked
  };
  Request mod = req("modulus", {}, "F2(x)");
  mod.group = "Ga";
  mod.phi = "1/x";
  Request mod2 = req("modulus", {}, "F2(x)");
  mod2.group = "Gm^1 x W2";
  mod2.phi = "x ; W(1/x,0)";
  Request ver = req("verify", {"prop6.4"});
  ver.trials = 200;
  Request badp = req("level", {"t^-1"}, "F2((t))");
  badp.p = 3;
  std::vector<Fixture> fx{
      {req("level", {"W(t^-3; 0)"}, "F2((t))", 2), 0, R"j({"naive":6,"filF":6,"flat_min":7})j"},
      {mod, 0, R"j({"divisor":[{"place":"x","mult":2}],"degree":2})j"},
      {mod2, 0, R"j({"divisor":[{"place":"x","mult":3},{"place":"inf","mult":1}],"degree":4})j"},
      {req("swan", {"t^-3"}, "F2((t))", 1), 0, R"j({"swan":3,"rsw":{"dlogt":"t^-3 * 1"}})j"},
      {req("symbol", {"W(0; t^-1)", "{1 + t}"}, "F2((t))", 2), 0,
       R"j({"f":"W(0; t^-1)","g":"{1 + t}","value":["0","1"],"group":"W2"})j"},
      {ver, 0, R"j({"passed":true,"instances":200})j"},
      {req("extend", {"u*pi^-2"}, "F2(u)((pi))", 1), 0, ""},
      {req("flat", {"u*t^-3"}, "F2(u)((t))", 1), 0, ""},
      {req("level", {"W(t^-3 +"}, "F2((t))"), 2, ""},
      {req("level", {"t^-1"}, "F2((t"), 2, ""},
      {req("frobnicate", {}), 2, ""},
      {req("level", {"t^-4 + O(t^-2)"}, "F2((t))"), 3, ""},
      {req("swan", {"t^-4 + O(t^-2)"}, "F2((t))"), 3, ""},
      {req("verify", {"no-such-suite"}), 1, ""},
      {badp, 1, ""},
  };
  for (const auto& f : fx) {
    Response a = run_command(f.r), b = run_command(f.r);
    ++checks;
    if (a.exit_code != f.rc) fail(f.r.command + ": exit " + std::to_string(a.exit_code) + ", want " + std::to_string(f.rc));
    else if (a.body.dump() != b.body.dump()) fail(f.r.command + ": output differs between runs");
    else if (!f.body.empty() && a.body.dump() != f.body) fail(f.r.command + ": " + a.body.dump());
  }
  // round trip on fixture expressions and random elements
  const std::vector<std::pair<std::string, std::string>> exprs{
      {"F2((t))", "t^-3 + t^-2"},          {"F4((t))", "g*t^-5 + (g + 1)*t^-1 + 1"},
      {"F2(u)((t))", "u*t^-2 + (1/(u + 1))*t^-1"}, {"F2(x)", "1/x + x^3"},
      {"F3((t))", "2*t^-2 + t^-1 + 1"},     {"F2((t1))((t2))", "t1^-1*t2^-2 + t2^-1"},
      {"F2((t))", "1 + t + O(t^4)"},        {"F2(u)^perf((t))", "u*t^-1"}};
  for (const auto& [d, s] : exprs) {
    const Layer* L = parse_field(d);
    Elem e = parse_elem(s, L);
    ++checks;
    if (!eq(parse_elem(render(e), L), e) || render(parse_elem(render(e), L)) != render(e)) fail("round trip " + s);
  }
  for (const auto& [d, s] : std::vector<std::pair<std::string, std::string>>{
           {"F2((t))", "W(t^-3; 0)"}, {"F2(x)", "W(1/x; 0)"}, {"F3((t))", "W(2*t^-2; t^-1 + 1)"}}) {
    const Layer* L = parse_field(d);
    WittVector w = parse_witt(s, L);
    ++checks;
    if (!witt_eq(parse_witt(render_witt(w), L), w)) fail("round trip " + s);
  }
  {
    const Layer* L = parse_field("F2(u)((t))");
    auto g = parse_symbol("{1 + u*t; u}", L);
    ++checks;
    if (parse_symbol(render_symbol(g), L).size() != 2 || render_symbol(parse_symbol(render_symbol(g), L)) != render_symbol(g))
      fail("round trip symbol");
  }
  std::mt19937_64 rng(1);
  for (const char* d : {"F2((t))", "F4((t))", "F2(u)((t))"}) {
    const Layer* L = parse_field(d);
    for (int i = 0; i < 100; ++i) {
      Elem e = zero(L);
      for (int k = 0; k < 3; ++k) {
        Elem c = L->base->kind == LayerKind::Galois ? galois_elements(L->base)[rng() % L->base->q()]
                                                     : div(add(generator(L->base), from_int(L->base, rng() % 2)),
                                                           add(pow(generator(L->base), 1 + rng() % 3), one(L->base)));
        e = add(e, monomial(L, c, static_cast<int64_t>(rng() % 12) - 6));
      }
      ++checks;
      if (!eq(parse_elem(render(e), L), e)) fail("round trip " + render(e));
    }
  }
  o.ok = bad == 0;
  o.detail = std::to_string(checks - bad) + "/" + std::to_string(checks) + " fixture, exit-code and round-trip checks";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::vector<std::string> names;
  };
  const std::vector<Criterion> cs{
      {1, "Witt ring correctness", {"witt-ring-axioms", "ghost-equivalence"}},
      {2, "filtration oracle equivalence", {"filF-oracle", "filF-closed-form"}},
      {3, "Prop 4.1 / Prop 4.6 / theta-bar", {"prop4.1", "prop4.6"}},
      {4, "Thm 5.3 / Thm 3.3", {"thm5.3", "thm3.3"}},
      {5, "Prop 6.4", {"prop6.4"}},
      {6, "Prop 6.3", {"prop6.3"}},
      {7, "Prop 7.3 / Prop 7.5", {"prop7.3", "prop7.5-surface"}},
      {8, "extensions", {"lemma8.1", "cor8.4", "wild-strictness", "thm8.6", "lemma8.8", "thm8.5"}},
      {9, "Swan conductor", {"swan-jumps", "prop4.8", "asw-invariance"}},
  };
  bool all = true;
  for (const auto& c : cs) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = suites(c.names);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d %-34s %s  [%.1fs] %s\n", c.id, c.title, o.ok ? "PASS" : "FAIL", sec, o.detail.c_str());
    std::fflush(stdout);
    all = all && o.ok;
  }
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = cli_contract();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("criterion %2d %-34s %s  [%.1fs] %s\n", 10, "CLI determinism and exit codes", o.ok ? "PASS" : "FAIL", sec,
              o.detail.c_str());
  all = all && o.ok;
  return all ? 0 : 1;
}
