#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "wittfil/api.hpp"

int main(int argc, char** argv) {
  wittfil::Request req;
  std::string config;
  bool json = false;

  CLI::App app{"Filtrations on Witt vectors, local symbols and moduli"};
  app.require_subcommand(0, 1);
  app.add_option("--config", config, "JSON file whose keys replace flags");

  auto common = [&](CLI::App* s) {
    s->add_option("--field", req.field, "field descriptor, e.g. F2(u)((t))");
    s->add_option("-p", req.p, "characteristic (checked against --field)");
    s->add_option("-n", req.n, "Witt length");
    s->add_option("--prec", req.prec, "default Laurent window")->capture_default_str();
    s->add_option("--seed", req.seed, "random seed")->capture_default_str();
    s->add_option("--trials", req.trials, "suite size (0 = default)");
    s->add_option("--cap-n", req.cap_n, "largest Witt length with structure polynomials");
    s->add_option("--group", req.group, "group, e.g. Ga, Gm^1 x W2");
    s->add_option("--phi", req.phi, "point or Witt vector");
    s->add_flag("--json", json, "emit JSON");
    s->add_option("args", req.args, "positional arguments");
  };
  const char* cmds[][2] = {{"witt", "Witt vector arithmetic: [add|sub|mul|neg|F|V|teichmuller|ghost] x [y]"},
                           {"level", "naive, fil^F and flat levels"},
                           {"flat", "decomposition and graded class at the fil^F level"},
                           {"symbol", "local symbol (f, {g1; ...})"},
                           {"modulus", "modulus divisor of a rational map into a split group"},
                           {"swan", "Swan conductor and refined Swan conductor"},
                           {"extend", "levels along an extension of discrete valuation fields"},
                           {"verify", "run a verification suite (or 'list')"}};
  for (const auto& c : cmds) {
    CLI::App* s = app.add_subcommand(c[0], c[1]);
    common(s);
    if (std::string(c[0]) == "extend") {
      s->add_option("--e", req.e, "ramification index")->capture_default_str();
      s->add_option("--residue", req.residue, "identity or perfect-closure")->capture_default_str();
      s->add_option("--embedding", req.embedding, "embedding as JSON");
      s->add_flag("--family", req.family, "sup and max over the configured family");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  for (auto* s : app.get_subcommands()) req.command = s->get_name();

  if (!config.empty()) {
    std::ifstream in(config);
    if (!in) {
      std::cerr << "error: cannot open config " << config << "\n";
      return 1;
    }
    try {
      wittfil::apply_config(req, nlohmann::json::parse(in));
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  if (req.command.empty()) {
    std::cout << app.help();
    return 2;
  }

  wittfil::Response r = wittfil::run_command(req);
  if (!r.error.empty()) std::cerr << "error: " << r.error << "\n";
  if (json || r.error.empty()) std::cout << (json ? r.body.dump() + "\n" : wittfil::render_text(r.body));
  return r.exit_code;
}
