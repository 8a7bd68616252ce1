#include <gtest/gtest.h>

#include "wittfil/api.hpp"
#include "wittfil/suites.hpp"

using namespace wittfil;

namespace {
Response run(const std::string& cmd, std::vector<std::string> args, std::string field = "", int n = 0) {
  Request r;
  r.command = cmd;
  r.args = std::move(args);
  r.field = std::move(field);
  r.n = n;
  return run_command(r);
}
}  // namespace

TEST(Api, Examples) {
  Response a = run("level", {"W(t^-3; 0)"}, "F2((t))", 2);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.body.dump(), R"j({"naive":6,"filF":6,"flat_min":7})j");
  Request m;
  m.command = "modulus";
  m.field = "F2(x)";
  m.group = "Ga";
  m.phi = "1/x";
  EXPECT_EQ(run_command(m).body["divisor"].dump(), R"j([{"place":"x","mult":2}])j");
  EXPECT_EQ(run("swan", {"t^-3"}, "F2((t))", 1).body.dump(), R"j({"swan":3,"rsw":{"dlogt":"t^-3 * 1"}})j");
}

TEST(Api, Deterministic) {
  Request r;
  r.command = "verify";
  r.args = {"symbol-laws"};
  r.trials = 10;
  r.seed = 5;
  EXPECT_EQ(run_command(r).body.dump(), run_command(r).body.dump());
}

TEST(Api, ExitCodes) {
  EXPECT_EQ(run("level", {"W(t^-3 +"}, "F2((t))").exit_code, 2);
  EXPECT_EQ(run("level", {"t^-1"}, "F2((t").exit_code, 2);
  EXPECT_EQ(run("nonsense", {}).exit_code, 2);
  EXPECT_EQ(run("level", {"t^-4 + O(t^-2)"}, "F2((t))").exit_code, 3);
  EXPECT_EQ(run("verify", {"no-such-suite"}).exit_code, 1);
  EXPECT_EQ(run("witt", {"add", "W(1; 0)", "W(1)"}, "F2").exit_code, 1);

  register_suite("always-fails", [](SuiteReport& r, uint64_t, long) {
    ++r.instances;
    r.passed = false;
    r.counterexamples.push_back("wittfil level 't^-1'");
  });
  Response f = run("verify", {"always-fails"});
  EXPECT_EQ(f.exit_code, 4);
  EXPECT_EQ(f.body["passed"], false);
  EXPECT_EQ(f.body["counterexamples"][0], "wittfil level 't^-1'");
}

TEST(Api, ConfigFieldDescriptor) {
  nlohmann::json d = nlohmann::json::parse(
      R"j({"p":2,"layers":[{"kind":"galois","e":1},{"kind":"rational","vars":["u"]},{"kind":"laurent","var":"t"}]})j");
  EXPECT_EQ(descriptor_from_json(d), "F2(u)((t))");
  Request r;
  apply_config(r, nlohmann::json::parse(R"j({"command":"level","field":"F4((t))","args":["g*t^-3"]})j"));
  EXPECT_EQ(run_command(r).body["filF"], 3);
}
