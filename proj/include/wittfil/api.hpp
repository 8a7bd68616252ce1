#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace wittfil {

using ojson = nlohmann::ordered_json;

/// One CLI/Python request. Empty strings and zero numbers mean "not given".
struct Request {
  std::string command;  // witt level flat symbol modulus swan extend verify
  std::vector<std::string> args;
  std::string field;
  std::string group;
  std::string phi;
  std::string residue = "identity";
  std::string embedding;  // JSON embedding config for extend
  int p = 0;
  int n = 0;
  int prec = 32;
  int e = 1;
  int cap_n = 0;
  uint64_t seed = 1;
  long trials = 0;
  bool family = false;
};

struct Response {
  ojson body;
  int exit_code = 0;  // 0 ok, 1 other error, 2 parse, 3 precision, 4 verification failure
  std::string error;  // set when exit_code is 1, 2 or 3
};

/// Fill a request from a JSON config; keys mirror the long flag names.
void apply_config(Request& req, const nlohmann::json& cfg);
/// {"p":2,"layers":[{"kind":"galois","e":1},{"kind":"rational","vars":["u"]},{"kind":"laurent","var":"t"}]}
std::string descriptor_from_json(const nlohmann::json& d);

/// Never throws for library errors; they are mapped to exit codes.
Response run_command(const Request& req);

/// Text rendering mirroring the JSON field for field.
std::string render_text(const ojson& body);

}  // namespace wittfil
