#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wittfil/api.hpp"
#include "wittfil/suites.hpp"

namespace py = pybind11;

namespace {

// request as a JSON string with the config keys; returns (exit_code, body JSON)
std::pair<int, std::string> run_json(const std::string& request) {
  wittfil::Request req;
  wittfil::apply_config(req, nlohmann::json::parse(request));
  wittfil::Response r;
  {
    py::gil_scoped_release nogil;
    r = wittfil::run_command(req);
  }
  return {r.exit_code, r.body.dump()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Witt vector filtrations, local symbols and moduli";
  m.def("run_json", &run_json, py::arg("request"));
  m.def("suite_names", &wittfil::suite_names);
}
