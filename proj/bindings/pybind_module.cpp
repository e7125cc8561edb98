#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "reldom/cli.hpp"

namespace py = pybind11;

namespace {

py::tuple run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
        py::gil_scoped_release release;
        code = reldom::run_cli(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_reldom, m) {
    m.doc() = "Exact relative homological algebra for bound quiver algebras: relative "
              "(co)dominant dimensions, tilting-cotilting modules and relative "
              "Auslander-Gorenstein pairs.";
    m.def("run", &run, py::arg("args"),
          "Run one command (same surface as the reldom CLI); returns "
          "(exit_code, stdout, stderr).");
}
