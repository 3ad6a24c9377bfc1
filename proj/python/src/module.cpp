#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cli.hpp"
#include "json_output.hpp"
#include "poisson_ore/errors.hpp"
#include "poisson_ore/ore.hpp"
#include "poisson_ore/parse.hpp"
#include "poisson_ore/poisson.hpp"
#include "poisson_ore/spectra.hpp"
#include "registry.hpp"

namespace py = pybind11;
using namespace poisson_ore;

namespace {

Poly in_b(const std::string& s) { return parse_poly(s, ring_b()); }

PoissonStructure structure(const std::string& delta, const std::string& exact) {
  if (!exact.empty()) return exact_triple(in_b(exact), Poly::constant(ring_b(), 1));
  return DeltaBracket{cli::parse_delta(delta)};
}

}  // namespace

PYBIND11_MODULE(_poisson_ore, m) {
  m.doc() = "Poisson brackets on Q(i)[x,y,z] and Ore extensions of Q(i)[x,y]";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnknownVariable>(m, "UnknownVariable", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  m.def("canonical", [](const std::string& s) { return in_b(s).to_string(); }, py::arg("expr"));

  m.def(
      "bracket",
      [](const std::string& p, const std::string& q, const std::string& delta, const std::string& exact) {
        return bracket(structure(delta, exact), in_b(p), in_b(q)).to_string();
      },
      py::arg("p"), py::arg("q"), py::arg("delta") = "", py::arg("exact") = "");

  m.def(
      "jacobi",
      [](const std::string& f, const std::string& g, const std::string& h) {
        auto c = is_poisson_triple({in_b(f), in_b(g), in_b(h)});
        return std::make_pair(c.ok, c.residual.to_string());
      },
      py::arg("f"), py::arg("g"), py::arg("h"));

  m.def(
      "ore_mul",
      [](const std::string& delta, const std::string& u, const std::string& v) {
        Derivation d = cli::parse_delta(delta);
        return (SkewPoly::from_commutative(d, in_b(u)) * SkewPoly::from_commutative(d, in_b(v))).to_string();
      },
      py::arg("delta"), py::arg("u"), py::arg("v"));

  m.def(
      "darboux_json",
      [](const std::string& delta, int dmax, unsigned threads) {
        py::gil_scoped_release release;
        return cli::to_json(darboux_search(cli::parse_delta(delta), dmax, threads)).dump();
      },
      py::arg("delta"), py::arg("dmax") = 2, py::arg("threads") = 1);

  m.def(
      "classify_json",
      [](const std::string& delta, int dmax, const std::string& side, unsigned threads) {
        py::gil_scoped_release release;
        Derivation d = cli::parse_delta(delta);
        auto s = classify_delta_spectrum(DeltaBracket{d}, dmax, threads);
        if (side == "ore") s = gamma_map(s, d);
        return cli::to_json(s).dump();
      },
      py::arg("delta"), py::arg("dmax") = 2, py::arg("side") = "poisson", py::arg("threads") = 1);

  m.def(
      "shamsuddin",
      [](const std::string& delta) {
        auto v = shamsuddin_simple(cli::parse_delta(delta));
        return std::make_pair(v.simple, v.r ? py::object(py::str(v.r->to_string())) : py::object(py::none()));
      },
      py::arg("delta"));

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
