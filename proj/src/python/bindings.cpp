#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "genmult/cli.hpp"
#include "genmult/error.hpp"
#include "genmult/fixtures.hpp"
#include "genmult/hypergraph.hpp"
#include "genmult/multiplicity.hpp"

namespace py = pybind11;
using namespace genmult;

namespace {

MonomialIdeal make_ideal(std::size_t nvars, const std::vector<std::vector<long>>& gens) {
  std::vector<IntVector> rows;
  for (const auto& g : gens) {
    IntVector v;
    for (long x : g) v.emplace_back(x);
    rows.push_back(std::move(v));
  }
  return MonomialIdeal(nvars, std::move(rows));
}

Hypergraph make_graph(const std::vector<std::vector<std::string>>& edges, const std::vector<std::string>& nodes) {
  return Hypergraph(nodes, edges);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact j- and epsilon-multiplicities (rationals are returned as 'p/q' strings)";

  py::register_exception<CrossCheckError>(m, "CrossCheckError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InputError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("j_monomial", [](std::size_t n, const std::vector<std::vector<long>>& g) {
    return to_string(j_monomial(make_ideal(n, g)));
  });
  m.def(
      "epsilon_monomial",
      [](std::size_t n, const std::vector<std::vector<long>>& g, const std::string& region) {
        if (region != "simplex" && region != "box") throw InputError("region must be 'simplex' or 'box'");
        return to_string(epsilon_monomial(make_ideal(n, g), region == "box" ? EpsilonRegion::Box
                                                                             : EpsilonRegion::Simplex));
      },
      py::arg("nvars"), py::arg("generators"), py::arg("region") = "simplex");
  m.def("analytic_spread", [](std::size_t n, const std::vector<std::vector<long>>& g) {
    return analytic_spread(make_ideal(n, g));
  });
  m.def(
      "j_edge", [](const std::vector<std::vector<std::string>>& e, const std::vector<std::string>& nodes) {
        return to_string(j_edge(make_graph(e, nodes)));
      },
      py::arg("edges"), py::arg("nodes") = std::vector<std::string>{});
  m.def(
      "epsilon_edge",
      [](const std::vector<std::vector<std::string>>& e, const std::vector<std::string>& nodes) {
        return to_string(epsilon_monomial(edge_ideal(make_graph(e, nodes)).ideal));
      },
      py::arg("edges"), py::arg("nodes") = std::vector<std::string>{});
  m.def("hypersimplex_volume", [](std::size_t k, std::size_t n) { return to_string(hypersimplex_volume(k, n)); });

  m.def(
      "run",
      [](const std::string& command, std::optional<std::string> document, bool oracle, bool explain,
         std::size_t cap) {
        RunConfig cfg;
        cfg.command = command;
        cfg.document = std::move(document);
        cfg.format = OutputFormat::Json;
        cfg.oracle = oracle;
        cfg.explain = explain;
        cfg.tulgeity_cap = cap;
        std::ostringstream out, err;
        const int code = genmult::run(cfg, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("command"), py::arg("document") = py::none(), py::arg("oracle") = false,
      py::arg("explain") = false, py::arg("tulgeity_cap") = 14);

  m.def("fixtures", [] {
    py::list out;
    for (const auto& r : run_fixtures()) {
      py::dict d;
      d["topic"] = r.topic;
      d["name"] = r.name;
      d["expected"] = r.expected;
      d["computed"] = r.computed;
      d["pass"] = r.pass;
      out.append(d);
    }
    return out;
  });
}
