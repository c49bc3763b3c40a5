#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "adjointlab/analysis.hpp"
#include "adjointlab/bigint.hpp"
#include "adjointlab/bijection.hpp"
#include "adjointlab/campaign.hpp"
#include "adjointlab/errors.hpp"
#include "adjointlab/graph.hpp"
#include "adjointlab/graph_io.hpp"
#include "adjointlab/spectra.hpp"

namespace py = pybind11;
using namespace adjointlab;

namespace {

py::int_ to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str(10).c_str(), nullptr, 10));
}

py::list to_py(const std::vector<BigInt>& v) {
  py::list out;
  for (const BigInt& x : v) out.append(to_py(x));
  return out;
}

BigInt from_py(const py::handle& v) { return BigInt(py::str(py::int_(py::reinterpret_borrow<py::object>(v))).cast<std::string>()); }

Polynomial polynomial_from(const py::sequence& coeffs) {
  std::vector<BigInt> c;
  for (const auto& x : coeffs) c.push_back(from_py(x));
  return Polynomial(std::move(c));
}

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

VertexOrdering ordering_for(const Graph& g, const std::optional<std::vector<int>>& perm) {
  if (!perm) return VertexOrdering::identity(g.order());
  if (static_cast<int>(perm->size()) != g.order()) {
    throw std::invalid_argument("ordering has " + std::to_string(perm->size()) + " entries for " +
                                std::to_string(g.order()) + " vertices");
  }
  return VertexOrdering(*perm);
}

py::dict hat_dict(const HatGraph& h) {
  py::list labels;
  for (const Edge& e : h.labels) labels.append(py::make_tuple(e.u, e.v));
  py::list edges;
  for (const Edge& e : h.graph.edges()) edges.append(py::make_tuple(e.u, e.v));
  py::dict d;
  d["labels"] = labels;
  d["edges"] = edges;
  return d;
}

Polynomial named_polynomial(const Graph& g, const std::string& which) {
  if (which == "adjoint") return adjoint_polynomial(g);
  if (which == "hstar") return h_star(g);
  if (which == "indep") return independence_polynomial(g);
  if (which == "matching") return matching_polynomial_modified(g);
  if (which == "chromatic") return chromatic_polynomial(g);
  throw std::invalid_argument("unknown polynomial '" + which + "'");
}

CampaignConfig make_config(int max_n, int orderings, std::uint64_t seed, int terms, bool connected_only, int jobs,
                           const std::string& tol) {
  CampaignConfig c;
  c.max_n = max_n;
  c.orderings_per_graph = orderings;
  c.seed = seed;
  c.series_terms = terms;
  c.connected_only = connected_only;
  c.jobs = jobs;
  c.tol = parse_rational(tol);
  return c;
}

}  // namespace

PYBIND11_MODULE(_adjointlab, m) {
  m.doc() = "Exact clique-cover, independence and matching spectra; hat graphs; root checks.";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<CapExceeded> cap_exceeded(m, "CapExceeded", PyExc_OverflowError);
  static py::exception<DegenerateInput> degenerate(m, "DegenerateInput", PyExc_ValueError);
  static py::exception<NotConnected> not_connected(m, "NotConnected", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse_error(e.what());
    } catch (const CapExceeded& e) {
      cap_exceeded(e.what());
    } catch (const NotConnected& e) {
      not_connected(e.what());
    } catch (const DegenerateInput& e) {
      degenerate(e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             std::vector<Edge> es;
             for (auto [a, b] : edges) es.emplace_back(a, b);
             return Graph(n, es);
           }),
           py::arg("n"), py::arg("edges"), "Vertices are 0-based.")
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def_static(
          "parse",
          [](const std::string& text, const std::string& format) {
            return parse_graph_text(text, parse_format_name(format));
          },
          py::arg("text"), py::arg("format") = "auto")
      .def_static("read", [](const std::string& path) { return read_graph_file(path); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("has_edge", [](const Graph& g, int u, int v) {
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw py::index_error("vertex out of range");
        return g.has_edge(u, v);
      })
      .def("graph6", [](const Graph& g) { return emit_graph6(g); })
      .def("edge_list", [](const Graph& g) { return emit_edge_list(g); })
      .def("is_connected", [](const Graph& g) { return is_connected(g); })
      .def("complement", [](const Graph& g) { return complement(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph('" + emit_graph6(g) + "')"; });

  m.def("clique_cover_spectrum", [](const Graph& g) { return to_py(clique_cover_spectrum(g).counts); });
  m.def("independence_spectrum", [](const Graph& g) { return to_py(independence_spectrum(g).counts); });
  m.def("matching_spectrum", [](const Graph& g) { return to_py(matching_spectrum(g).counts); });
  m.def(
      "polynomial", [](const Graph& g, const std::string& which) { return to_py(named_polynomial(g, which).coefficients()); },
      py::arg("graph"), py::arg("which"), "Ascending integer coefficients; which is adjoint, hstar, indep, matching or chromatic.");
  m.def("chromatic_cross_check", [](const Graph& g) { return chromatic_cross_check(g); });

  m.def(
      "hat",
      [](const Graph& g, const std::optional<std::vector<int>>& ordering) {
        return hat_dict(hat_of(g, ordering_for(g, ordering)));
      },
      py::arg("graph"), py::arg("ordering") = py::none());
  m.def("line_graph", [](const Graph& g) { return hat_dict(line_graph(g)); });

  m.def(
      "verify_bijection",
      [](const Graph& g, const std::optional<std::vector<int>>& ordering) {
        const BijectionReport r = verify_bijection(g, ordering_for(g, ordering));
        py::dict d;
        d["passed"] = r.passed();
        d["sizes_shift"] = r.sizes_shift;
        d["inverse_after_forward"] = r.inverse_after_forward;
        d["forward_after_inverse"] = r.forward_after_inverse;
        d["counts_match"] = r.counts_match;
        d["covers"] = r.covers;
        d["independent_sets"] = r.independent_sets;
        d["failures"] = r.failures;
        return d;
      },
      py::arg("graph"), py::arg("ordering") = py::none());

  m.def(
      "roots",
      [](const Graph& g, const std::optional<std::vector<int>>& ordering, const std::string& tol, bool force) {
        AnalysisOptions options;
        options.tol = parse_rational(tol);
        options.allow_disconnected = force;
        return to_py(to_json(analyze_roots(g, ordering_for(g, ordering), options), options.tol));
      },
      py::arg("graph"), py::arg("ordering") = py::none(), py::arg("tol") = "1e-12", py::arg("force") = false);

  m.def(
      "series",
      [](const py::sequence& numer, const py::sequence& denom, int terms) {
        return to_py(to_json(series_ratio(polynomial_from(numer), polynomial_from(denom), terms)));
      },
      py::arg("numer"), py::arg("denom"), py::arg("terms") = 20, "Power series of numer/denom from ascending coefficients.");

  m.def(
      "verify",
      [](const std::string& suites, int max_n, int orderings, std::uint64_t seed, int terms, bool connected_only,
         int jobs, const std::string& tol) {
        const CampaignConfig c = make_config(max_n, orderings, seed, terms, connected_only, jobs, tol);
        CampaignReport r;
        {
          py::gil_scoped_release release;
          r = run_campaign(parse_suites(suites), c);
        }
        return to_py(to_json(r));
      },
      py::arg("suites") = "all", py::arg("max_n") = 5, py::arg("orderings") = 3, py::arg("seed") = 1,
      py::arg("terms") = 20, py::arg("connected_only") = false, py::arg("jobs") = 1, py::arg("tol") = "1e-12");

  m.def(
      "sweep",
      [](const std::string& suites, int n, int count, double p, std::uint64_t seed, int orderings, bool connected_only,
         int jobs) {
        CampaignConfig c = make_config(n, orderings, seed, 20, connected_only, jobs, "1e-12");
        SweepConfig s;
        s.n = n;
        s.count = count;
        s.edge_probability = p;
        CampaignReport r;
        {
          py::gil_scoped_release release;
          r = run_sweep(parse_suites(suites), c, s);
        }
        return to_py(to_json(r));
      },
      py::arg("suites") = "oracle", py::arg("n") = 8, py::arg("count") = 1000, py::arg("p") = 0.5,
      py::arg("seed") = 1, py::arg("orderings") = 3, py::arg("connected_only") = false, py::arg("jobs") = 1);
}
