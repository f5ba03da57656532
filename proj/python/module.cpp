// Python bindings. Variable sets cross the boundary as lists of names;
// everything heavier stays a C++ object.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graphoid/graphoid.hpp"

namespace py = pybind11;
using namespace graphoid;

namespace {

VarSet names_to_set(const UniversePtr& u, const std::vector<std::string>& names) {
  VarSet s;
  for (const std::string& n : names) s |= u->var(n);
  return s;
}

std::vector<std::string> set_to_names(const UniversePtr& u, VarSet s) {
  return u->names_of(s);
}

ClosureMode mode_arg(const std::string& text) {
  auto mode = mode_from_string(text);
  if (!mode) throw ValidationError("unknown mode '" + text + "' (semigraphoid or graphoid)");
  return *mode;
}

AxiomName axiom_arg(const std::string& text) {
  auto axiom = axiom_from_string(text);
  if (!axiom) throw ValidationError("unknown axiom '" + text + "'");
  return *axiom;
}

int effective(int limit, int fallback) { return limit > 0 ? limit : fallback; }

}  // namespace

PYBIND11_MODULE(graphoid, m) {
  m.doc() = "independence reasoning: graphoid axioms, stratified protocols, and "
            "d-separation over DAGs";

  // Exception mapping; later registrations take precedence, so the base
  // class goes first.
  static py::exception<Error> base_exc(m, "Error");
  py::register_exception<ValidationError>(m, "ValidationError", base_exc);
  py::register_exception<ParseError>(m, "ParseError", base_exc);
  py::register_exception<CycleError>(m, "CycleError", base_exc);
  py::register_exception<LimitError>(m, "LimitError", base_exc);
  py::register_exception<LookupError>(m, "VariableLookupError", base_exc);

  py::class_<Universe, UniversePtr>(m, "Universe")
      .def(py::init([](const std::vector<std::string>& names) { return Universe::create(names); }),
           py::arg("names"))
      .def_property_readonly("names", &Universe::names)
      .def("__len__", &Universe::size)
      .def("index", [](const Universe& u, const std::string& name) { return u.index(name); })
      .def("__contains__",
           [](const Universe& u, const std::string& name) { return u.has(name); })
      .def("__repr__", [](const Universe& u) {
        std::string r = "Universe([";
        for (int i = 0; i < u.size(); ++i) r += (i ? ", '" : "'") + u.name(i) + "'";
        return r + "])";
      });

  py::class_<Triplet>(m, "Triplet")
      .def(py::init([](UniversePtr u, const std::vector<std::string>& x,
                       const std::vector<std::string>& z, const std::vector<std::string>& y) {
             return Triplet(u, names_to_set(u, x), names_to_set(u, z), names_to_set(u, y));
           }),
           py::arg("universe"), py::arg("x"), py::arg("z"), py::arg("y"))
      .def_property_readonly("universe", &Triplet::universe)
      .def_property_readonly("x", [](const Triplet& t) { return set_to_names(t.universe(), t.x()); })
      .def_property_readonly("z", [](const Triplet& t) { return set_to_names(t.universe(), t.z()); })
      .def_property_readonly("y", [](const Triplet& t) { return set_to_names(t.universe(), t.y()); })
      .def("canonical", &Triplet::canonical)
      .def("flipped", &Triplet::flipped)
      .def("literal", &Triplet::to_literal)
      .def("__eq__", [](const Triplet& a, const Triplet& b) { return a == b; })
      .def("__hash__",
           [](const Triplet& t) {
             return py::hash(py::make_tuple(t.x().bits(), t.z().bits(), t.y().bits()));
           })
      .def("__repr__", [](const Triplet& t) { return "Triplet('" + t.to_literal() + "')"; });

  py::class_<DependencyModel>(m, "DependencyModel")
      .def(py::init<UniversePtr>(), py::arg("universe"))
      .def_property_readonly("universe", &DependencyModel::universe)
      .def("insert", &DependencyModel::insert)
      .def("insert",
           [](DependencyModel& m_, const std::string& literal) {
             m_.insert(parse_triplet(literal, m_.universe()));
           })
      .def("__contains__", &DependencyModel::contains)
      .def("__contains__",
           [](const DependencyModel& m_, const std::string& literal) {
             return m_.contains(parse_triplet(literal, m_.universe()));
           })
      .def("__len__", &DependencyModel::size)
      .def("__iter__",
           [](const DependencyModel& m_) {
             return py::make_iterator(m_.triplets().begin(), m_.triplets().end());
           },
           py::keep_alive<0, 1>())
      .def("__eq__",
           [](const DependencyModel& a, const DependencyModel& b) { return a == b; })
      .def("subset_of", &DependencyModel::subset_of)
      .def("text", [](const DependencyModel& m_) { return to_text(m_); });

  py::class_<Dag>(m, "Dag")
      .def(py::init([](UniversePtr u, const std::vector<std::pair<std::string, std::string>>& edges,
                       const std::vector<std::string>& deterministic) {
             std::vector<VarSet> parents(u->size());
             for (const auto& [p, c] : edges) parents[u->index(c)] |= u->var(p);
             return Dag::create(u, std::move(parents), names_to_set(u, deterministic));
           }),
           py::arg("universe"), py::arg("edges"),
           py::arg("deterministic") = std::vector<std::string>{})
      .def_property_readonly("universe", &Dag::universe)
      .def("parents", [](const Dag& g, const std::string& v) {
        return set_to_names(g.universe(), g.parents(g.universe()->index(v)));
      })
      .def("children", [](const Dag& g, const std::string& v) {
        return set_to_names(g.universe(), g.children(g.universe()->index(v)));
      })
      .def("descendants", [](const Dag& g, const std::string& v) {
        return set_to_names(g.universe(), g.descendants(g.universe()->index(v)));
      })
      .def("topological_order",
           [](const Dag& g) {
             std::vector<std::string> out;
             for (int v : g.topological_order()) out.push_back(g.universe()->name(v));
             return out;
           })
      .def_property_readonly("deterministic",
                             [](const Dag& g) {
                               return set_to_names(g.universe(), g.deterministic());
                             })
      .def("edge_count", &Dag::edge_count)
      .def("__eq__", [](const Dag& a, const Dag& b) { return a == b; })
      .def("same_edges", &Dag::same_edges)
      .def("text", [](const Dag& g) { return to_text(g); })
      .def("dot", [](const Dag& g) { return to_dot(g); });

  py::class_<UndirectedGraph>(m, "UndirectedGraph")
      .def(py::init([](UniversePtr u, const std::vector<std::pair<std::string, std::string>>& links) {
             std::vector<std::pair<int, int>> edges;
             for (const auto& [a, b] : links) edges.emplace_back(u->index(a), u->index(b));
             return UndirectedGraph::create(u, edges);
           }),
           py::arg("universe"), py::arg("links"))
      .def_property_readonly("universe", &UndirectedGraph::universe)
      .def("neighbors", [](const UndirectedGraph& g, const std::string& v) {
        return set_to_names(g.universe(), g.neighbors(g.universe()->index(v)));
      })
      .def("edges",
           [](const UndirectedGraph& g) {
             std::vector<std::pair<std::string, std::string>> out;
             for (auto [a, b] : g.edges()) {
               out.emplace_back(g.universe()->name(a), g.universe()->name(b));
             }
             return out;
           })
      .def("edge_count", &UndirectedGraph::edge_count)
      .def("without_edge", [](const UndirectedGraph& g, const std::string& a, const std::string& b) {
        return g.without_edge(g.universe()->index(a), g.universe()->index(b));
      })
      .def("__eq__", [](const UndirectedGraph& a, const UndirectedGraph& b) { return a == b; })
      .def("text", [](const UndirectedGraph& g) { return to_text(g); })
      .def("dot", [](const UndirectedGraph& g) { return to_dot(g); });

  py::class_<StratifiedProtocol>(m, "StratifiedProtocol")
      .def(py::init([](UniversePtr u, const std::vector<std::string>& order,
                       const std::map<std::string, std::vector<std::string>>& boundary) {
             StratifiedProtocol p;
             p.universe = u;
             for (const std::string& name : order) p.order.push_back(u->index(name));
             p.boundary.assign(u->size(), VarSet());
             for (const auto& [name, members] : boundary) {
               p.boundary[u->index(name)] = names_to_set(u, members);
             }
             return p;
           }),
           py::arg("universe"), py::arg("order"), py::arg("boundary"))
      .def_property_readonly("universe",
                             [](const StratifiedProtocol& p) { return p.universe; })
      .def_property_readonly("order",
                             [](const StratifiedProtocol& p) {
                               std::vector<std::string> out;
                               for (int v : p.order) out.push_back(p.universe->name(v));
                               return out;
                             })
      .def("boundary",
           [](const StratifiedProtocol& p, const std::string& v) {
             return set_to_names(p.universe, p.boundary.at(p.universe->index(v)));
           })
      .def("text", [](const StratifiedProtocol& p) { return to_text(p); });

  py::class_<DerivationStep>(m, "DerivationStep")
      .def_property_readonly("axiom",
                             [](const DerivationStep& s) { return std::string(to_string(s.axiom)); })
      .def_readonly("premises", &DerivationStep::premises)
      .def_readonly("result", &DerivationStep::result);

  py::class_<DerivationTrace>(m, "DerivationTrace")
      .def_readonly("conclusion", &DerivationTrace::conclusion)
      .def_readonly("steps", &DerivationTrace::steps);

  py::class_<IndependenceOracle>(m, "IndependenceOracle")
      .def(py::init([](UniversePtr u, std::function<bool(const Triplet&)> fn) {
             return IndependenceOracle(u, std::move(fn), "python predicate");
           }),
           py::arg("universe"), py::arg("predicate"))
      .def_property_readonly("universe", &IndependenceOracle::universe)
      .def("affirms", &IndependenceOracle::affirms);

  py::class_<CheckOutcome>(m, "CheckOutcome")
      .def_readonly("name", &CheckOutcome::name)
      .def_readonly("trials", &CheckOutcome::trials)
      .def_readonly("failures", &CheckOutcome::failures)
      .def_readonly("failure_repros", &CheckOutcome::failure_repros)
      .def("passed", &CheckOutcome::passed);

  // Parsing and serialization.
  m.def("parse_dag", [](const std::string& text) { return parse_dag(text); }, py::arg("text"));
  m.def("parse_undirected", [](const std::string& text) { return parse_undirected(text); },
        py::arg("text"));
  m.def("parse_model", [](const std::string& text) { return parse_model(text); }, py::arg("text"));
  m.def("parse_protocol", [](const std::string& text) { return parse_protocol(text); },
        py::arg("text"));
  m.def("parse_triplet", &parse_triplet, py::arg("literal"), py::arg("universe"));

  // Axioms.
  m.def("canonical", [](const Triplet& t) { return t.canonical(); });
  m.def(
      "apply_axiom",
      [](const std::string& axiom, const Triplet& t1, const std::optional<Triplet>& t2) {
        return apply_axiom(axiom_arg(axiom), t1, t2);
      },
      py::arg("axiom"), py::arg("t1"), py::arg("t2") = std::nullopt);
  m.def(
      "closure",
      [](const DependencyModel& m_, const std::string& mode, int limit) {
        return closure(m_, mode_arg(mode), effective(limit, kDefaultClosureLimit));
      },
      py::arg("model"), py::arg("mode") = "semigraphoid", py::arg("limit") = 0);
  m.def(
      "is_closed",
      [](const DependencyModel& m_, const std::string& mode, int limit) {
        return is_closed(m_, mode_arg(mode), effective(limit, kDefaultClosureLimit));
      },
      py::arg("model"), py::arg("mode") = "semigraphoid", py::arg("limit") = 0);
  m.def(
      "derive",
      [](const DependencyModel& m_, const Triplet& target, const std::string& mode, int limit) {
        return derive(m_, target, mode_arg(mode), effective(limit, kDefaultClosureLimit));
      },
      py::arg("model"), py::arg("target"), py::arg("mode") = "semigraphoid", py::arg("limit") = 0);
  m.def(
      "derive",
      [](const DependencyModel& m_, const std::string& target, const std::string& mode,
         int limit) {
        return derive(m_, parse_triplet(target, m_.universe()), mode_arg(mode),
                      effective(limit, kDefaultClosureLimit));
      },
      py::arg("model"), py::arg("target"), py::arg("mode") = "semigraphoid", py::arg("limit") = 0);

  // Protocols.
  m.def("validate", &validate, py::arg("protocol"));
  m.def("compile", &compile, py::arg("protocol"));
  m.def("extract", &extract, py::arg("graph"));
  m.def("protocol_triplets", &protocol_triplets, py::arg("protocol"));
  m.def(
      "minimal_boundary",
      [](const IndependenceOracle& oracle, const std::vector<std::string>& predecessors,
         const std::string& v) {
        const UniversePtr& u = oracle.universe();
        return set_to_names(u, minimal_boundary(oracle, names_to_set(u, predecessors),
                                                u->index(v)));
      },
      py::arg("oracle"), py::arg("predecessors"), py::arg("v"));
  m.def("witness_protocol", &witness_protocol, py::arg("oracle"), py::arg("target"));
  m.def(
      "witness_protocol",
      [](const IndependenceOracle& oracle, const std::string& target) {
        return witness_protocol(oracle, parse_triplet(target, oracle.universe()));
      },
      py::arg("oracle"), py::arg("target"));

  // Separation.
  auto query_of = [](const UniversePtr& u, const std::variant<std::string, Triplet>& q) {
    if (std::holds_alternative<Triplet>(q)) return std::get<Triplet>(q);
    return parse_triplet(std::get<std::string>(q), u);
  };
  m.def(
      "dsep",
      [query_of](const Dag& g, const std::variant<std::string, Triplet>& q) {
        return dsep(g, query_of(g.universe(), q));
      },
      py::arg("graph"), py::arg("query"));
  m.def(
      "dsep_naive",
      [query_of](const Dag& g, const std::variant<std::string, Triplet>& q, int limit) {
        return dsep_naive(g, query_of(g.universe(), q), effective(limit, kDefaultPathEnumLimit));
      },
      py::arg("graph"), py::arg("query"), py::arg("limit") = 0);
  m.def(
      "idsep",
      [query_of](const Dag& g, const std::variant<std::string, Triplet>& q) {
        return idsep(g, query_of(g.universe(), q));
      },
      py::arg("graph"), py::arg("query"));
  m.def(
      "usep",
      [query_of](const UndirectedGraph& g, const std::variant<std::string, Triplet>& q) {
        return usep(g, query_of(g.universe(), q));
      },
      py::arg("graph"), py::arg("query"));
  m.def(
      "dsep_model",
      [](const Dag& g, int limit) { return dsep_model(g, effective(limit, kDefaultModelEnumLimit)); },
      py::arg("graph"), py::arg("limit") = 0);
  m.def(
      "usep_model",
      [](const UndirectedGraph& g, int limit) {
        return usep_model(g, effective(limit, kDefaultModelEnumLimit));
      },
      py::arg("graph"), py::arg("limit") = 0);
  m.def(
      "determination_closure",
      [](const Dag& g, const std::vector<std::string>& z) {
        return set_to_names(g.universe(), determination_closure(g, names_to_set(g.universe(), z)));
      },
      py::arg("graph"), py::arg("z"));
  m.def("undirected_minimal_imap", &undirected_minimal_imap, py::arg("oracle"));
  m.def("is_imap", &is_imap, py::arg("candidate"), py::arg("oracle"));

  // Oracles.
  m.def("model_oracle", &model_oracle, py::arg("model"));
  m.def(
      "closure_oracle",
      [](const DependencyModel& m_, const std::string& mode, int limit) {
        return closure_oracle(m_, mode_arg(mode), effective(limit, kDefaultClosureLimit));
      },
      py::arg("model"), py::arg("mode") = "semigraphoid", py::arg("limit") = 0);
  m.def("dsep_oracle", &dsep_oracle, py::arg("graph"));
  m.def("usep_oracle", &usep_oracle, py::arg("graph"));

  // Property suites (same machinery as the CLI `check` command).
  m.def(
      "run_check",
      [](const std::string& name, int n, int trials, std::uint64_t seed, int limit) {
        if (name == "corollary1") return check_corollary1(n, trials, seed, limit);
        if (name == "theorem1") return check_theorem1(n, trials, seed, limit);
        if (name == "theorem2") return check_theorem2(n, trials, seed, limit);
        if (name == "theorem3") return check_theorem3(n, trials, seed, limit);
        if (name == "oracle-eq") return check_oracle_eq(n, trials, seed, limit);
        if (name == "usep-axioms") return check_usep_axioms(n, trials, seed, limit);
        throw ValidationError("unknown check '" + name + "'");
      },
      py::arg("name"), py::arg("n") = 4, py::arg("trials") = 50, py::arg("seed") = 0,
      py::arg("limit") = 0);
}
