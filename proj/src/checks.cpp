#include "graphoid/checks.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "graphoid/axioms.hpp"
#include "graphoid/io.hpp"
#include "graphoid/protocol.hpp"
#include "graphoid/rng.hpp"
#include "graphoid/separation.hpp"

namespace graphoid {

namespace {

std::uint64_t trial_seed(std::uint64_t seed, int index) {
  return seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(index);
}

void require_within(int n, int effective_limit, const char* what) {
  if (n > effective_limit) {
    throw LimitError(std::string(what) + " checks are limited to n <= " +
                     std::to_string(effective_limit) + " (asked for n = " + std::to_string(n) +
                     "); raise the limit to override");
  }
}

// Runs `trials` instances, cycling the size from lo to hi, and collects
// the outcome. `body` returns an empty string on pass, a repro on fail.
CheckOutcome run_suite(std::string name, int lo, int hi, int trials, std::uint64_t seed,
                       const TrialCallback& cb,
                       const std::function<std::string(Rng&, int)>& body) {
  CheckOutcome outcome;
  outcome.name = std::move(name);
  for (int i = 1; i <= trials; ++i) {
    int n = lo + (hi > lo ? (i - 1) % (hi - lo + 1) : 0);
    Rng rng(trial_seed(seed, i));
    std::string repro = body(rng, n);
    ++outcome.trials;
    if (!repro.empty()) {
      ++outcome.failures;
      if (outcome.failure_repros.size() < 5) outcome.failure_repros.push_back(repro);
    }
    if (cb) cb(i, repro.empty(), repro);
  }
  return outcome;
}

std::string describe(const char* label, const std::string& body) {
  return std::string("# ") + label + "\n" + body;
}

}  // namespace

CheckOutcome check_corollary1(int n, int trials, std::uint64_t seed, int limit,
                              const TrialCallback& cb) {
  int model_limit = limit > 0 ? limit : kDefaultModelEnumLimit;
  int closure_limit = limit > 0 ? limit : kDefaultClosureLimit;
  require_within(n, std::min(model_limit, closure_limit), "corollary1");
  int lo = std::max(2, std::min(3, n));
  return run_suite("corollary1", lo, n, trials, seed, cb, [&](Rng& rng, int size) -> std::string {
    StratifiedProtocol p = random_protocol(rng, test_universe(size));
    Dag g = compile(p);
    DependencyModel graph_side = dsep_model(g, model_limit);

    DependencyModel list(p.universe);
    for (const Triplet& t : protocol_triplets(p)) list.insert(t);
    DependencyModel derived_side = closure(list, ClosureMode::semigraphoid, closure_limit);

    if (graph_side == derived_side) return "";
    std::ostringstream repro;
    repro << describe("protocol", to_text(p));
    for (const Triplet& t : graph_side.triplets()) {
      if (!derived_side.contains(t)) {
        repro << "# d-separated but not derivable: " << t.to_literal() << "\n";
      }
    }
    for (const Triplet& t : derived_side.triplets()) {
      if (!graph_side.contains(t)) {
        repro << "# derivable but not d-separated: " << t.to_literal() << "\n";
      }
    }
    return repro.str();
  });
}

CheckOutcome check_theorem1(int n, int trials, std::uint64_t seed, int /*limit*/,
                            const TrialCallback& cb) {
  require_within(n, 26, "theorem1");
  return run_suite("theorem1", 2, n, trials, seed, cb, [&](Rng& rng, int size) -> std::string {
    Dag g = random_dag(rng, test_universe(size));
    Dag rebuilt = compile(extract(g));
    if (rebuilt.same_edges(g)) return "";
    return describe("graph whose protocol did not regenerate it", to_text(g));
  });
}

CheckOutcome check_theorem2(int n, int trials, std::uint64_t seed, int limit,
                            const TrialCallback& cb) {
  int model_limit = limit > 0 ? limit : kDefaultModelEnumLimit;
  require_within(n, model_limit, "theorem2");
  return run_suite("theorem2", 2, n, trials, seed, cb, [&](Rng& rng, int size) -> std::string {
    Dag g = random_dag(rng, test_universe(size));
    DependencyModel m = dsep_model(g, model_limit);
    IndependenceOracle oracle = model_oracle(m);

    std::vector<std::vector<int>> orderings;
    if (size <= 4) {
      std::vector<int> perm(size);
      for (int i = 0; i < size; ++i) perm[i] = i;
      do {
        orderings.push_back(perm);
      } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
      for (int k = 0; k < 10; ++k) orderings.push_back(rng.permutation(size));
    }

    for (const std::vector<int>& order : orderings) {
      StratifiedProtocol p{g.universe(), order, std::vector<VarSet>(size)};
      VarSet before;
      for (int v : order) {
        p.boundary[v] = minimal_boundary(oracle, before, v);
        before |= VarSet::single(v);
      }
      Dag compiled = compile(p);
      if (std::optional<Triplet> bad = is_imap(dsep_model(compiled, model_limit), oracle)) {
        std::ostringstream repro;
        repro << describe("source graph", to_text(g)) << describe("protocol", to_text(p))
              << "# asserted by the compiled DAG but absent from the model: "
              << bad->to_literal() << "\n";
        return repro.str();
      }
    }
    return "";
  });
}

CheckOutcome check_theorem3(int n, int trials, std::uint64_t seed, int limit,
                            const TrialCallback& cb) {
  int model_limit = limit > 0 ? limit : kDefaultModelEnumLimit;
  require_within(n, model_limit, "theorem3");
  return run_suite("theorem3", 2, n, trials, seed, cb, [&](Rng& rng, int size) -> std::string {
    Dag g = random_dag(rng, test_universe(size));
    DependencyModel m = dsep_model(g, model_limit);
    IndependenceOracle oracle = model_oracle(m);
    for (const Triplet& t : m.triplets()) {
      std::optional<StratifiedProtocol> w = witness_protocol(oracle, t);
      if (!w || !dsep(compile(*w), t)) {
        return describe("graph", to_text(g)) + "# triplet without a working witness: " +
               t.to_literal() + "\n";
      }
    }
    return "";
  });
}

CheckOutcome check_oracle_eq(int n, int trials, std::uint64_t seed, int limit,
                             const TrialCallback& cb, int queries_per_graph) {
  int path_limit = limit > 0 ? limit : kDefaultPathEnumLimit;
  require_within(n, path_limit, "oracle-eq");
  return run_suite("oracle-eq", 2, n, trials, seed, cb, [&](Rng& rng, int size) -> std::string {
    Dag g = random_dag(rng, test_universe(size));
    for (int k = 0; k < queries_per_graph; ++k) {
      Triplet q = random_query(rng, g.universe());
      bool fast = dsep(g, q);
      bool naive = dsep_naive(g, q, path_limit);
      if (fast != naive) {
        std::ostringstream repro;
        repro << describe("graph", to_text(g)) << "# query: " << q.to_literal() << "\n"
              << "# reachability says " << (fast ? "separated" : "connected")
              << ", path enumeration says " << (naive ? "separated" : "connected") << "\n";
        return repro.str();
      }
    }
    return "";
  });
}

CheckOutcome check_usep_axioms(int n, int trials, std::uint64_t seed, int limit,
                               const TrialCallback& cb) {
  int model_limit = limit > 0 ? limit : kDefaultModelEnumLimit;
  require_within(n, model_limit, "usep-axioms");
  return run_suite("usep-axioms", 2, n, trials, seed, cb, [&](Rng& rng, int size) -> std::string {
    UndirectedGraph graph = random_undirected(rng, test_universe(size));
    DependencyModel m = usep_model(graph, model_limit);
    const UniversePtr& u = m.universe();
    VarSet full = u->full_set();

    auto fail = [&](const char* property, const Triplet& t) {
      return describe("graph", to_text(graph)) + "# property violated: " + property +
             " at triplet " + t.to_literal() + "\n";
    };

    for (const Triplet& t : m.triplets()) {
      if (!m.contains(t.flipped())) return fail("symmetry", t);
      for (const Triplet& r : apply_axiom(AxiomName::decomposition, t)) {
        if (!m.contains(r)) return fail("decomposition", r);
      }
      // Strong union: any disjoint enlargement of z preserves
      // separation.
      VarSet free = full - t.vars();
      for (std::uint64_t w = free.bits(); w != 0; w = (w - 1) & free.bits()) {
        Triplet widened(u, t.x(), t.z() | VarSet::from_bits(w), t.y());
        if (!m.contains(widened)) return fail("strong-union", widened);
      }
      // Transitivity with the extra variable outside x, y, and z.
      for (int gamma : free) {
        Triplet left(u, t.x(), t.z(), VarSet::single(gamma));
        Triplet right(u, t.y(), t.z(), VarSet::single(gamma));
        if (!m.contains(left) && !m.contains(right)) return fail("transitivity", t);
      }
    }
    for (const Triplet& t1 : m.triplets()) {
      for (const Triplet& t2 : m.triplets()) {
        for (const Triplet& r : apply_axiom(AxiomName::intersection, t1, t2)) {
          if (!m.contains(r)) return fail("intersection", r);
        }
      }
    }
    return "";
  });
}

CheckOutcome check_dsep_closure(int n, int trials, std::uint64_t seed, int limit,
                                const TrialCallback& cb) {
  int model_limit = limit > 0 ? limit : kDefaultModelEnumLimit;
  int closure_limit = limit > 0 ? limit : kDefaultClosureLimit;
  require_within(n, std::min(model_limit, closure_limit), "dsep-closure");
  return run_suite("dsep-closure", 2, n, trials, seed, cb, [&](Rng& rng, int size) -> std::string {
    Dag g = random_dag(rng, test_universe(size));
    DependencyModel m = dsep_model(g, model_limit);
    if (is_closed(m, ClosureMode::semigraphoid, closure_limit)) return "";
    return describe("graph with a non-closed separation model", to_text(g));
  });
}

CheckOutcome check_idsep_conservative(int n, int trials, std::uint64_t seed, int limit,
                                      const TrialCallback& cb) {
  int model_limit = limit > 0 ? limit : kDefaultModelEnumLimit;
  require_within(n, std::max(model_limit, 6), "idsep");
  return run_suite("idsep", 2, n, trials, seed, cb, [&](Rng& rng, int size) -> std::string {
    Dag g = random_dag(rng, test_universe(size));
    std::string mismatch;
    for_each_canonical_triplet(g.universe(), [&](const Triplet& q) {
      if (!mismatch.empty()) return;
      if (idsep(g, q) != dsep(g, q)) {
        mismatch = describe("deterministic-free graph", to_text(g)) +
                   "# idsep and dsep disagree on: " + q.to_literal() + "\n";
      }
    });
    return mismatch;
  });
}

CheckOutcome check_determination(int n, int trials, std::uint64_t seed, const TrialCallback& cb) {
  require_within(n, 26, "determination");
  return run_suite("determination", 2, n, trials, seed, cb, [&](Rng& rng, int size) -> std::string {
    Dag g = random_det_dag(rng, test_universe(size));
    VarSet z2 = rng.subset_of(g.universe()->full_set());
    VarSet z1 = rng.subset_of(z2);
    VarSet d1 = determination_closure(g, z1);
    VarSet d2 = determination_closure(g, z2);
    auto fail = [&](const char* what) {
      return describe("graph", to_text(g)) + "# " + what + " with z1 = {" +
             g.universe()->label(z1) + "}, z2 = {" + g.universe()->label(z2) + "}\n";
    };
    if (!d2.contains_all(d1)) return fail("determination closure is not monotone");
    if (!d1.contains_all(z1)) return fail("determination closure lost part of z");
    if (determination_closure(g, d1) != d1) return fail("determination closure not idempotent");
    return "";
  });
}

CheckOutcome check_minimal_imap(int n, int trials, std::uint64_t seed, int limit,
                             const TrialCallback& cb) {
  int model_limit = limit > 0 ? limit : kDefaultModelEnumLimit;
  require_within(n, model_limit, "minimal-imap");
  return run_suite("minimal-imap", 2, n, trials, seed, cb, [&](Rng& rng, int size) -> std::string {
    Dag g = random_dag(rng, test_universe(size));
    IndependenceOracle oracle = dsep_oracle(g);
    UndirectedGraph imap = undirected_minimal_imap(oracle);
    if (std::optional<Triplet> bad = is_imap(usep_model(imap, model_limit), oracle)) {
      return describe("graph", to_text(g)) + describe("constructed graph", to_text(imap)) +
             "# separation not licensed by the oracle: " + bad->to_literal() + "\n";
    }
    for (auto [a, b] : imap.edges()) {
      UndirectedGraph thinner = imap.without_edge(a, b);
      if (!is_imap(usep_model(thinner, model_limit), oracle)) {
        return describe("graph", to_text(g)) +
               "# removing edge " + imap.universe()->name(a) + " -- " +
               imap.universe()->name(b) + " kept the graph an I-map; it is not edge-minimal\n";
      }
    }
    return "";
  });
}

}  // namespace graphoid
