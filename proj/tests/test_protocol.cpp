#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace graphoid;

namespace {

StratifiedProtocol chain_protocol() {
  UniversePtr u = gt::abc();
  return {u, {0, 1, 2}, {VarSet(), u->var("a"), u->var("b")}};
}

StratifiedProtocol collider_protocol() {
  UniversePtr u = gt::abc();
  return {u, {0, 1, 2}, {VarSet(), VarSet(), u->vars({"a", "b"})}};
}

// The exhaustive minimal-boundary oracle: all inclusion-minimal subsets
// B of `predecessors` whose remainder the oracle affirms.
std::vector<VarSet> minimal_boundaries_by_enumeration(const IndependenceOracle& oracle,
                                                      VarSet predecessors, int v) {
  std::vector<VarSet> valid;
  VarSet full = predecessors;
  std::uint64_t bits = full.bits();
  for (std::uint64_t s = bits;; s = (s - 1) & bits) {
    VarSet b = VarSet::from_bits(s);
    VarSet rest = predecessors - b;
    if (rest.empty() ||
        oracle.affirms(Triplet(oracle.universe(), VarSet::single(v), b, rest))) {
      valid.push_back(b);
    }
    if (s == 0) break;
  }
  std::vector<VarSet> minimal;
  for (VarSet b : valid) {
    bool is_minimal = true;
    for (VarSet other : valid) {
      if (other != b && b.contains_all(other)) is_minimal = false;
    }
    if (is_minimal) minimal.push_back(b);
  }
  return minimal;
}

}  // namespace

TEST_CASE("validate accepts the chain protocol") {
  CHECK(validate(chain_protocol()).empty());
}

TEST_CASE("validate reports non-preceding boundary members") {
  UniversePtr u = Universe::create({"a", "b"});
  StratifiedProtocol p{u, {0, 1}, {u->var("b"), VarSet()}};
  std::vector<std::string> v = validate(p);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == "b does not precede a");
}

TEST_CASE("validate reports duplicates and missing variables") {
  UniversePtr u = Universe::create({"a", "b"});
  StratifiedProtocol p{u, {0, 0}, {VarSet(), VarSet()}};
  std::vector<std::string> v = validate(p);
  CHECK(std::find(v.begin(), v.end(), "duplicate a") != v.end());
  CHECK(std::find(v.begin(), v.end(), "missing b") != v.end());
}

TEST_CASE("compile maps boundaries to parent sets") {
  CHECK(compile(chain_protocol()) == gt::chain());
  CHECK(compile(collider_protocol()) == gt::collider());

  UniversePtr u = gt::abc();
  StratifiedProtocol edgeless{u, {0, 1, 2}, {VarSet(), VarSet(), VarSet()}};
  CHECK(compile(edgeless).edge_count() == 0);
}

TEST_CASE("compile rejects invalid protocols with the violation bundle") {
  UniversePtr u = Universe::create({"a", "b"});
  StratifiedProtocol p{u, {0, 1}, {u->var("b"), VarSet()}};
  try {
    compile(p);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    REQUIRE(e.details.size() == 1);
    CHECK(e.details[0] == "b does not precede a");
  }
}

TEST_CASE("protocol triplet lists") {
  UniversePtr u = gt::abc();
  std::vector<Triplet> chain_list = protocol_triplets(chain_protocol());
  REQUIRE(chain_list.size() == 1);
  CHECK(chain_list[0] == gt::tr(u, "c | b | a"));

  std::vector<Triplet> coll_list = protocol_triplets(collider_protocol());
  REQUIRE(coll_list.size() == 1);
  CHECK(coll_list[0] == gt::tr(u, "b | - | a"));

  StratifiedProtocol edgeless{u, {0, 1, 2}, {VarSet(), VarSet(), VarSet()}};
  std::vector<Triplet> list = protocol_triplets(edgeless);
  REQUIRE(list.size() == 2);
  CHECK(list[0] == gt::tr(u, "b | - | a"));
  CHECK(list[1] == gt::tr(u, "c | - | a,b"));
}

TEST_CASE("extract returns the topological protocol") {
  StratifiedProtocol p = extract(gt::chain());
  CHECK(p.order == std::vector<int>{0, 1, 2});
  CHECK(p.boundary == std::vector<VarSet>{VarSet(), p.universe->var("a"), p.universe->var("b")});

  StratifiedProtocol pc = extract(gt::collider());
  CHECK(pc.order == std::vector<int>{0, 1, 2});
  CHECK(pc.boundary[2] == pc.universe->vars({"a", "b"}));

  UniversePtr u2 = Universe::create({"a", "b"});
  StratifiedProtocol pe = extract(Dag::create(u2, {VarSet(), VarSet()}));
  CHECK(pe.boundary == std::vector<VarSet>{VarSet(), VarSet()});
}

TEST_CASE("compile inverts extract, edge for edge") {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    UniversePtr u = test_universe(rng.range(2, 6));
    Dag g = random_dag(rng, u, rng.range(10, 90));
    CHECK(compile(extract(g)).same_edges(g));
  }
}

TEST_CASE("minimal boundary over the chain oracle") {
  Dag chain = gt::chain();
  UniversePtr u = chain.universe();
  IndependenceOracle oracle = dsep_oracle(chain);
  VarSet predecessors = u->vars({"a", "b"});
  int c = u->index("c");

  // The exhaustive enumeration confirms {b} is the unique minimal
  // boundary before asserting the greedy result.
  std::vector<VarSet> minimal = minimal_boundaries_by_enumeration(oracle, predecessors, c);
  REQUIRE(minimal.size() == 1);
  CHECK(minimal[0] == u->var("b"));
  CHECK(minimal_boundary(oracle, predecessors, c) == u->var("b"));
}

TEST_CASE("minimal boundary over the collider oracle keeps both parents") {
  Dag coll = gt::collider();
  UniversePtr u = coll.universe();
  IndependenceOracle oracle = dsep_oracle(coll);
  VarSet predecessors = u->vars({"a", "b"});
  int c = u->index("c");

  std::vector<VarSet> minimal = minimal_boundaries_by_enumeration(oracle, predecessors, c);
  REQUIRE(minimal.size() == 1);
  CHECK(minimal[0] == predecessors);
  CHECK(minimal_boundary(oracle, predecessors, c) == predecessors);
}

TEST_CASE("minimal boundary of no predecessors is empty") {
  IndependenceOracle oracle = dsep_oracle(gt::chain());
  CHECK(minimal_boundary(oracle, VarSet(), 0).empty());
}

TEST_CASE("greedy minimal boundaries are inclusion-minimal") {
  Rng rng(13);
  for (int i = 0; i < 40; ++i) {
    UniversePtr u = test_universe(rng.range(2, 5));
    Dag g = random_dag(rng, u);
    IndependenceOracle oracle = model_oracle(dsep_model(g));
    std::vector<int> order = rng.permutation(u->size());
    VarSet before;
    for (int v : order) {
      VarSet b = minimal_boundary(oracle, before, v);
      VarSet remainder = before - b;
      if (!remainder.empty()) {
        CHECK(oracle.affirms(Triplet(u, VarSet::single(v), b, remainder)));
      }
      // Removing any single member must break the affirmation.
      for (int dropped : b) {
        VarSet smaller = b.without(dropped);
        CHECK(!oracle.affirms(Triplet(u, VarSet::single(v), smaller, before - smaller)));
      }
      before |= VarSet::single(v);
    }
  }
}

TEST_CASE("witness protocol for a chain separation") {
  Dag chain = gt::chain();
  UniversePtr u = chain.universe();
  auto w = witness_protocol(dsep_oracle(chain), gt::tr(u, "a | b | c"));
  REQUIRE(w.has_value());
  CHECK(validate(*w).empty());
  CHECK(dsep(compile(*w), gt::tr(u, "a | b | c")));
}

TEST_CASE("witness protocol from an explicit closure") {
  UniversePtr u = Universe::create({"x", "z", "y", "w"});
  DependencyModel m(u);
  m.insert(gt::tr(u, "x | z | y,w"));
  IndependenceOracle oracle = closure_oracle(m, ClosureMode::semigraphoid);
  Triplet target = gt::tr(u, "x | z | y");
  auto w = witness_protocol(oracle, target);
  REQUIRE(w.has_value());
  CHECK(dsep(compile(*w), target));
}

TEST_CASE("witness protocol refuses unaffirmed targets") {
  UniversePtr u = Universe::create({"x", "z", "y", "w"});
  IndependenceOracle oracle = model_oracle(DependencyModel(u));
  CHECK(!witness_protocol(oracle, gt::tr(u, "x | z | y")).has_value());
}

TEST_CASE("every affirmed triplet has a working witness") {
  CheckOutcome o = check_theorem3(4, 25, 2024);
  CHECK(o.failures == 0);
}

TEST_CASE("minimal-boundary DAGs are I-maps under any ordering") {
  CheckOutcome o = check_theorem2(4, 25, 2024);
  CHECK(o.failures == 0);
}

TEST_CASE("predecessors_of walks the order") {
  StratifiedProtocol p = chain_protocol();
  CHECK(p.predecessors_of(2) == p.universe->vars({"a", "b"}));
  CHECK(p.predecessors_of(0).empty());
}
