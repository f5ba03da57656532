#include <doctest.h>

#include <vector>

#include "helpers.hpp"

using namespace graphoid;

namespace {

// Test-side brute-force separation: enumerates every simple path
// between x and y and re-checks the whole path each time. Kept
// independent of the library's search so the two can cross-validate.
// `noncollider_block` is z for plain d-separation and the determination
// closure for ID-separation; head-to-head nodes always use z itself.
bool brute_path_ok(const Dag& g, const std::vector<int>& path, VarSet z,
                   VarSet noncollider_block) {
  for (size_t i = 1; i + 1 < path.size(); ++i) {
    int w = path[i];
    bool h2h = g.has_edge(path[i - 1], w) && g.has_edge(path[i + 1], w);
    if (h2h) {
      if (!z.contains(w) && !g.descendants(w).intersects(z)) return false;
    } else {
      if (noncollider_block.contains(w)) return false;
    }
  }
  return true;
}

bool brute_active_exists(const Dag& g, const Triplet& q, VarSet noncollider_block,
                         std::vector<int>& path, VarSet on_path) {
  int v = path.back();
  if (q.y().contains(v) && path.size() >= 2 &&
      brute_path_ok(g, path, q.z(), noncollider_block)) {
    return true;
  }
  for (int w : (g.parents(v) | g.children(v)) - on_path) {
    path.push_back(w);
    if (brute_active_exists(g, q, noncollider_block, path, on_path | VarSet::single(w))) {
      return true;
    }
    path.pop_back();
  }
  return false;
}

bool brute_dsep(const Dag& g, const Triplet& q) {
  for (int s : q.x()) {
    std::vector<int> path{s};
    if (brute_active_exists(g, q, q.z(), path, VarSet::single(s))) return false;
  }
  return true;
}

bool brute_idsep(const Dag& g, const Triplet& q) {
  VarSet block = determination_closure(g, q.z());
  for (int s : q.x()) {
    std::vector<int> path{s};
    if (brute_active_exists(g, q, block, path, VarSet::single(s))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("path activity on the fixtures") {
  Dag chain = gt::chain();
  UniversePtr u = chain.universe();
  CHECK(!path_active(chain, {{0, 1, 2}}, u->var("b")));  // blocked chain node
  CHECK(path_active(chain, {{0, 1, 2}}, VarSet()));

  Dag coll = gt::collider();
  CHECK(!path_active(coll, {{0, 2, 1}}, VarSet()));       // head-to-head, nothing observed
  CHECK(path_active(coll, {{0, 2, 1}}, u->var("c")));     // observed collider

  Dag cp = gt::collider_plus();
  CHECK(path_active(cp, {{0, 2, 1}}, cp.universe()->var("d")));  // descendant observed
}

TEST_CASE("path validation") {
  Dag chain = gt::chain();
  UniversePtr u = chain.universe();
  CHECK_THROWS_AS(path_active(chain, {{0, 1, 2}}, u->var("a")), ValidationError);  // endpoint in z
  CHECK_THROWS_AS(path_active(chain, {{0, 2}}, VarSet()), ValidationError);  // not adjacent
  CHECK_THROWS_AS(path_active(chain, {{0, 1, 0}}, VarSet()), ValidationError);  // repeated node
  CHECK_THROWS_AS(path_active(chain, {{0}}, VarSet()), ValidationError);
}

TEST_CASE("single edges are always active") {
  Dag chain = gt::chain();
  CHECK(path_active(chain, {{0, 1}}, VarSet()));
  CHECK(path_active(chain, {{1, 0}}, chain.universe()->var("c")));
}

TEST_CASE("naive d-separation on the collider family") {
  Dag coll = gt::collider();
  UniversePtr u = coll.universe();
  CHECK(dsep_naive(coll, gt::tr(u, "a | - | b")));
  CHECK(!dsep_naive(coll, gt::tr(u, "a | c | b")));

  Dag cp = gt::collider_plus();
  CHECK(!dsep_naive(cp, gt::tr(cp.universe(), "a | d | b")));
}

TEST_CASE("naive d-separation guards the graph size") {
  Rng rng(5);
  Dag big = random_dag(rng, test_universe(11));
  CHECK_THROWS_AS(dsep_naive(big, random_query(rng, big.universe())), LimitError);
  CHECK_NOTHROW(dsep_naive(big, random_query(rng, big.universe()), 11));
}

TEST_CASE("fast d-separation on the fixtures") {
  Dag chain = gt::chain();
  UniversePtr u = chain.universe();
  CHECK(dsep(chain, gt::tr(u, "a | b | c")));
  CHECK(!dsep(chain, gt::tr(u, "a | - | c")));
  CHECK(!dsep(gt::collider(), gt::tr(u, "a | c | b")));
  CHECK(dsep(gt::collider(), gt::tr(u, "a | - | b")));
}

TEST_CASE("dsep, dsep_naive, and the brute checker agree") {
  Rng rng(1234);
  for (int i = 0; i < 120; ++i) {
    UniversePtr u = test_universe(rng.range(2, 7));
    Dag g = random_dag(rng, u, rng.range(20, 80));
    for (int k = 0; k < 25; ++k) {
      Triplet q = random_query(rng, u);
      bool expected = brute_dsep(g, q);
      CHECK(dsep(g, q) == expected);
      CHECK(dsep_naive(g, q) == expected);
    }
  }
}

TEST_CASE("dsep_model on the fixtures") {
  Dag chain = gt::chain();
  UniversePtr u = chain.universe();
  DependencyModel m = dsep_model(chain);
  CHECK(m.size() == 1);
  CHECK(m.contains(gt::tr(u, "a | b | c")));
  for (const Triplet& t : m.triplets()) CHECK(!t.z().empty());

  DependencyModel coll = dsep_model(gt::collider());
  CHECK(coll.size() == 1);
  CHECK(coll.contains(gt::tr(u, "a | - | b")));

  UniversePtr u2 = Universe::create({"a", "b"});
  Dag edgeless = Dag::create(u2, {VarSet(), VarSet()});
  DependencyModel m2 = dsep_model(edgeless);
  CHECK(m2.size() == 1);
  CHECK(m2.contains(gt::tr(u2, "a | - | b")));
}

TEST_CASE("dsep_model guards the universe size") {
  Rng rng(5);
  Dag big = random_dag(rng, test_universe(8));
  CHECK_THROWS_AS(dsep_model(big), LimitError);
  CHECK_NOTHROW(dsep_model(big, 8));
}

TEST_CASE("determination closure on the deterministic fork") {
  Dag g = gt::detfork();
  UniversePtr u = g.universe();
  CHECK(determination_closure(g, u->var("w")) == u->vars({"w", "d"}));
  CHECK(determination_closure(g, VarSet()).empty());

  Dag plain = gt::chain();
  VarSet z = plain.universe()->var("b");
  CHECK(determination_closure(plain, z) == z);
}

TEST_CASE("parentless deterministic nodes are determined by anything") {
  UniversePtr u = Universe::create({"k", "x"});
  Dag g = Dag::create(u, {VarSet(), u->var("k")}, u->var("k"));
  CHECK(determination_closure(g, VarSet()) == u->var("k"));
}

TEST_CASE("determination closure is monotone") {
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    UniversePtr u = test_universe(rng.range(2, 6));
    Dag g = random_det_dag(rng, u);
    VarSet z2 = rng.subset_of(u->full_set());
    VarSet z1 = rng.subset_of(z2);
    CHECK(determination_closure(g, z2).contains_all(determination_closure(g, z1)));
  }
}

TEST_CASE("idsep sees through determined forks") {
  Dag g = gt::detfork();
  UniversePtr u = g.universe();
  CHECK(idsep(g, gt::tr(u, "x | w | y")));
  CHECK(!dsep(g, gt::tr(u, "x | w | y")));
  CHECK(!idsep(g, gt::tr(u, "x | - | y")));
}

TEST_CASE("idsep equals dsep without deterministic nodes") {
  Rng rng(77);
  for (int i = 0; i < 40; ++i) {
    UniversePtr u = test_universe(rng.range(2, 6));
    Dag g = random_dag(rng, u);
    for_each_canonical_triplet(u, [&](const Triplet& q) { CHECK(idsep(g, q) == dsep(g, q)); });
  }
}

TEST_CASE("idsep agrees with brute-force path enumeration") {
  Rng rng(555);
  for (int i = 0; i < 120; ++i) {
    UniversePtr u = test_universe(rng.range(2, 6));
    Dag g = random_det_dag(rng, u, rng.range(20, 80), 40);
    for (int k = 0; k < 25; ++k) {
      Triplet q = random_query(rng, u);
      CHECK(idsep(g, q) == brute_idsep(g, q));
    }
  }
}

TEST_CASE("undirected separation on a path graph") {
  UniversePtr u = gt::abc();
  UndirectedGraph g = UndirectedGraph::create(u, {{0, 1}, {1, 2}});
  CHECK(usep(g, gt::tr(u, "a | b | c")));
  CHECK(!usep(g, gt::tr(u, "a | - | c")));

  UndirectedGraph edgeless = UndirectedGraph::create(u, {});
  CHECK(usep(edgeless, gt::tr(u, "a | - | c")));
  CHECK(usep(edgeless, gt::tr(u, "a | b | c")));
}

TEST_CASE("minimal undirected I-map of the chain oracle") {
  Dag chain = gt::chain();
  UndirectedGraph imap = undirected_minimal_imap(dsep_oracle(chain));
  CHECK(imap.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("minimal undirected I-map degenerate oracles") {
  UniversePtr u = gt::abc();
  IndependenceOracle everything(u, [](const Triplet&) { return true; }, "full independence");
  CHECK(undirected_minimal_imap(everything).edge_count() == 0);

  IndependenceOracle nothing = model_oracle(DependencyModel(u));
  CHECK(undirected_minimal_imap(nothing).edge_count() == 3);  // complete graph on 3 nodes
}

TEST_CASE("is_imap reports the first counterexample") {
  Dag chain = gt::chain();
  UniversePtr u = chain.universe();

  // The identity construction is an I-map of itself.
  Dag rebuilt = compile(extract(chain));
  CHECK(!is_imap(dsep_model(rebuilt), dsep_oracle(chain)).has_value());

  DependencyModel candidate(u);
  candidate.insert(gt::tr(u, "a | - | b"));
  std::optional<Triplet> bad = is_imap(candidate, model_oracle(DependencyModel(u)));
  REQUIRE(bad.has_value());
  CHECK(*bad == gt::tr(u, "a | - | b"));

  CHECK(!is_imap(DependencyModel(u), model_oracle(DependencyModel(u))).has_value());
}

TEST_CASE("d-separation models are closed under the semigraphoid axioms") {
  CheckOutcome o = check_dsep_closure(5, 40, 2024);
  CHECK(o.failures == 0);
}

TEST_CASE("undirected separation models satisfy their axioms") {
  CheckOutcome o = check_usep_axioms(5, 40, 2024);
  CHECK(o.failures == 0);
}

TEST_CASE("protocol DAGs are perfect maps of their triplet closure") {
  CheckOutcome o = check_corollary1(5, 60, 2024);
  CHECK(o.failures == 0);
}

TEST_CASE("queries over the wrong universe are rejected") {
  Dag chain = gt::chain();
  UniversePtr other = Universe::create({"p", "q"});
  CHECK_THROWS_AS(dsep(chain, gt::tr(other, "p | - | q")), ValidationError);
  UndirectedGraph g = UndirectedGraph::create(gt::abc(), {});
  CHECK_THROWS_AS(usep(g, gt::tr(other, "p | - | q")), ValidationError);
}
