#include "graphoid/separation.hpp"

#include <algorithm>
#include <string>

namespace graphoid {

namespace {

void require_query(const Dag& g, const SeparationQuery& q) {
  if (!same_universe(g.universe(), q.universe())) {
    throw ValidationError("query universe does not match the graph's");
  }
}

// Nodes that are in z or have a descendant in z (the head-to-head
// activation set).
VarSet z_or_ancestor_of_z(const Dag& g, VarSet z) {
  VarSet result = z;
  for (int v = 0; v < g.node_count(); ++v) {
    if (g.descendants(v).intersects(z)) result |= VarSet::single(v);
  }
  return result;
}

}  // namespace

bool path_active(const Dag& g, const AdjacencyPath& p, VarSet z) {
  const auto& nodes = p.nodes;
  if (nodes.size() < 2) throw ValidationError("adjacency path needs at least two nodes");
  VarSet seen;
  for (size_t i = 0; i < nodes.size(); ++i) {
    int v = nodes[i];
    if (v < 0 || v >= g.node_count()) throw ValidationError("path node index out of range");
    if (seen.contains(v)) {
      throw ValidationError("path repeats node '" + g.universe()->name(v) + "'");
    }
    seen |= VarSet::single(v);
    if (i > 0 && !g.has_edge(nodes[i - 1], v) && !g.has_edge(v, nodes[i - 1])) {
      throw ValidationError("path nodes '" + g.universe()->name(nodes[i - 1]) + "' and '" +
                            g.universe()->name(v) + "' are not adjacent");
    }
  }
  if (z.contains(nodes.front()) || z.contains(nodes.back())) {
    throw ValidationError("path endpoint lies in z; query is ill-posed");
  }

  for (size_t i = 1; i + 1 < nodes.size(); ++i) {
    int w = nodes[i];
    bool head_to_head = g.has_edge(nodes[i - 1], w) && g.has_edge(nodes[i + 1], w);
    if (head_to_head) {
      if (!z.contains(w) && !g.descendants(w).intersects(z)) return false;
    } else {
      if (z.contains(w)) return false;
    }
  }
  return true;
}

namespace {

// DFS over simple paths starting in x. A path is reported whenever it
// reaches a node of y and extended through every node regardless, so
// paths with interior x- or y-members are enumerated too.
// Interior activity is checked incrementally; `blocked` counts interior
// nodes that violate their condition, so a completed path is active iff
// blocked == 0.
struct NaiveSearch {
  const Dag& g;
  VarSet x, y, z, zplus;
  std::vector<int> path;
  bool found_active = false;

  void run() {
    for (int s : x) {
      path = {s};
      extend(VarSet::single(s), 0);
      if (found_active) return;
    }
  }

  // `blocked`: number of interior nodes of `path` violating their
  // condition given z.
  void extend(VarSet on_path, int blocked) {
    if (found_active) return;
    int v = path.back();
    VarSet neighbors = (g.parents(v) | g.children(v)) - on_path;
    for (int w : neighbors) {
      path.push_back(w);
      int add = 0;
      if (path.size() >= 3) {
        // The previous node just became interior; settle its condition.
        int mid = path[path.size() - 2];
        int prev = path[path.size() - 3];
        bool h2h = g.has_edge(prev, mid) && g.has_edge(w, mid);
        bool ok = h2h ? zplus.contains(mid) : !z.contains(mid);
        if (!ok) add = 1;
      }
      if (y.contains(w) && blocked + add == 0) {
        found_active = true;
        path.pop_back();
        return;
      }
      extend(on_path | VarSet::single(w), blocked + add);
      path.pop_back();
      if (found_active) return;
    }
  }
};

}  // namespace

bool dsep_naive(const Dag& g, const SeparationQuery& q, int limit) {
  require_query(g, q);
  if (g.node_count() > limit) {
    throw LimitError("path enumeration is limited to graphs of at most " + std::to_string(limit) +
                     " nodes (graph has " + std::to_string(g.node_count()) +
                     "); raise the limit to override");
  }
  NaiveSearch search{g, q.x(), q.y(), q.z(), z_or_ancestor_of_z(g, q.z()), {}, false};
  search.run();
  return !search.found_active;
}

namespace {

// Shared reachability core for dsep and idsep. An active walk is grown
// state-by-state; states are (node, arrival end of the entering edge).
// `noncollider_block`: interior non-head-to-head nodes in this set stop
// the walk. `collider_pass`: interior head-to-head nodes must be in this
// set to continue. Arrival "head" means the entering edge points at the
// node; "tail" means it leaves it.
bool separated_by_reachability(const Dag& g, const SeparationQuery& q, VarSet noncollider_block,
                               VarSet collider_pass) {
  const int n = g.node_count();
  std::vector<bool> reached_head(n, false), reached_tail(n, false);
  std::vector<std::pair<int, bool>> queue;  // (node, arrived_at_head)

  auto push = [&](int v, bool at_head) {
    auto& mark = at_head ? reached_head : reached_tail;
    if (mark[v]) return;
    mark[v] = true;
    queue.emplace_back(v, at_head);
  };

  // Endpoints are unconstrained: leave every x-node along any edge.
  for (int s : q.x()) {
    for (int c : g.children(s)) push(c, true);
    for (int p : g.parents(s)) push(p, false);
  }

  while (!queue.empty()) {
    auto [v, at_head] = queue.back();
    queue.pop_back();
    if (q.y().contains(v)) return false;

    // Depart via an outgoing edge: v is a non-collider on this step.
    if (!noncollider_block.contains(v)) {
      for (int c : g.children(v)) push(c, true);
    }
    // Depart against an incoming edge: v is a collider iff we arrived
    // at its head.
    bool may_turn = at_head ? collider_pass.contains(v) : !noncollider_block.contains(v);
    if (may_turn) {
      for (int p : g.parents(v)) push(p, false);
    }
  }
  return true;
}

}  // namespace

bool dsep(const Dag& g, const SeparationQuery& q) {
  require_query(g, q);
  return separated_by_reachability(g, q, q.z(), z_or_ancestor_of_z(g, q.z()));
}

VarSet determination_closure(const Dag& g, VarSet z) {
  if (!g.universe()->full_set().contains_all(z)) {
    throw ValidationError("z mentions variables outside the graph's universe");
  }
  VarSet determined = z;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int v : g.deterministic() - determined) {
      if (determined.contains_all(g.parents(v))) {
        determined |= VarSet::single(v);
        grew = true;
      }
    }
  }
  return determined;
}

bool idsep(const Dag& g, const SeparationQuery& q) {
  require_query(g, q);
  return separated_by_reachability(g, q, determination_closure(g, q.z()),
                                   z_or_ancestor_of_z(g, q.z()));
}

bool usep(const UndirectedGraph& u, const SeparationQuery& q) {
  if (!same_universe(u.universe(), q.universe())) {
    throw ValidationError("query universe does not match the graph's");
  }
  // Reachability from x with z removed.
  VarSet frontier = q.x();
  VarSet visited = frontier;
  while (!frontier.empty()) {
    VarSet next;
    for (int v : frontier) next |= u.neighbors(v);
    next -= visited;
    next -= q.z();
    if (next.intersects(q.y())) return false;
    visited |= next;
    frontier = next;
  }
  return true;
}

void for_each_canonical_triplet(const UniversePtr& u,
                                const std::function<void(const Triplet&)>& fn) {
  const int n = u->size();
  // Each variable takes one of four roles; the counter's low digit is
  // variable 0. Roles: 0 = out, 1 = x, 2 = z, 3 = y.
  std::vector<int> role(n, 0);
  while (true) {
    VarSet x, z, y;
    for (int v = 0; v < n; ++v) {
      switch (role[v]) {
        case 1: x |= VarSet::single(v); break;
        case 2: z |= VarSet::single(v); break;
        case 3: y |= VarSet::single(v); break;
        default: break;
      }
    }
    if (!x.empty() && !y.empty() && x.bits() <= y.bits()) fn(Triplet(u, x, z, y));

    int pos = 0;
    while (pos < n && role[pos] == 3) role[pos++] = 0;
    if (pos == n) return;
    ++role[pos];
  }
}

namespace {

DependencyModel enumerate_model(const UniversePtr& u, int limit, const char* what,
                                const std::function<bool(const Triplet&)>& affirmed) {
  if (u->size() > limit) {
    throw LimitError(std::string(what) + " enumeration is limited to universes of at most " +
                     std::to_string(limit) + " variables (universe has " +
                     std::to_string(u->size()) + "); raise the limit to override");
  }
  DependencyModel m(u);
  for_each_canonical_triplet(u, [&](const Triplet& t) {
    if (affirmed(t)) m.insert(t);
  });
  return m;
}

}  // namespace

DependencyModel dsep_model(const Dag& g, int limit) {
  return enumerate_model(g.universe(), limit, "d-separation model",
                         [&](const Triplet& t) { return dsep(g, t); });
}

DependencyModel usep_model(const UndirectedGraph& u, int limit) {
  return enumerate_model(u.universe(), limit, "separation model",
                         [&](const Triplet& t) { return usep(u, t); });
}

UndirectedGraph undirected_minimal_imap(const IndependenceOracle& oracle) {
  const UniversePtr& u = oracle.universe();
  const int n = u->size();
  std::vector<std::pair<int, int>> edges;
  VarSet full = u->full_set();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      VarSet rest = full - VarSet::single(a) - VarSet::single(b);
      Triplet query(u, VarSet::single(a), rest, VarSet::single(b));
      if (!oracle.affirms(query)) edges.emplace_back(a, b);
    }
  }
  return UndirectedGraph::create(u, edges);
}

std::optional<Triplet> is_imap(const DependencyModel& candidate, const IndependenceOracle& m) {
  if (!same_universe(candidate.universe(), m.universe())) {
    throw ValidationError("candidate universe does not match the oracle's");
  }
  for (const Triplet& t : candidate.triplets()) {
    if (!m.affirms(t)) return t;
  }
  return std::nullopt;
}

IndependenceOracle dsep_oracle(const Dag& g) {
  auto shared = std::make_shared<const Dag>(g);
  return IndependenceOracle(
      g.universe(), [shared](const Triplet& t) { return dsep(*shared, t); }, "d-separation");
}

IndependenceOracle usep_oracle(const UndirectedGraph& u) {
  auto shared = std::make_shared<const UndirectedGraph>(u);
  return IndependenceOracle(
      u.universe(), [shared](const Triplet& t) { return usep(*shared, t); },
      "undirected separation");
}

}  // namespace graphoid
