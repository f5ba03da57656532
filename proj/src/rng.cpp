#include "graphoid/rng.hpp"

#include <string>

#include "graphoid/errors.hpp"

namespace graphoid {

UniversePtr test_universe(int n) {
  if (n < 0 || n > 26) throw ValidationError("test universes use single letters (n <= 26)");
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return Universe::create(std::move(names));
}

Dag random_dag(Rng& rng, const UniversePtr& u, int edge_percent) {
  const int n = u->size();
  std::vector<int> order = rng.permutation(n);
  std::vector<VarSet> parents(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.below(100) < static_cast<std::uint64_t>(edge_percent)) {
        parents[order[j]] |= VarSet::single(order[i]);
      }
    }
  }
  return Dag::create(u, std::move(parents));
}

Dag random_det_dag(Rng& rng, const UniversePtr& u, int edge_percent, int det_percent) {
  Dag g = random_dag(rng, u, edge_percent);
  VarSet det = rng.subset_of(u->full_set(), det_percent);
  return Dag::create(u, g.all_parents(), det);
}

UndirectedGraph random_undirected(Rng& rng, const UniversePtr& u, int edge_percent) {
  const int n = u->size();
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rng.below(100) < static_cast<std::uint64_t>(edge_percent)) edges.emplace_back(a, b);
    }
  }
  return UndirectedGraph::create(u, edges);
}

StratifiedProtocol random_protocol(Rng& rng, const UniversePtr& u) {
  StratifiedProtocol p;
  p.universe = u;
  p.order = rng.permutation(u->size());
  p.boundary.assign(u->size(), VarSet());
  VarSet before;
  for (int v : p.order) {
    p.boundary[v] = rng.subset_of(before);
    before |= VarSet::single(v);
  }
  return p;
}

Triplet random_query(Rng& rng, const UniversePtr& u) {
  if (u->size() < 2) throw ValidationError("random queries need at least two variables");
  while (true) {
    VarSet x, z, y;
    for (int v = 0; v < u->size(); ++v) {
      switch (rng.below(4)) {
        case 1: x |= VarSet::single(v); break;
        case 2: z |= VarSet::single(v); break;
        case 3: y |= VarSet::single(v); break;
        default: break;
      }
    }
    if (!x.empty() && !y.empty()) return Triplet(u, x, z, y);
  }
}

}  // namespace graphoid
