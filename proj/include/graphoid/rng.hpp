#pragma once

#include <cstdint>
#include <vector>

#include "graphoid/graph.hpp"
#include "graphoid/model.hpp"
#include "graphoid/protocol.hpp"
#include "graphoid/triplet.hpp"

namespace graphoid {

// Seeded splitmix64 generator. Self-contained so that seeded runs are
// reproducible across compilers and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound > 0. Modulo bias is irrelevant at the
  // bounds used here.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  int range(int lo, int hi) { return lo + static_cast<int>(below(hi - lo + 1)); }
  bool coin() { return next() & 1; }

  // Each member kept independently with probability percent/100.
  VarSet subset_of(VarSet s, int percent = 50) {
    VarSet out;
    for (int v : s) {
      if (below(100) < static_cast<std::uint64_t>(percent)) out |= VarSet::single(v);
    }
    return out;
  }

  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) {
      std::swap(p[i], p[static_cast<int>(below(i + 1))]);
    }
    return p;
  }

 private:
  std::uint64_t state_;
};

// Universe with single-letter names a.. (n <= 26).
UniversePtr test_universe(int n);

// Random DAG: hidden random order, each forward pair an edge with the
// given percentage.
Dag random_dag(Rng& rng, const UniversePtr& u, int edge_percent = 50);
// As above, plus each node independently deterministic.
Dag random_det_dag(Rng& rng, const UniversePtr& u, int edge_percent = 50, int det_percent = 30);

UndirectedGraph random_undirected(Rng& rng, const UniversePtr& u, int edge_percent = 50);

// Random order with a random subset of the predecessors as each
// boundary. Always valid.
StratifiedProtocol random_protocol(Rng& rng, const UniversePtr& u);

// Random disjoint x/z/y assignment with nonempty x and y (universe size
// >= 2 required).
Triplet random_query(Rng& rng, const UniversePtr& u);

}  // namespace graphoid
