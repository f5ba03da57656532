#pragma once

#include <utility>
#include <vector>

#include "graphoid/errors.hpp"
#include "graphoid/universe.hpp"
#include "graphoid/varset.hpp"

namespace graphoid {

// Directed acyclic graph over a universe, stored as one parent set per
// node, plus an optional deterministic marker per node. Acyclicity is
// established at construction; instances are immutable afterwards.
class Dag {
 public:
  // Throws CycleError (with one witness cycle) when the parent relation
  // is cyclic, ValidationError on malformed input.
  static Dag create(UniversePtr universe, std::vector<VarSet> parents,
                    VarSet deterministic = VarSet());

  const UniversePtr& universe() const { return universe_; }
  int node_count() const { return universe_->size(); }

  VarSet parents(int v) const { return parents_.at(v); }
  VarSet children(int v) const { return children_.at(v); }
  const std::vector<VarSet>& all_parents() const { return parents_; }
  bool has_edge(int parent, int child) const { return parents_.at(child).contains(parent); }
  int edge_count() const;

  VarSet deterministic() const { return deterministic_; }
  bool is_deterministic(int v) const { return deterministic_.contains(v); }

  // Nodes reachable from v by directed paths of length >= 1.
  VarSet descendants(int v) const { return descendants_.at(v); }
  // Nodes with a directed path of length >= 1 to v.
  VarSet ancestors(int v) const;

  // Parent-before-child order, ties broken by ascending index.
  const std::vector<int>& topological_order() const { return topo_; }

  bool same_edges(const Dag& other) const {
    return *universe_ == *other.universe_ && parents_ == other.parents_;
  }
  friend bool operator==(const Dag& a, const Dag& b) {
    return a.same_edges(b) && a.deterministic_ == b.deterministic_;
  }

 private:
  Dag(UniversePtr universe, std::vector<VarSet> parents, VarSet deterministic);

  UniversePtr universe_;
  std::vector<VarSet> parents_;
  std::vector<VarSet> children_;
  std::vector<VarSet> descendants_;
  std::vector<int> topo_;
  VarSet deterministic_;
};

// Free-function spellings for the shared graph primitives.
inline VarSet descendants(const Dag& g, int v) { return g.descendants(v); }
inline const std::vector<int>& topological_order(const Dag& g) { return g.topological_order(); }

// Simple undirected graph over a universe; adjacency stored as one
// VarSet per node. No self-loops.
class UndirectedGraph {
 public:
  static UndirectedGraph create(UniversePtr universe,
                                const std::vector<std::pair<int, int>>& edges);

  const UniversePtr& universe() const { return universe_; }
  int node_count() const { return universe_->size(); }

  VarSet neighbors(int v) const { return adjacency_.at(v); }
  bool has_edge(int a, int b) const { return adjacency_.at(a).contains(b); }
  int edge_count() const;
  // Edges as (low index, high index) pairs, ascending.
  std::vector<std::pair<int, int>> edges() const;

  UndirectedGraph without_edge(int a, int b) const;

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return *a.universe_ == *b.universe_ && a.adjacency_ == b.adjacency_;
  }

 private:
  UndirectedGraph(UniversePtr universe, std::vector<VarSet> adjacency)
      : universe_(std::move(universe)), adjacency_(std::move(adjacency)) {}

  UniversePtr universe_;
  std::vector<VarSet> adjacency_;
};

}  // namespace graphoid
