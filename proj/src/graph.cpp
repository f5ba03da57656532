#include "graphoid/graph.hpp"

#include <algorithm>
#include <string>

namespace graphoid {

namespace {

// Finds one directed cycle in a children-adjacency graph, as a node
// sequence in traversal order. Deterministic: starts from the lowest
// index, explores neighbors ascending.
std::vector<int> find_cycle(const std::vector<VarSet>& children) {
  const int n = static_cast<int>(children.size());
  enum { White, Grey, Black };
  std::vector<int> color(n, White);
  std::vector<int> stack;

  // Iterative DFS; returns the cycle once a grey node is re-entered.
  std::vector<int> result;
  auto dfs = [&](int root) {
    struct Frame {
      int node;
      VarSet::iterator next;
      VarSet::iterator end;
    };
    std::vector<Frame> frames;
    frames.push_back({root, children[root].begin(), children[root].end()});
    color[root] = Grey;
    stack.push_back(root);
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (!(f.next != f.end)) {
        color[f.node] = Black;
        stack.pop_back();
        frames.pop_back();
        continue;
      }
      int w = *f.next;
      ++f.next;
      if (color[w] == Grey) {
        auto it = std::find(stack.begin(), stack.end(), w);
        result.assign(it, stack.end());
        return true;
      }
      if (color[w] == White) {
        color[w] = Grey;
        stack.push_back(w);
        frames.push_back({w, children[w].begin(), children[w].end()});
      }
    }
    return false;
  };

  for (int v = 0; v < n; ++v) {
    if (color[v] == White && dfs(v)) return result;
  }
  return {};
}

}  // namespace

Dag Dag::create(UniversePtr universe, std::vector<VarSet> parents, VarSet deterministic) {
  if (!universe) throw ValidationError("dag requires a universe");
  const int n = universe->size();
  if (static_cast<int>(parents.size()) != n) {
    throw ValidationError("parent list size does not match universe size");
  }
  VarSet full = universe->full_set();
  for (int v = 0; v < n; ++v) {
    if (!full.contains_all(parents[v])) {
      throw ValidationError("parents of '" + universe->name(v) + "' mention unknown variables");
    }
    if (parents[v].contains(v)) {
      throw ValidationError("'" + universe->name(v) + "' cannot be its own parent");
    }
  }
  if (!full.contains_all(deterministic)) {
    throw ValidationError("deterministic set mentions unknown variables");
  }
  return Dag(std::move(universe), std::move(parents), deterministic);
}

Dag::Dag(UniversePtr universe, std::vector<VarSet> parents, VarSet deterministic)
    : universe_(std::move(universe)),
      parents_(std::move(parents)),
      deterministic_(deterministic) {
  const int n = universe_->size();
  children_.assign(n, VarSet());
  for (int v = 0; v < n; ++v) {
    for (int p : parents_[v]) children_[p] |= VarSet::single(v);
  }

  // Kahn's algorithm, always removing the lowest available index.
  std::vector<int> indegree(n);
  for (int v = 0; v < n; ++v) indegree[v] = parents_[v].size();
  VarSet ready;
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready |= VarSet::single(v);
  }
  topo_.reserve(n);
  while (!ready.empty()) {
    int v = ready.lowest();
    ready = ready.without(v);
    topo_.push_back(v);
    for (int c : children_[v]) {
      if (--indegree[c] == 0) ready |= VarSet::single(c);
    }
  }
  if (static_cast<int>(topo_.size()) != n) {
    std::vector<int> cycle = find_cycle(children_);
    std::vector<std::string> names;
    std::string joined;
    for (int v : cycle) {
      if (!joined.empty()) joined += " -> ";
      joined += universe_->name(v);
      names.push_back(universe_->name(v));
    }
    throw CycleError("graph is not acyclic; cycle: " + joined, std::move(names));
  }

  // Descendant masks, accumulated in reverse topological order.
  descendants_.assign(n, VarSet());
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    VarSet d;
    for (int c : children_[*it]) d |= VarSet::single(c) | descendants_[c];
    descendants_[*it] = d;
  }
}

int Dag::edge_count() const {
  int total = 0;
  for (const VarSet& p : parents_) total += p.size();
  return total;
}

VarSet Dag::ancestors(int v) const {
  VarSet result;
  for (int u = 0; u < node_count(); ++u) {
    if (descendants_[u].contains(v)) result |= VarSet::single(u);
  }
  return result;
}

UndirectedGraph UndirectedGraph::create(UniversePtr universe,
                                        const std::vector<std::pair<int, int>>& edges) {
  if (!universe) throw ValidationError("graph requires a universe");
  const int n = universe->size();
  std::vector<VarSet> adjacency(n);
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw ValidationError("edge endpoint index out of range");
    }
    if (a == b) {
      throw ValidationError("self-loop on '" + universe->name(a) + "' is not allowed");
    }
    adjacency[a] |= VarSet::single(b);
    adjacency[b] |= VarSet::single(a);
  }
  return UndirectedGraph(std::move(universe), std::move(adjacency));
}

int UndirectedGraph::edge_count() const {
  int twice = 0;
  for (const VarSet& a : adjacency_) twice += a.size();
  return twice / 2;
}

std::vector<std::pair<int, int>> UndirectedGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < node_count(); ++a) {
    for (int b : adjacency_[a]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

UndirectedGraph UndirectedGraph::without_edge(int a, int b) const {
  if (!has_edge(a, b)) {
    throw LookupError("no edge between '" + universe_->name(a) + "' and '" + universe_->name(b) +
                      "'");
  }
  std::vector<VarSet> adjacency = adjacency_;
  adjacency[a] = adjacency[a].without(b);
  adjacency[b] = adjacency[b].without(a);
  return UndirectedGraph(universe_, std::move(adjacency));
}

}  // namespace graphoid
