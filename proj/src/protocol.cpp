#include "graphoid/protocol.hpp"

#include <algorithm>

#include "graphoid/separation.hpp"

namespace graphoid {

VarSet StratifiedProtocol::predecessors_of(int v) const {
  VarSet before;
  for (int u : order) {
    if (u == v) return before;
    before |= VarSet::single(u);
  }
  throw LookupError("variable '" + universe->name(v) + "' is not in the order");
}

std::vector<std::string> validate(const StratifiedProtocol& p) {
  std::vector<std::string> out;
  if (!p.universe) return {"protocol has no universe"};
  const int n = p.universe->size();

  VarSet seen;
  for (int v : p.order) {
    if (v < 0 || v >= n) {
      out.push_back("order index " + std::to_string(v) + " out of range");
      continue;
    }
    if (seen.contains(v)) {
      out.push_back("duplicate " + p.universe->name(v));
    }
    seen |= VarSet::single(v);
  }
  for (int v = 0; v < n; ++v) {
    if (!seen.contains(v)) out.push_back("missing " + p.universe->name(v));
  }
  if (static_cast<int>(p.boundary.size()) != n) {
    out.push_back("boundary list size " + std::to_string(p.boundary.size()) +
                  " does not match universe size " + std::to_string(n));
    return out;
  }

  VarSet full = p.universe->full_set();
  VarSet before;
  for (int v : p.order) {
    if (v < 0 || v >= n) continue;
    if (!full.contains_all(p.boundary[v])) {
      out.push_back("boundary of " + p.universe->name(v) + " mentions unknown variables");
    }
    for (int u : (p.boundary[v] & full) - before) {
      out.push_back(p.universe->name(u) + " does not precede " + p.universe->name(v));
    }
    before |= VarSet::single(v);
  }
  return out;
}

Dag compile(const StratifiedProtocol& p) {
  std::vector<std::string> violations = validate(p);
  if (!violations.empty()) {
    throw ValidationError("invalid protocol: " + violations.front() +
                              (violations.size() > 1
                                   ? " (+" + std::to_string(violations.size() - 1) + " more)"
                                   : ""),
                          violations);
  }
  return Dag::create(p.universe, p.boundary);
}

std::vector<Triplet> protocol_triplets(const StratifiedProtocol& p) {
  std::vector<std::string> violations = validate(p);
  if (!violations.empty()) {
    throw ValidationError("invalid protocol: " + violations.front(), violations);
  }
  std::vector<Triplet> out;
  VarSet before;
  for (int v : p.order) {
    VarSet remainder = before - p.boundary[v];
    if (!remainder.empty()) {
      out.push_back(Triplet(p.universe, VarSet::single(v), p.boundary[v], remainder));
    }
    before |= VarSet::single(v);
  }
  return out;
}

StratifiedProtocol extract(const Dag& g) {
  return StratifiedProtocol{g.universe(), g.topological_order(), g.all_parents()};
}

VarSet minimal_boundary(const IndependenceOracle& oracle, VarSet predecessors, int v) {
  if (predecessors.contains(v)) {
    throw ValidationError("variable cannot be among its own predecessors");
  }
  const UniversePtr& u = oracle.universe();
  VarSet boundary = predecessors;
  bool removed = true;
  while (removed) {
    removed = false;
    for (int candidate : boundary) {
      VarSet smaller = boundary.without(candidate);
      VarSet remainder = predecessors - smaller;  // nonempty: contains candidate
      if (oracle.affirms(Triplet(u, VarSet::single(v), smaller, remainder))) {
        boundary = smaller;
        removed = true;
        break;  // rescan from the lowest index
      }
    }
  }
  return boundary;
}

std::optional<StratifiedProtocol> witness_protocol(const IndependenceOracle& oracle,
                                                   const Triplet& t) {
  Triplet goal = t.canonical();
  if (!oracle.affirms(goal)) return std::nullopt;

  const UniversePtr& u = oracle.universe();
  StratifiedProtocol p;
  p.universe = u;
  for (int v : goal.y() | goal.z()) p.order.push_back(v);
  for (int v : goal.x()) p.order.push_back(v);
  for (int v : u->full_set() - goal.vars()) p.order.push_back(v);

  p.boundary.assign(u->size(), VarSet());
  VarSet before;
  for (int v : p.order) {
    p.boundary[v] = minimal_boundary(oracle, before, v);
    before |= VarSet::single(v);
  }

  // The construction is guaranteed for semi-graphoid oracles; verify
  // rather than assume.
  if (!dsep(compile(p), goal)) {
    throw Error("witness postcondition failed: the compiled DAG does not d-separate '" +
                goal.to_literal() + "' (is the oracle a semi-graphoid?)");
  }
  return p;
}

}  // namespace graphoid
