#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphoid/graph.hpp"
#include "graphoid/oracle.hpp"
#include "graphoid/triplet.hpp"

namespace graphoid {

// A stratified protocol (causal input list): a total order over the
// universe plus a tail-boundary set per variable. `boundary` is indexed
// by variable index, not by position. Instances may hold invalid data
// until checked by validate(); compile() requires validity.
struct StratifiedProtocol {
  UniversePtr universe;
  std::vector<int> order;
  std::vector<VarSet> boundary;

  // Variables strictly before v in the order. Throws LookupError when v
  // is not in the order.
  VarSet predecessors_of(int v) const;
};

// Every defect in p, one message per violation; empty means ok.
std::vector<std::string> validate(const StratifiedProtocol& p);

// The DAG whose parent sets are p's boundaries. Throws ValidationError
// carrying the violation list when p is invalid.
Dag compile(const StratifiedProtocol& p);

// One triplet ({n}, B(n), R) per variable in order, where R is the set
// of predecessors outside the boundary; variables with empty R
// contribute nothing.
std::vector<Triplet> protocol_triplets(const StratifiedProtocol& p);

// The protocol (topological order, parent sets) that regenerates g:
// compile(extract(g)) has exactly g's edges.
StratifiedProtocol extract(const Dag& g);

// Inclusion-minimal B within `predecessors` such that the oracle
// affirms ({v}, B, predecessors \ B). Greedy deletion in ascending
// index order, rescanning after each removal. The full predecessor set
// is always acceptable (its remainder is empty).
VarSet minimal_boundary(const IndependenceOracle& oracle, VarSet predecessors, int v);

// The ordering that forces t into an I-map: y|z variables first, then
// x, then the rest, with minimal boundaries throughout. Returns nullopt
// when the oracle does not affirm t. The compiled DAG is verified to
// d-separate t before returning.
std::optional<StratifiedProtocol> witness_protocol(const IndependenceOracle& oracle,
                                                   const Triplet& t);

}  // namespace graphoid
