#pragma once

#include <optional>
#include <vector>

#include "graphoid/graph.hpp"
#include "graphoid/model.hpp"
#include "graphoid/oracle.hpp"
#include "graphoid/triplet.hpp"

namespace graphoid {

// A path through a DAG that follows edges ignoring their direction.
// Nodes are distinct; each consecutive pair must be adjacent.
struct AdjacencyPath {
  std::vector<int> nodes;
};

// Exhaustive path enumeration is exponential; enumeration of all
// triplets is 4^n. Both guards are overridable per call.
inline constexpr int kDefaultPathEnumLimit = 10;
inline constexpr int kDefaultModelEnumLimit = 7;

// True iff the path transmits dependence given z: every interior
// head-to-head node is in z or has a descendant in z, and every other
// interior node is outside z. Single edges are always active. Throws
// ValidationError when an endpoint lies in z or the path is not a valid
// adjacency path of g.
bool path_active(const Dag& g, const AdjacencyPath& p, VarSet z);

// Definitional d-separation oracle: enumerates every simple adjacency
// path between x and y and checks each for activity. Guarded by `limit`
// on the universe size.
bool dsep_naive(const Dag& g, const SeparationQuery& q, int limit = kDefaultPathEnumLimit);

// Fast d-separation: reachability over (node, arrival-direction) states.
// Agrees with dsep_naive on every input; linear in edges per query.
bool dsep(const Dag& g, const SeparationQuery& q);

// All canonical triplets of g's universe that d-separation affirms.
DependencyModel dsep_model(const Dag& g, int limit = kDefaultModelEnumLimit);

// Least fixpoint of z under "a deterministic node whose parents are all
// determined is determined". Parentless deterministic nodes are in the
// closure for every z.
VarSet determination_closure(const Dag& g, VarSet z);

// d-separation extended for deterministic nodes: interior non-collider
// nodes block when they are determined by z (not merely in z);
// head-to-head nodes keep the plain d-separation condition.
bool idsep(const Dag& g, const SeparationQuery& q);

// Undirected vertex separation: true iff every path between x and y
// passes through z.
bool usep(const UndirectedGraph& u, const SeparationQuery& q);

// All canonical triplets that usep affirms.
DependencyModel usep_model(const UndirectedGraph& u, int limit = kDefaultModelEnumLimit);

// Pairwise construction of the minimal undirected I-map: edge (a,b) is
// absent iff the oracle affirms ({a}, universe \ {a,b}, {b}). When the
// oracle is a graphoid this is the unique edge-minimal I-map.
UndirectedGraph undirected_minimal_imap(const IndependenceOracle& oracle);

// nullopt when every triplet of `candidate` is affirmed by `m`;
// otherwise the first violating triplet in canonical order.
std::optional<Triplet> is_imap(const DependencyModel& candidate, const IndependenceOracle& m);

// Separation-backed oracles.
IndependenceOracle dsep_oracle(const Dag& g);
IndependenceOracle usep_oracle(const UndirectedGraph& u);

// Enumerates all canonical triplets over a universe (every disjoint
// x/z/y assignment with x, y nonempty), in canonical order, calling
// fn(triplet). Shared basis of the exhaustive model builders.
void for_each_canonical_triplet(const UniversePtr& u, const std::function<void(const Triplet&)>& fn);

}  // namespace graphoid
