#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "graphoid/model.hpp"
#include "graphoid/oracle.hpp"
#include "graphoid/triplet.hpp"

namespace graphoid {

enum class AxiomName { symmetry, decomposition, weak_union, contraction, intersection };
enum class ClosureMode { semigraphoid, graphoid };

std::string_view to_string(AxiomName name);
std::optional<AxiomName> axiom_from_string(std::string_view text);
std::string_view to_string(ClosureMode mode);
std::optional<ClosureMode> mode_from_string(std::string_view text);

// Full closure is exponential in the universe size; this cap turns a
// silent blowup into an explicit error. Override per call.
inline constexpr int kDefaultClosureLimit = 7;

// All one-step consequences of the premise(s) under one axiom,
// canonicalized, deduplicated, sorted. Premises are treated as symmetric
// statements (both orientations are pattern-matched). Returns empty when
// the premises do not fit the axiom's pattern. Throws ValidationError on
// arity mismatch or premises over different universes.
std::vector<Triplet> apply_axiom(AxiomName name, const Triplet& t1,
                                 const std::optional<Triplet>& t2 = std::nullopt);

// Least fixpoint of `m` under the semi-graphoid axioms (plus
// intersection in graphoid mode). Throws LimitError when the universe
// exceeds `limit` variables.
DependencyModel closure(const DependencyModel& m, ClosureMode mode,
                        int limit = kDefaultClosureLimit);

// True iff closure(m, mode) adds nothing.
bool is_closed(const DependencyModel& m, ClosureMode mode, int limit = kDefaultClosureLimit);

struct DerivationStep {
  AxiomName axiom;
  std::vector<Triplet> premises;
  Triplet result;
};

// A replayable proof: each step's premises are input triplets or results
// of earlier steps, and apply_axiom(step) reproduces step.result.
struct DerivationTrace {
  Triplet conclusion;
  std::vector<DerivationStep> steps;
};

// Proof of `target` from `m`, or nullopt when target is not in the
// closure. Records the first generator of each derived triplet, so the
// trace is a valid proof but not necessarily a shortest one.
std::optional<DerivationTrace> derive(const DependencyModel& m, const Triplet& target,
                                      ClosureMode mode, int limit = kDefaultClosureLimit);

// Membership in closure(m, mode), precomputed once.
IndependenceOracle closure_oracle(const DependencyModel& m, ClosureMode mode,
                                  int limit = kDefaultClosureLimit);

}  // namespace graphoid
