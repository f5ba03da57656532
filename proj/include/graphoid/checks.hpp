#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace graphoid {

// Result of one seeded property suite. A failing trial contributes a
// reproduction (the instance in the text formats plus what went wrong).
struct CheckOutcome {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::vector<std::string> failure_repros;
  bool passed() const { return trials > 0 && failures == 0; }
};

// Called after each trial, in trial order (1-based index).
using TrialCallback = std::function<void(int index, bool pass, const std::string& repro)>;

// Each suite runs `trials` seeded-random instances with sizes cycling
// up to n. `limit` overrides the internal enumeration/closure guards
// (0 keeps the defaults); an n beyond the effective guard raises
// LimitError up front.

// dsep_model(compile(p)) equals the semigraphoid closure of p's
// triplet list, exactly.
CheckOutcome check_corollary1(int n, int trials, std::uint64_t seed, int limit = 0,
                              const TrialCallback& cb = {});
// compile(extract(g)) reproduces g edge-for-edge.
CheckOutcome check_theorem1(int n, int trials, std::uint64_t seed, int limit = 0,
                            const TrialCallback& cb = {});
// DAGs compiled from minimal boundaries of dsep_model(g), under any
// ordering, are I-maps of it.
CheckOutcome check_theorem2(int n, int trials, std::uint64_t seed, int limit = 0,
                            const TrialCallback& cb = {});
// Every affirmed triplet is d-separated in its witness protocol's DAG.
CheckOutcome check_theorem3(int n, int trials, std::uint64_t seed, int limit = 0,
                            const TrialCallback& cb = {});
// dsep agrees with the path-enumeration oracle on random queries.
CheckOutcome check_oracle_eq(int n, int trials, std::uint64_t seed, int limit = 0,
                             const TrialCallback& cb = {}, int queries_per_graph = 50);
// Undirected separation models satisfy symmetry, decomposition, strong
// union, intersection, and outside-variable transitivity.
CheckOutcome check_usep_axioms(int n, int trials, std::uint64_t seed, int limit = 0,
                               const TrialCallback& cb = {});

// d-separation models are closed under the semi-graphoid axioms.
CheckOutcome check_dsep_closure(int n, int trials, std::uint64_t seed, int limit = 0,
                                const TrialCallback& cb = {});
// idsep coincides with dsep on deterministic-free graphs, on every
// canonical query.
CheckOutcome check_idsep_conservative(int n, int trials, std::uint64_t seed, int limit = 0,
                                      const TrialCallback& cb = {});
// determination_closure is monotone, inflationary, and idempotent on
// random graphs with deterministic nodes.
CheckOutcome check_determination(int n, int trials, std::uint64_t seed,
                                 const TrialCallback& cb = {});
// The constructed undirected graph is an I-map of the d-separation
// oracle and no single edge can be removed without breaking that.
CheckOutcome check_minimal_imap(int n, int trials, std::uint64_t seed, int limit = 0,
                             const TrialCallback& cb = {});

}  // namespace graphoid
