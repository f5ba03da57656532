#include "graphoid/axioms.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace graphoid {

std::string_view to_string(AxiomName name) {
  switch (name) {
    case AxiomName::symmetry: return "symmetry";
    case AxiomName::decomposition: return "decomposition";
    case AxiomName::weak_union: return "weak-union";
    case AxiomName::contraction: return "contraction";
    case AxiomName::intersection: return "intersection";
  }
  return "?";
}

std::optional<AxiomName> axiom_from_string(std::string_view text) {
  if (text == "symmetry") return AxiomName::symmetry;
  if (text == "decomposition") return AxiomName::decomposition;
  if (text == "weak-union") return AxiomName::weak_union;
  if (text == "contraction") return AxiomName::contraction;
  if (text == "intersection") return AxiomName::intersection;
  return std::nullopt;
}

std::string_view to_string(ClosureMode mode) {
  return mode == ClosureMode::semigraphoid ? "semigraphoid" : "graphoid";
}

std::optional<ClosureMode> mode_from_string(std::string_view text) {
  if (text == "semigraphoid") return ClosureMode::semigraphoid;
  if (text == "graphoid") return ClosureMode::graphoid;
  return std::nullopt;
}

namespace {

bool unary(AxiomName name) {
  return name == AxiomName::symmetry || name == AxiomName::decomposition ||
         name == AxiomName::weak_union;
}

// Iterates the nonempty proper subsets of `b` (descending bit order).
template <typename F>
void each_proper_subset(VarSet b, F&& fn) {
  for (std::uint64_t s = (b.bits() - 1) & b.bits(); s != 0; s = (s - 1) & b.bits()) {
    fn(VarSet::from_bits(s));
  }
}

void emit(std::vector<Triplet>& out, const UniversePtr& u, VarSet x, VarSet z, VarSet y) {
  out.push_back(Triplet(u, x, z, y).canonical());
}

// Consequences of one premise orientation (a, c, b).
void apply_oriented_unary(AxiomName name, const UniversePtr& u, VarSet a, VarSet c, VarSet b,
                          std::vector<Triplet>& out) {
  switch (name) {
    case AxiomName::symmetry:
      emit(out, u, b, c, a);
      break;
    case AxiomName::decomposition:
      each_proper_subset(b, [&](VarSet sub) { emit(out, u, a, c, sub); });
      break;
    case AxiomName::weak_union:
      // (a, c, y|w) => (a, c|y, w) for every nonempty proper w.
      each_proper_subset(b, [&](VarSet w) { emit(out, u, a, c | (b - w), w); });
      break;
    default:
      break;
  }
}

// Contraction: (x, z|y, w) & (x, z, y) => (x, z, y|w).
void apply_oriented_contraction(const UniversePtr& u, VarSet a1, VarSet c1, VarSet b1, VarSet a2,
                                VarSet c2, VarSet b2, std::vector<Triplet>& out) {
  if (a1 != a2) return;
  if (!c1.contains_all(c2)) return;
  if (c1 - c2 != b2) return;
  emit(out, u, a1, c2, b1 | b2);
}

// Intersection: (x, z|y, w) & (x, z|w, y) => (x, z, y|w).
void apply_oriented_intersection(const UniversePtr& u, VarSet a1, VarSet c1, VarSet b1, VarSet a2,
                                 VarSet c2, VarSet b2, std::vector<Triplet>& out) {
  if (a1 != a2) return;
  if (!c1.contains_all(b2) || !c2.contains_all(b1)) return;
  if (c1 - b2 != c2 - b1) return;
  emit(out, u, a1, c1 - b2, b1 | b2);
}

void dedup(std::vector<Triplet>& out) {
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

}  // namespace

std::vector<Triplet> apply_axiom(AxiomName name, const Triplet& t1,
                                 const std::optional<Triplet>& t2) {
  const bool needs_two =
      name == AxiomName::contraction || name == AxiomName::intersection;
  if (needs_two != t2.has_value()) {
    throw ValidationError(std::string(to_string(name)) +
                          (needs_two ? " requires two premises" : " takes a single premise"));
  }
  if (t2 && !same_universe(t1.universe(), t2->universe())) {
    throw ValidationError("premises are over different universes");
  }

  const UniversePtr& u = t1.universe();
  std::vector<Triplet> out;
  if (unary(name)) {
    Triplet t = t1.canonical();
    apply_oriented_unary(name, u, t.x(), t.z(), t.y(), out);
    apply_oriented_unary(name, u, t.y(), t.z(), t.x(), out);
  } else {
    Triplet p1 = t1.canonical();
    Triplet p2 = t2->canonical();
    const VarSet a1[2] = {p1.x(), p1.y()}, b1[2] = {p1.y(), p1.x()};
    const VarSet a2[2] = {p2.x(), p2.y()}, b2[2] = {p2.y(), p2.x()};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        if (name == AxiomName::contraction) {
          apply_oriented_contraction(u, a1[i], p1.z(), b1[i], a2[j], p2.z(), b2[j], out);
        } else {
          apply_oriented_intersection(u, a1[i], p1.z(), b1[i], a2[j], p2.z(), b2[j], out);
        }
      }
    }
  }
  dedup(out);
  return out;
}

namespace {

struct Provenance {
  AxiomName axiom;
  Triplet p1;
  std::optional<Triplet> p2;
};

// Semi-naive fixpoint. Unary axioms run once per triplet (on the round
// it becomes new); binary axioms run on every (new, known) pair in both
// premise orders. Provenance records the first generator of each
// derived triplet when requested.
void run_closure(const DependencyModel& m, ClosureMode mode, int limit, DependencyModel& result,
                 std::map<Triplet, Provenance>* provenance) {
  if (m.universe()->size() > limit) {
    throw LimitError("closure is limited to universes of at most " + std::to_string(limit) +
                     " variables (universe has " + std::to_string(m.universe()->size()) +
                     "); raise the limit to override");
  }

  std::vector<Triplet> known(m.triplets().begin(), m.triplets().end());
  std::vector<Triplet> frontier = known;
  for (const Triplet& t : known) result.insert(t);

  std::vector<Triplet> fresh;
  auto consider = [&](const Triplet& t, AxiomName axiom, const Triplet& p1,
                      const std::optional<Triplet>& p2) {
    if (result.contains(t)) return;
    result.insert(t);
    fresh.push_back(t);
    if (provenance) provenance->emplace(t, Provenance{axiom, p1, p2});
  };

  std::vector<Triplet> buf;
  while (!frontier.empty()) {
    fresh.clear();
    for (const Triplet& t : frontier) {
      for (AxiomName ax : {AxiomName::decomposition, AxiomName::weak_union}) {
        buf = apply_axiom(ax, t);
        for (const Triplet& r : buf) consider(r, ax, t, std::nullopt);
      }
      for (const Triplet& other : known) {
        std::vector<AxiomName> binaries = {AxiomName::contraction};
        if (mode == ClosureMode::graphoid) binaries.push_back(AxiomName::intersection);
        for (AxiomName ax : binaries) {
          buf = apply_axiom(ax, t, other);
          for (const Triplet& r : buf) consider(r, ax, t, other);
          buf = apply_axiom(ax, other, t);
          for (const Triplet& r : buf) consider(r, ax, other, t);
        }
      }
    }
    known.insert(known.end(), fresh.begin(), fresh.end());
    frontier = fresh;
  }
}

}  // namespace

DependencyModel closure(const DependencyModel& m, ClosureMode mode, int limit) {
  DependencyModel result(m.universe());
  run_closure(m, mode, limit, result, nullptr);
  return result;
}

bool is_closed(const DependencyModel& m, ClosureMode mode, int limit) {
  return closure(m, mode, limit).size() == m.size();
}

std::optional<DerivationTrace> derive(const DependencyModel& m, const Triplet& target,
                                      ClosureMode mode, int limit) {
  Triplet goal = target.canonical();
  if (m.contains(goal)) return DerivationTrace{goal, {}};

  DependencyModel closed(m.universe());
  std::map<Triplet, Provenance> provenance;
  run_closure(m, mode, limit, closed, &provenance);
  if (!closed.contains(goal)) return std::nullopt;

  // Unwind the first-generator records from the goal, emitting premises
  // before conclusions. Postorder over the provenance DAG.
  DerivationTrace trace{goal, {}};
  std::set<Triplet> emitted;
  std::vector<std::pair<Triplet, bool>> stack;  // (triplet, expanded)
  stack.emplace_back(goal, false);
  while (!stack.empty()) {
    auto [t, expanded] = stack.back();
    stack.pop_back();
    if (m.contains(t) || emitted.count(t)) continue;
    const Provenance& prov = provenance.at(t);
    if (expanded) {
      emitted.insert(t);
      std::vector<Triplet> premises = {prov.p1};
      if (prov.p2) premises.push_back(*prov.p2);
      trace.steps.push_back(DerivationStep{prov.axiom, std::move(premises), t});
      continue;
    }
    stack.emplace_back(t, true);
    stack.emplace_back(prov.p1, false);
    if (prov.p2) stack.emplace_back(*prov.p2, false);
  }
  return trace;
}

IndependenceOracle closure_oracle(const DependencyModel& m, ClosureMode mode, int limit) {
  auto closed = std::make_shared<const DependencyModel>(closure(m, mode, limit));
  return IndependenceOracle(
      closed->universe(), [closed](const Triplet& t) { return closed->contains(t); },
      std::string(to_string(mode)) + " closure");
}

}  // namespace graphoid
