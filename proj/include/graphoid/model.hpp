#pragma once

#include <set>
#include <utility>

#include "graphoid/errors.hpp"
#include "graphoid/triplet.hpp"

namespace graphoid {

// A dependency model: a finite set of independence statements over one
// universe. Storage is canonical, so membership is symmetric in x and y
// and iteration order is the canonical bitmask order.
class DependencyModel {
 public:
  explicit DependencyModel(UniversePtr universe) : universe_(std::move(universe)) {
    if (!universe_) throw ValidationError("dependency model requires a universe");
  }

  const UniversePtr& universe() const { return universe_; }

  void insert(const Triplet& t) {
    require_same_universe(t);
    triplets_.insert(t.canonical());
  }

  bool contains(const Triplet& t) const {
    require_same_universe(t);
    return triplets_.count(t.canonical()) > 0;
  }

  int size() const { return static_cast<int>(triplets_.size()); }
  bool empty() const { return triplets_.empty(); }
  const std::set<Triplet>& triplets() const { return triplets_; }

  bool subset_of(const DependencyModel& other) const {
    for (const Triplet& t : triplets_) {
      if (!other.contains(t)) return false;
    }
    return true;
  }

  friend bool operator==(const DependencyModel& a, const DependencyModel& b) {
    return *a.universe_ == *b.universe_ && a.triplets_ == b.triplets_;
  }

 private:
  void require_same_universe(const Triplet& t) const {
    if (!same_universe(universe_, t.universe())) {
      throw ValidationError("triplet universe does not match the model's");
    }
  }

  UniversePtr universe_;
  std::set<Triplet> triplets_;
};

}  // namespace graphoid
