#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "graphoid/model.hpp"
#include "graphoid/triplet.hpp"

namespace graphoid {

// Uniform membership predicate over canonical triplets of one universe.
// Backends are explicit models, closures, or graph separation; all are
// read-only, so an oracle may be queried concurrently. Answers are
// symmetric by construction: queries are canonicalized first.
class IndependenceOracle {
 public:
  using Predicate = std::function<bool(const Triplet&)>;

  IndependenceOracle(UniversePtr universe, Predicate predicate, std::string description = "")
      : universe_(std::move(universe)),
        predicate_(std::move(predicate)),
        description_(std::move(description)) {}

  const UniversePtr& universe() const { return universe_; }
  const std::string& description() const { return description_; }

  bool affirms(const Triplet& t) const {
    if (!same_universe(universe_, t.universe())) {
      throw ValidationError("query universe does not match the oracle's");
    }
    return predicate_(t.canonical());
  }

 private:
  UniversePtr universe_;
  Predicate predicate_;
  std::string description_;
};

// Membership in an explicit dependency model.
inline IndependenceOracle model_oracle(DependencyModel model) {
  auto shared = std::make_shared<const DependencyModel>(std::move(model));
  return IndependenceOracle(
      shared->universe(), [shared](const Triplet& t) { return shared->contains(t); },
      "explicit model");
}

}  // namespace graphoid
