#pragma once

#include <string>
#include <tuple>

#include "graphoid/errors.hpp"
#include "graphoid/universe.hpp"
#include "graphoid/varset.hpp"

namespace graphoid {

// One independence statement: x is independent of y given z. The three
// entries are pairwise disjoint, x and y nonempty (z may be empty).
// Symmetric in x and y; the canonical form puts the bitmask-smaller of
// the two first.
class Triplet {
 public:
  Triplet(UniversePtr universe, VarSet x, VarSet z, VarSet y)
      : universe_(std::move(universe)), x_(x), z_(z), y_(y) {
    validate();
  }

  const UniversePtr& universe() const { return universe_; }
  VarSet x() const { return x_; }
  VarSet z() const { return z_; }
  VarSet y() const { return y_; }
  VarSet vars() const { return x_ | z_ | y_; }

  Triplet flipped() const { return Triplet(universe_, y_, z_, x_); }
  Triplet canonical() const { return y_.bits() < x_.bits() ? flipped() : *this; }
  bool is_canonical() const { return x_.bits() <= y_.bits(); }

  // "x-list | z-list | y-list" with '-' for an empty z.
  std::string to_literal() const {
    auto field = [&](VarSet s) { return s.empty() ? std::string("-") : universe_->label(s); };
    return field(x_) + " | " + field(z_) + " | " + field(y_);
  }

  // Entry-wise comparison; containers of triplets assume one universe.
  friend bool operator==(const Triplet& a, const Triplet& b) {
    return a.x_ == b.x_ && a.z_ == b.z_ && a.y_ == b.y_;
  }
  friend bool operator<(const Triplet& a, const Triplet& b) {
    return std::tuple(a.x_, a.z_, a.y_) < std::tuple(b.x_, b.z_, b.y_);
  }

 private:
  void validate() const {
    if (!universe_) throw ValidationError("triplet requires a universe");
    if (!universe_->full_set().contains_all(vars())) {
      throw ValidationError("triplet mentions variables outside its universe");
    }
    if (x_.empty()) throw ValidationError("x must be nonempty");
    if (y_.empty()) throw ValidationError("y must be nonempty");
    if (x_.intersects(z_)) throw ValidationError("x and z overlap");
    if (x_.intersects(y_)) throw ValidationError("x and y overlap");
    if (z_.intersects(y_)) throw ValidationError("z and y overlap");
  }

  UniversePtr universe_;
  VarSet x_, z_, y_;
};

inline Triplet canonical(const Triplet& t) { return t.canonical(); }

// Separation queries share the triplet's shape and invariants.
using SeparationQuery = Triplet;

}  // namespace graphoid
