#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "graphoid/varset.hpp"

namespace graphoid {

class Universe;
// Universes are immutable once created; the handle is non-const only so
// that it binds cleanly elsewhere.
using UniversePtr = std::shared_ptr<Universe>;

// A fixed, named set of variables. Indices are dense (0..n-1) in
// declaration order; names are unique and free of the characters the
// text formats reserve. Immutable once created, shared by handle.
class Universe {
 public:
  static constexpr int kMaxVars = 64;

  // Validates the name list and returns a shared handle. Throws
  // ValidationError on bad or duplicate names, or more than 64 of them.
  static UniversePtr create(std::vector<std::string> names);

  // True iff `name` is usable as a variable name (nonempty, no
  // whitespace, ',', '|', or '#').
  static bool valid_name(std::string_view name);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int index) const;
  const std::vector<std::string>& names() const { return names_; }

  // Index of `name`; throws LookupError when absent. `find` is the
  // non-throwing variant (-1 when absent).
  int index(std::string_view name) const;
  int find(std::string_view name) const;
  bool has(std::string_view name) const { return find(name) >= 0; }

  VarSet full_set() const { return VarSet::first_n(size()); }
  VarSet var(std::string_view name) const { return VarSet::single(index(name)); }
  VarSet vars(std::initializer_list<std::string_view> names) const;

  std::vector<std::string> names_of(VarSet set) const;
  // Member names ascending by index, joined by `sep`.
  std::string label(VarSet set, std::string_view sep = ",") const;

  // Universes compare by content: same names in the same order.
  friend bool operator==(const Universe& a, const Universe& b) { return a.names_ == b.names_; }

 private:
  explicit Universe(std::vector<std::string> names);
  std::vector<std::string> names_;
  std::unordered_map<std::string_view, int> by_name_;  // views into names_
};

// True when both handles denote the same variable list.
inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace graphoid
