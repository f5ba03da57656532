#pragma once

// Shared fixtures for the test suites.

#include <initializer_list>
#include <string_view>

#include "graphoid/graphoid.hpp"

namespace gt {

using namespace graphoid;

inline UniversePtr abc() { return Universe::create({"a", "b", "c"}); }

inline VarSet set_of(const UniversePtr& u, std::initializer_list<std::string_view> names) {
  return u->vars(names);
}

inline Triplet tr(const UniversePtr& u, std::string_view literal) {
  return parse_triplet(std::string(literal), u);
}

// a -> b -> c
inline Dag chain() {
  UniversePtr u = abc();
  return Dag::create(u, {VarSet(), u->var("a"), u->var("b")});
}

// a -> c <- b
inline Dag collider() {
  UniversePtr u = abc();
  return Dag::create(u, {VarSet(), VarSet(), u->vars({"a", "b"})});
}

// a -> c <- b, c -> d
inline Dag collider_plus() {
  UniversePtr u = Universe::create({"a", "b", "c", "d"});
  return Dag::create(u, {VarSet(), VarSet(), u->vars({"a", "b"}), u->var("c")});
}

// w -> d, d -> x, d -> y, with d deterministic
inline Dag detfork() {
  UniversePtr u = Universe::create({"w", "d", "x", "y"});
  return Dag::create(u, {VarSet(), u->var("w"), u->var("d"), u->var("d")}, u->var("d"));
}

}  // namespace gt
