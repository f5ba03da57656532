#include "graphoid/universe.hpp"

#include <cctype>

#include "graphoid/errors.hpp"

namespace graphoid {

bool Universe::valid_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (std::isspace(static_cast<unsigned char>(c))) return false;
    if (c == ',' || c == '|' || c == '#') return false;
  }
  return true;
}

UniversePtr Universe::create(std::vector<std::string> names) {
  if (names.size() > kMaxVars) {
    throw ValidationError("universe exceeds " + std::to_string(kMaxVars) + " variables (got " +
                          std::to_string(names.size()) + ")");
  }
  auto u = UniversePtr(new Universe(std::move(names)));
  return u;
}

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  by_name_.reserve(names_.size());
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    const std::string& n = names_[i];
    if (!valid_name(n)) {
      throw ValidationError("invalid variable name '" + n +
                            "' (must be nonempty, no whitespace, ',', '|', or '#')");
    }
    if (!by_name_.emplace(n, i).second) {
      throw ValidationError("duplicate variable name '" + n + "'");
    }
  }
}

const std::string& Universe::name(int index) const {
  if (index < 0 || index >= size()) {
    throw LookupError("variable index " + std::to_string(index) + " out of range");
  }
  return names_[index];
}

int Universe::find(std::string_view name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

int Universe::index(std::string_view name) const {
  int i = find(name);
  if (i < 0) throw LookupError("unknown variable '" + std::string(name) + "'");
  return i;
}

VarSet Universe::vars(std::initializer_list<std::string_view> names) const {
  VarSet s;
  for (auto n : names) s |= var(n);
  return s;
}

std::vector<std::string> Universe::names_of(VarSet set) const {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (int v : set) out.push_back(name(v));
  return out;
}

std::string Universe::label(VarSet set, std::string_view sep) const {
  std::string out;
  bool first = true;
  for (int v : set) {
    if (!first) out += sep;
    out += name(v);
    first = false;
  }
  return out;
}

}  // namespace graphoid
