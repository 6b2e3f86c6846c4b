#include "stabenv/varset.hpp"

#include <algorithm>
#include <set>

#include "stabenv/errors.hpp"

namespace stabenv {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars) {
    throw std::invalid_argument("too many variables: " + std::to_string(names_.size()));
  }
  std::set<std::string_view> seen;
  for (const auto& name : names_) {
    if (name.empty()) {
      throw std::invalid_argument("empty variable name");
    }
    if (!seen.insert(name).second) {
      throw std::invalid_argument("duplicate variable name: " + name);
    }
  }
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t VarSet::require(std::string_view name) const {
  if (auto index = index_of(name)) {
    return *index;
  }
  throw VarSetMismatch("unknown variable '" + std::string(name) + "'");
}

VarSetPtr make_varset(std::vector<std::string> names) {
  return std::make_shared<const VarSet>(std::move(names));
}

bool same_vars(const VarSetPtr& lhs, const VarSetPtr& rhs) {
  if (lhs == rhs) {
    return true;
  }
  if (!lhs || !rhs) {
    return false;
  }
  return *lhs == *rhs;
}

}  // namespace stabenv
