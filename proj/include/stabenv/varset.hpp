#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stabenv {

// Upper bound on the number of variables a single polynomial ring may carry.
inline constexpr std::size_t kMaxVars = 24;

/// Ordered list of distinct variable names. The order fixes the graded
/// lexicographic monomial order of every polynomial built over the set.
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  // Throws VarSetMismatch when the name is absent.
  std::size_t require(std::string_view name) const;

  friend bool operator==(const VarSet&, const VarSet&) = default;

 private:
  std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

VarSetPtr make_varset(std::vector<std::string> names);

bool same_vars(const VarSetPtr& lhs, const VarSetPtr& rhs);

}  // namespace stabenv
