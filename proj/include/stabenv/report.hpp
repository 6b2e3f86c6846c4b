#pragma once

#include <string>
#include <vector>

namespace stabenv {

enum class Status { verified, conjecture_supported, refuted, error };

std::string to_string(Status s);

// Outcome of one executable check. failures holds one line per violation.
struct CheckOutcome {
  std::string name;
  Status status = Status::verified;
  std::string detail;
  std::vector<std::string> failures;
  std::size_t cases = 0;

  bool ok() const { return status == Status::verified || status == Status::conjecture_supported; }
};

// Builds an outcome from the failure list: a passing theorem-level check is
// verified, a passing conjecture-level check is conjecture_supported, and
// any failure is refuted.
CheckOutcome make_outcome(std::string name, bool conjecture, std::vector<std::string> failures,
                          std::size_t cases, std::string detail = {});

}  // namespace stabenv
