#include "stabenv/report.hpp"

namespace stabenv {

std::string to_string(Status s) {
  switch (s) {
    case Status::verified:
      return "verified";
    case Status::conjecture_supported:
      return "conjecture-supported";
    case Status::refuted:
      return "REFUTED";
    case Status::error:
      return "error";
  }
  return "error";
}

CheckOutcome make_outcome(std::string name, bool conjecture, std::vector<std::string> failures,
                          std::size_t cases, std::string detail) {
  CheckOutcome out;
  out.name = std::move(name);
  out.cases = cases;
  out.detail = std::move(detail);
  if (failures.empty()) {
    out.status = conjecture ? Status::conjecture_supported : Status::verified;
  } else {
    out.status = Status::refuted;
  }
  out.failures = std::move(failures);
  return out;
}

}  // namespace stabenv
