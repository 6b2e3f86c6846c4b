#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

#include "stabenv/varset.hpp"

namespace stabenv {

/// Exponent vector over a VarSet, with the total degree cached.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exps{};
  std::uint16_t degree = 0;

  std::uint8_t operator[](std::size_t var) const { return exps[var]; }

  // Sets one exponent, keeping the cached degree in sync.
  void set(std::size_t var, unsigned exponent);

  bool is_one() const { return degree == 0; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial monomial_mul(const Monomial& lhs, const Monomial& rhs);

// True when lhs divides rhs.
bool monomial_divides(const Monomial& lhs, const Monomial& rhs);

// rhs / lhs; caller guarantees divisibility.
Monomial monomial_div(const Monomial& num, const Monomial& den);

Monomial monomial_gcd(const Monomial& lhs, const Monomial& rhs);

// Graded lexicographic order: total degree first, ties by the VarSet order.
inline bool grlex_less(const Monomial& lhs, const Monomial& rhs) {
  if (lhs.degree != rhs.degree) {
    return lhs.degree < rhs.degree;
  }
  return lhs.exps < rhs.exps;
}

inline bool grlex_greater(const Monomial& lhs, const Monomial& rhs) {
  return grlex_less(rhs, lhs);
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto e : m.exps) {
      h ^= e;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace stabenv
