#include "stabenv/rational.hpp"

#include <mutex>
#include <vector>

namespace stabenv {

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

const Integer& factorial(unsigned n) {
  static std::mutex mutex;
  // deque-like stability: reserve so references stay valid while growing.
  static std::vector<Integer> table = [] {
    std::vector<Integer> t;
    t.reserve(4096);
    t.emplace_back(1);
    return t;
  }();
  std::lock_guard lock(mutex);
  if (n >= table.capacity()) {
    throw std::length_error("factorial table limit exceeded");
  }
  while (table.size() <= n) {
    Integer next = table.back() * static_cast<unsigned long>(table.size());
    table.push_back(std::move(next));
  }
  return table[n];
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) {
    return 0;
  }
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

Integer ipow(const Integer& base, unsigned exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

}  // namespace stabenv
