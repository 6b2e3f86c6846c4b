#pragma once

#include <gmpxx.h>

#include <string>

namespace stabenv {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

// Memoized n! (thread safe).
const Integer& factorial(unsigned n);

// C(n, k); zero outside 0 <= k <= n.
Integer binomial(long n, long k);

// x^e with the convention 0^0 = 1.
Integer ipow(const Integer& base, unsigned exponent);

}  // namespace stabenv
