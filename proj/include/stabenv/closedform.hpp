#pragma once

#include <vector>

#include "stabenv/localize.hpp"

namespace stabenv {

// {j_m - j_l : l < m} in the order of the tuple.
std::vector<long> delta_multiset(const std::vector<int>& j);

// e_m of a multiset; e_0 = 1. Throws std::invalid_argument unless
// 0 <= m <= values.size().
Integer elementary_symmetric(int m, const std::vector<long>& values);

// G_lambda(j - i, j): coefficient of u^-lambda in
// u^i * Gamma(u + j - i) / Gamma(u + j), via
// (-1)^lambda sum_p (-1)^{i-1-p} (p + j - i)^{lambda+i-1} / ((i-1-p)! p!).
Rational g_term(int lambda, int i, int j);

// (-1)^{k(n-k)-|I|} sum_J A_J B_J over ordered tuples J of distinct entries
// with j_r >= i_r. Throws NonIntegerResult.
IntegralValue closed_form_integral(const FixedPoint& p, Execution exec = Execution::parallel);

// Closed form for k = 2; i1 = i2 allowed.
Rational gr2_closed_form(int i1, int i2, int n);

// N(n, k) = C(n, k) C(n, k-1) / n for 1 <= k <= n.
Integer narayana(int n, int k);

}  // namespace stabenv
