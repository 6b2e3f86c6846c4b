#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "stabenv/closedform.hpp"
#include "stabenv/combinatorics.hpp"
#include "stabenv/parse.hpp"

using namespace stabenv;

namespace {

// h_m(values), complete homogeneous symmetric polynomial.
Integer complete_homogeneous(int m, const std::vector<long>& values) {
  std::vector<Integer> h(static_cast<std::size_t>(m) + 1, Integer(0));
  h[0] = 1;
  for (long v : values) {
    for (std::size_t d = 1; d <= static_cast<std::size_t>(m); ++d) {
      h[d] += h[d - 1] * v;
    }
  }
  return h[static_cast<std::size_t>(m)];
}

// u^i Gamma(u + j - i) / Gamma(u + j) = prod_{m=j-i}^{j-1} 1/(1 + m/u), so the
// coefficient of u^-lambda is (-1)^lambda h_lambda(j-i, ..., j-1).
Rational gamma_ratio_coeff(int lambda, int i, int j) {
  std::vector<long> ms;
  for (int m = j - i; m < j; ++m) {
    ms.push_back(m);
  }
  Rational c(complete_homogeneous(lambda, ms));
  return lambda % 2 == 0 ? c : Rational(-c);
}

Rational gamma_ratio_at(const Rational& u, int i, int j) {
  Rational out = 1;
  for (int m = j - i; m < j; ++m) {
    out *= u / (u + m);
  }
  return out;
}

// The G sum without the binomial weights.
Rational g_without_binomial(int lambda, int i, int j) {
  Rational sum = 0;
  for (int p = 0; p <= i - 1; ++p) {
    Integer b(p + j - i);
    Integer t;
    mpz_pow_ui(t.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned>(lambda + i - 1));
    sum += (i - 1 - p) % 2 == 0 ? Rational(t) : Rational(-t);
  }
  sum /= Rational(factorial(static_cast<unsigned>(i - 1)));
  return lambda % 2 == 0 ? sum : Rational(-sum);
}

FixedPoint fp(int n, int k, const std::string& text) { return parse_fixed_point(n, k, text); }

}  // namespace

TEST_CASE("elementary symmetric values") {
  CHECK(elementary_symmetric(1, {1, 2, 3}) == 6);
  CHECK(elementary_symmetric(2, {1, 2, 3}) == 11);
  CHECK(elementary_symmetric(3, {1, 2, 3}) == 6);
  CHECK(elementary_symmetric(0, {}) == 1);
  CHECK_THROWS_AS(elementary_symmetric(4, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(elementary_symmetric(-1, {1}), std::invalid_argument);
  CHECK(delta_multiset({2, 5, 3}) == std::vector<long>{3, 1, -2});
}

TEST_CASE("prod (x + delta) = sum x^d e_{N-d}(delta)") {
  // Evaluate both sides at integer x for several J.
  for (const auto& j : ordered_tuples_above(5, {1, 1, 2})) {
    std::vector<long> delta = delta_multiset(j);
    const int big = static_cast<int>(delta.size());
    for (long x = -3; x <= 3; ++x) {
      Integer lhs = 1;
      for (long d : delta) {
        lhs *= x + d;
      }
      Integer rhs = 0;
      Integer xp = 1;
      for (int d = 0; d <= big; ++d) {
        rhs += xp * elementary_symmetric(big - d, delta);
        xp *= x;
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("G matches the Gamma-ratio expansion") {
  for (int i = 1; i <= 5; ++i) {
    for (int j = i; j <= 8; ++j) {
      for (int lambda = 0; lambda <= 6; ++lambda) {
        CAPTURE(i);
        CAPTURE(j);
        CAPTURE(lambda);
        CHECK(g_term(lambda, i, j) == gamma_ratio_coeff(lambda, i, j));
      }
    }
  }
  CHECK(g_term(0, 1, 3) == 1);
  CHECK(g_term(2, 1, 3) == 4);
  CHECK(g_term(3, 1, 4) == -27);
  // Truncating after L terms leaves an error of order u^-(L+1).
  const int L = 6;
  for (long u : {1000L, 10000L, 100000L}) {
    for (auto [i, j] : {std::pair{2, 4}, std::pair{3, 5}, std::pair{4, 7}}) {
      Rational uq(u);
      Rational series = 0;
      Rational up = 1;
      for (int lambda = 0; lambda <= L; ++lambda) {
        series += g_term(lambda, i, j) / up;
        up *= uq;
      }
      Rational err = abs(gamma_ratio_at(uq, i, j) - series) * up;
      // The scaled remainder tends to |G_{L+1}|.
      CHECK(err < 2 * abs(g_term(L + 1, i, j)));
      CHECK(err > abs(g_term(L + 1, i, j)) / 2);
    }
  }
}

TEST_CASE("G without binomial weights agrees only for i <= 2") {
  for (int i = 1; i <= 2; ++i) {
    for (int j = i; j <= 6; ++j) {
      for (int lambda = 0; lambda <= 4; ++lambda) {
        CHECK(g_without_binomial(lambda, i, j) == g_term(lambda, i, j));
      }
    }
  }
  CHECK_FALSE(g_without_binomial(1, 3, 4) == g_term(1, 3, 4));
}

TEST_CASE("g_term domain") {
  CHECK_THROWS_AS(g_term(0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(g_term(0, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(g_term(-1, 1, 1), std::invalid_argument);
}

TEST_CASE("closed form matches the z-limit") {
  for (int n = 2; n <= 8; ++n) {
    int kmax = n <= 6 ? std::min(3, n - 1) : 2;
    for (int k = 1; k <= kmax; ++k) {
      for (const auto& p : enumerate_fixed_points(n, k)) {
        CAPTURE(p.label());
        CHECK(closed_form_integral(p).value == integral_via_z_limit(p).value);
      }
    }
  }
  CHECK(closed_form_integral(fp(5, 2, "24")).value == 10);
  CHECK(closed_form_integral(fp(4, 1, "2")).method == "closed");
}

TEST_CASE("k = 2 closed form") {
  CHECK(gr2_closed_form(2, 3, 5) == 4);
  CHECK(gr2_closed_form(1, 3, 4) == 3);
  CHECK(gr2_closed_form(1, 2, 4) == 1);
  CHECK(gr2_closed_form(1, 1, 4) == 0);
  CHECK(gr2_closed_form(2, 2, 4) == -2);
  for (int n = 3; n <= 8; ++n) {
    for (const auto& p : enumerate_fixed_points(n, 2)) {
      CHECK(gr2_closed_form(p.indices[0], p.indices[1], n) == closed_form_integral(p).value);
    }
  }
  CHECK_THROWS_AS(gr2_closed_form(1, 2, 2), std::invalid_argument);
}

TEST_CASE("Narayana numbers") {
  CHECK(narayana(3, 1) == 1);
  CHECK(narayana(3, 2) == 3);
  CHECK(narayana(3, 3) == 1);
  for (int n = 1; n <= 10; ++n) {
    Integer row = 0;
    for (int k = 1; k <= n; ++k) {
      CHECK(narayana(n, k) > 0);
      row += narayana(n, k);
    }
    CHECK(row == binomial(2 * n, n) / (n + 1));
  }
  CHECK_THROWS_AS(narayana(3, 0), std::invalid_argument);
}

TEST_CASE("serial and parallel closed form agree") {
  for (const auto& p : enumerate_fixed_points(6, 3)) {
    CHECK(closed_form_integral(p, Execution::serial).value ==
          closed_form_integral(p, Execution::parallel).value);
  }
}
