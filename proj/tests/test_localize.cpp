#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>

#include "stabenv/errors.hpp"
#include "stabenv/localize.hpp"
#include "stabenv/parse.hpp"

using namespace stabenv;

namespace {

FixedPoint fp(int n, int k, const std::string& text) { return parse_fixed_point(n, k, text); }

RationalFunction rf(int n, const std::string& text) {
  return parse_rational_function(text, equivariant_vars(n));
}

Chamber random_chamber(std::mt19937_64& rng, int n) {
  Chamber c = Chamber::identity(n);
  std::shuffle(c.perm.begin(), c.perm.end(), rng);
  return c;
}

}  // namespace

TEST_CASE("T*P3 localization sums") {
  Chamber id = Chamber::identity(4);
  const char* const expected[4] = {
      "-1/((-h+a1-a2)*(-h+a1-a3)*(-h+a1-a4))",
      // The printed form has -a1^2 and (h+a4-a3); both are slips.
      "(3*h^2-3*h*a1+a1^2-h*a2+2*h*a3-a1*a3+2*h*a4-a1*a4+a3*a4)/"
      "((h+a2-a1)*(h+a3-a1)*(h+a3-a2)*(h+a4-a1)*(h+a4-a2))",
      "(3*h^2-2*h*a1-2*h*a2+a1*a2+h*a3+3*h*a4-a1*a4-a2*a4+a4^2)/"
      "((h+a3-a1)*(h+a3-a2)*(h+a4-a1)*(h+a4-a2)*(h+a4-a3))",
      "1/((h-a1+a4)*(h+a4-a2)*(h+a4-a3))",
  };
  const int binomials[4] = {1, 3, 3, 1};
  for (int i = 1; i <= 4; ++i) {
    LocalizationSum s = localization_sum(make_fixed_point(4, 1, {i}), id);
    CAPTURE(i);
    CHECK(s.value.to_string() == rf(4, expected[i - 1]).to_string());
    CHECK(integral_from_sum(s).value == binomials[i - 1]);
    CHECK(integral_via_z_limit(s.point).value == binomials[i - 1]);
  }
  RationalFunction printed = rf(4,
                                "(3*h^2-3*h*a1-a1^2-h*a2+2*h*a3-a1*a3+2*h*a4-a1*a4+a3*a4)/"
                                "((h+a2-a1)*(h+a3-a1)*(h+a3-a2)*(h+a4-a3)*(h+a4-a2))");
  CHECK_FALSE(localization_sum(fp(4, 1, "2"), id).value == printed);
}

TEST_CASE("z-limit examples") {
  std::map<std::string, int> gr24{{"34", 1}, {"24", 3}, {"23", 2}, {"14", 2}, {"13", 3}, {"12", 1}};
  for (const auto& [label, value] : gr24) {
    CHECK(integral_via_z_limit(fp(4, 2, label)).value == value);
  }
  CHECK(integral_via_z_limit(fp(5, 2, "24")).value == 10);
  CHECK(integral_full_multivariate(fp(4, 2, "23")).value == 2);
  for (int i = 1; i <= 3; ++i) {
    CHECK(integral_full_multivariate(make_fixed_point(3, 1, {i})).value == (i == 2 ? 2 : 1));
  }
}

TEST_CASE("z-specialized restrictions match the symbolic ones") {
  auto target = make_varset({"z", "h"});
  MultiPoly z = MultiPoly::variable(target, "z");
  MultiPoly h = MultiPoly::variable(target, "h");
  for (int n = 2; n <= 5; ++n) {
    Bindings at;
    for (int s = 1; s <= n; ++s) {
      at.emplace(a_name(s), z * h * MultiPoly::constant(target, Rational(s)));
    }
    Bindings lift{{"z", z}};
    for (int k = 1; k < n; ++k) {
      for (const auto& i : enumerate_fixed_points(n, k)) {
        for (const auto& j : enumerate_fixed_points(n, k)) {
          MultiPoly lhs = substitute(restriction(i, j, Chamber::identity(n)), at, target);
          MultiPoly rhs = substitute(restriction_z(i, j), lift, target) * h.pow(k * (n - k));
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("z-limit and full multivariate methods agree") {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= std::min(2, n - 1); ++k) {
      for (const auto& p : enumerate_fixed_points(n, k)) {
        CHECK(integral_via_z_limit(p).value == integral_full_multivariate(p).value);
      }
    }
  }
}

TEST_CASE("cost guard on the full multivariate path") {
  CHECK(full_multivariate_cost(6, 3) == 360);
  CHECK(full_multivariate_cost(7, 3) > full_multivariate_cost_limit());
  CHECK_THROWS_AS(integral_full_multivariate(fp(7, 3, "1,2,3")), CostLimitExceeded);
}

TEST_CASE("localization sums are homogeneous of degree -k(n-k)") {
  for (int n = 2; n <= 4; ++n) {
    for (int k = 1; k < n; ++k) {
      std::vector<std::string> names = equivariant_vars(n)->names();
      names.emplace_back("s");
      auto scaled = make_varset(names);
      MultiPoly s = MultiPoly::variable(scaled, "s");
      Bindings scale;
      Bindings lift;
      for (const auto& name : equivariant_vars(n)->names()) {
        scale.emplace(name, s * MultiPoly::variable(scaled, name));
        lift.emplace(name, MultiPoly::variable(scaled, name));
      }
      for (const auto& p : enumerate_fixed_points(n, k)) {
        RationalFunction v = localization_sum(p, Chamber::identity(n)).value;
        MultiPoly num = substitute(v.num(), scale, scaled);
        MultiPoly den = substitute(v.den(), scale, scaled);
        // f(s a, s h) = s^{-k(n-k)} f(a, h), cross-multiplied.
        CHECK(num * s.pow(k * (n - k)) * substitute(v.den(), lift, scaled) ==
              substitute(v.num(), lift, scaled) * den);
      }
    }
  }
}

TEST_CASE("integrality, duality and k = 1 row sums") {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k <= std::min(3, n - 1); ++k) {
      std::map<FixedPoint, Rational> values;
      for (const auto& p : enumerate_fixed_points(n, k)) {
        values[p] = integral_via_z_limit(p).value;
        CHECK(is_integer(values[p]));
      }
      for (const auto& [p, v] : values) {
        std::vector<int> dual;
        for (int i : p.indices) {
          dual.push_back(n + 1 - i);
        }
        std::sort(dual.begin(), dual.end());
        CHECK(values.at(make_fixed_point(n, k, dual)) == v);
      }
      if (k == 1) {
        Rational total = 0;
        for (const auto& [p, v] : values) {
          total += v;
        }
        CHECK(total == Rational(Integer(1) << (n - 1)));
      }
    }
  }
}

TEST_CASE("Vandermonde divisibility") {
  CHECK(vandermonde_divisibility_check(fp(2, 1, "1")).ok());
  CHECK(vandermonde_divisibility_check(fp(4, 2, "13")).ok());
  FactoredFraction c = vandermonde_combined_sum(fp(4, 1, "2"));
  auto vars = equivariant_vars(4);
  Bindings collapse{{"a2", MultiPoly::variable(vars, "a1")}};
  CHECK(substitute(c.num(), collapse, vars).is_zero());
  for (int n = 2; n <= 4; ++n) {
    for (int k = 1; k < n; ++k) {
      for (const auto& p : enumerate_fixed_points(n, k)) {
        CHECK(vandermonde_divisibility_check(p).ok());
        // Dividing by the Vandermonde recovers the localization sum.
        FactoredFraction combined = vandermonde_combined_sum(p);
        combined.divide_by(full_vandermonde(n));
        CHECK(combined.to_rational_function() == localization_sum(p, Chamber::identity(n)).value);
      }
    }
  }
}

TEST_CASE("chamber covariance") {
  CHECK(chamber_covariance_check(fp(4, 1, "1"), Chamber::identity(4)).ok());
  Chamber rev = parse_chamber(4, "4321");
  CHECK(chamber_covariance_check(fp(4, 1, "1"), rev).ok());
  RationalFunction lhs = localization_sum_from_weight_function(fp(4, 1, "1"), rev);
  RationalFunction base = localization_sum(fp(4, 1, "4"), Chamber::identity(4)).value;
  CHECK(lhs == RationalFunction::from_coprime(apply(rev, base.num()), apply(rev, base.den())));
  Chamber swap12 = parse_chamber(4, "2134");
  for (const auto& p : enumerate_fixed_points(4, 2)) {
    CHECK(chamber_covariance_check(p, swap12).ok());
  }
  std::mt19937_64 rng(17);
  for (int n = 3; n <= 4; ++n) {
    for (int k = 1; k < n; ++k) {
      Chamber tau = random_chamber(rng, n);
      for (const auto& p : enumerate_fixed_points(n, k)) {
        CHECK(chamber_covariance_check(p, tau).ok());
      }
    }
  }
}

TEST_CASE("serial and parallel sums agree") {
  for (const auto& p : enumerate_fixed_points(5, 2)) {
    CHECK(localization_sum(p, Chamber::identity(5), Execution::serial).value ==
          localization_sum(p, Chamber::identity(5), Execution::parallel).value);
    CHECK(scaled_sum_z(p, Execution::serial) == scaled_sum_z(p, Execution::parallel));
  }
}
