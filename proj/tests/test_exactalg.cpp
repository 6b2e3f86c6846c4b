#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stabenv/errors.hpp"
#include "stabenv/factored_fraction.hpp"
#include "stabenv/parse.hpp"
#include "stabenv/series.hpp"
#include "support.hpp"

using namespace stabenv;
using stabenv::testing::random_point;
using stabenv::testing::random_poly;
using stabenv::testing::vars_of;

namespace {

// Independent reference: evaluate the terms directly.
Rational naive_eval(const MultiPoly& p, const std::vector<Rational>& x) {
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (unsigned e = 0; e < t.mono.exps[i]; ++e) {
        v *= x[i];
      }
    }
    sum += v;
  }
  return sum;
}

}  // namespace

TEST_CASE("poly_arith basics") {
  auto vars = vars_of({"a1", "a2", "h"});
  auto a1 = parse_poly("a1", vars);
  auto a2 = parse_poly("a2", vars);
  auto h = parse_poly("h", vars);
  CHECK((a1 + h) + (a1 - h) == Rational(2) * a1);
  CHECK((a1 - a2) * (a1 + a2) == a1 * a1 - a2 * a2);
  CHECK(((a1 + h) - (a1 + h)).is_zero());
  CHECK(poly_arith(a1, a2, ArithKind::sub).to_string() == "a1 - a2");
}

TEST_CASE("mismatched variable sets are rejected") {
  auto v1 = vars_of({"a1", "a2"});
  auto v2 = vars_of({"a2", "a1"});
  auto p = MultiPoly::variable(v1, "a1");
  auto q = MultiPoly::variable(v2, "a1");
  CHECK_THROWS_AS(p + q, VarSetMismatch);
  CHECK_THROWS_AS(p * q, VarSetMismatch);
}

TEST_CASE("canonical string form") {
  auto vars = vars_of({"a1", "a2", "h"});
  auto p = parse_poly("3*a1^2*h - 2*a2", vars);
  CHECK(p.to_string() == "3*a1^2*h - 2*a2");
  CHECK(parse_poly("-a2 + 1/2", vars).to_string() == "-a2 + 1/2");
  CHECK(MultiPoly(vars).to_string() == "0");
}

TEST_CASE("exact_divide round trip on linear factors") {
  auto vars = vars_of({"a1", "a2", "a3", "a4", "h"});
  auto f1 = parse_poly("h - a1 + a4", vars);
  auto f2 = parse_poly("h + a4 - a2", vars);
  auto f3 = parse_poly("h + a4 - a3", vars);
  auto prod = f1 * f2 * f3;
  CHECK(exact_divide(prod, f1) == f2 * f3);
  CHECK(exact_divide(exact_divide(prod, f2), f3) == f1);
  CHECK(poly_gcd(prod, f1 * f3) == (f1 * f3).normalized());
  CHECK_THROWS_AS(exact_divide(prod, parse_poly("a1 - a2", vars)), NotDivisible);
  CHECK(exact_divide(prod, MultiPoly::constant(vars, 1)) == prod);
}

TEST_CASE("layer polynomial divisions") {
  auto vars = vars_of({"a", "b", "c"});
  auto d = parse_poly("a + 2b + c", vars);
  CHECK(exact_divide(parse_poly("(a+2b+c)(a+b+c)", vars), d) == parse_poly("a+b+c", vars));
  auto layer5 = d * parse_poly("a^2+2a b+3a c+b^2+2b c+c^2", vars);
  CHECK(exact_divide(layer5, d).to_string() == "a^2 + 2*a*b + 3*a*c + b^2 + 2*b*c + c^2");
}

TEST_CASE("poly_gcd") {
  auto vars = vars_of({"a1", "a2", "a3", "h"});
  auto x = parse_poly("a1 - a2", vars);
  CHECK(poly_gcd(x, x) == x);
  CHECK(poly_gcd(x * parse_poly("h", vars), x * parse_poly("a3", vars)) == x);
  CHECK(poly_gcd(MultiPoly(vars), Rational(-2) * x) == x);
  CHECK(poly_gcd(parse_poly("a1^2 - a2^2", vars), parse_poly("a1^2 + 2 a1 a2 + a2^2", vars)) ==
        parse_poly("a1 + a2", vars));
  // Non-linear common factor.
  auto q = parse_poly("a1^2 + a2 a3 + h", vars);
  auto g = poly_gcd(q * parse_poly("a1 - h", vars), q * parse_poly("a2^2 + 1", vars));
  CHECK(g == q);
  CHECK(poly_gcd(parse_poly("2", vars), x).is_one());
}

TEST_CASE("rational functions are canonical") {
  auto vars = vars_of({"a1", "a2", "h", "z"});
  auto f = parse_rational_function("(a1 - a2)(h + a1)/((2a2 - 2a1) h)", vars);
  CHECK(f.to_string() == "(-a1 - h)/(2*h)");
  CHECK(canonicalize(f) == f);
  auto z = parse_rational_function("z/z", vars);
  CHECK(z.to_string() == "1");
  CHECK(rational_limit_at_zero(parse_rational_function("1/(1+z)", vars), "z").to_string() == "1");
  CHECK_THROWS_AS(rational_limit_at_zero(parse_rational_function("1/z", vars), "z"), PoleAtZero);
  // General path agrees with the factored path.
  auto g = RationalFunction(parse_poly("(a1 - a2)(h + a1)", vars), parse_poly("(2a2 - 2a1) h", vars));
  CHECK(g == f);
}

TEST_CASE("substitute a_s -> s z h") {
  auto src = vars_of({"a1", "a2", "a3", "a4", "h"});
  auto dst = vars_of({"h", "z"});
  auto f = parse_rational_function("-1/((-h+a1-a2)(-h+a1-a3)(-h+a1-a4))", src);
  Bindings b;
  for (int s = 1; s <= 4; ++s) {
    b.emplace("a" + std::to_string(s), parse_poly(std::to_string(s) + " z h", dst));
  }
  auto out = substitute(f, b, dst);
  // Each factor maps to -h(1 + (s-1)z); the three signs cancel the leading minus.
  CHECK(out == parse_rational_function("1/(h^3 (1+z)(1+2z)(1+3z))", dst));
  CHECK(substitute(f, Bindings{}, src) == f);
  Bindings zero;
  for (int s = 1; s <= 4; ++s) {
    zero.emplace("a" + std::to_string(s), MultiPoly(src));
  }
  CHECK(substitute(parse_poly("h + a2 - a1", src), zero, src) == parse_poly("h", src));
  auto ff = parse_fraction("-1/((-h+a1-a2)(-h+a1-a3)(-h+a1-a4))", src);
  CHECK(substitute(ff, b, dst).to_rational_function() == out);
  CHECK_THROWS_AS(substitute(parse_rational_function("1/(a1 - a2)", src),
                             Bindings{{"a1", MultiPoly::variable(src, "a2")}}, src),
                  DenominatorVanishes);
}

TEST_CASE("series sqrt") {
  auto vars = vars_of({"x", "y", "z"});
  auto one = TruncatedSeries(parse_poly("1", vars), 8);
  CHECK(series_sqrt(one).poly().is_one());
  auto s = series_sqrt(TruncatedSeries(parse_poly("1 + 2x", vars), 4));
  CHECK(s.poly() == parse_poly("1 + x - x^2/2 + x^3/2", vars));
  auto disc = TruncatedSeries(parse_poly("(1 - x y (1+z))^2 - 4 x^2 y^2 z", vars), 12);
  auto root = series_sqrt(disc);
  Monomial m;
  m.set(0, 2);
  m.set(1, 2);
  m.set(2, 1);
  CHECK(root.coefficient(m) == -2);
  CHECK_THROWS_AS(series_sqrt(TruncatedSeries(parse_poly("2 + x", vars), 4)), ConstantTermNotSquare);
  CHECK_THROWS_AS(root.coefficient(parse_poly("x^12", vars).leading_term().mono), InsufficientOrder);
}

TEST_CASE("property: sqrt squared recovers the series") {
  std::mt19937_64 rng(17);
  auto vars = vars_of({"x", "y", "z"});
  const int order = 7;
  for (int trial = 0; trial < 50; ++trial) {
    auto tail = random_poly(rng, vars, 4, 3);
    std::vector<Term> terms;
    for (const auto& t : tail.terms()) {
      if (!t.mono.is_one()) {
        terms.push_back(t);
      }
    }
    auto s = MultiPoly::from_terms(vars, terms) + MultiPoly::constant(vars, 1);
    TruncatedSeries series(s, order);
    auto r = series_sqrt(series);
    CHECK((r * r).poly() == series.poly());
    auto inv = series_inverse(series);
    CHECK((inv * series).poly().is_one());
  }
}

TEST_CASE("property: arithmetic matches naive evaluation") {
  std::mt19937_64 rng(2024);
  auto vars = vars_of({"a1", "a2", "a3", "h"});
  for (int trial = 0; trial < 10000; ++trial) {
    auto p = random_poly(rng, vars, 4, 2);
    auto q = random_poly(rng, vars, 4, 2);
    auto sum = p + q;
    auto diff = p - q;
    auto prod = p * q;
    for (int k = 0; k < 5; ++k) {
      auto x = random_point(rng, vars->size());
      Rational pv = naive_eval(p, x);
      Rational qv = naive_eval(q, x);
      REQUIRE(naive_eval(sum, x) == pv + qv);
      REQUIRE(naive_eval(diff, x) == pv - qv);
      REQUIRE(naive_eval(prod, x) == pv * qv);
      REQUIRE(prod.evaluate(x) == pv * qv);
    }
  }
}

TEST_CASE("property: exact_divide(p*q, q) = p and canonical idempotence") {
  std::mt19937_64 rng(99);
  auto vars = vars_of({"a1", "a2", "h"});
  for (int trial = 0; trial < 300; ++trial) {
    auto p = random_poly(rng, vars, 5, 2);
    auto q = random_poly(rng, vars, 4, 2);
    if (q.is_zero()) {
      continue;
    }
    CHECK(exact_divide(p * q, q) == p);
    if (trial < 60 && !p.is_zero()) {
      auto den = q * (random_poly(rng, vars, 3, 1) + MultiPoly::constant(vars, 1));
      if (den.is_zero()) {
        continue;
      }
      RationalFunction f(p * q, den);
      CHECK(canonicalize(f) == f);
      auto x = random_point(rng, vars->size());
      Rational d = den.evaluate(x);
      if (sgn(d) != 0 && sgn(f.den().evaluate(x)) != 0) {
        CHECK(f.evaluate(x) == (p * q).evaluate(x) / d);
      }
    }
  }
}

TEST_CASE("property: substitution commutes with + and *") {
  std::mt19937_64 rng(5);
  auto src = vars_of({"a1", "a2", "h"});
  auto dst = vars_of({"h", "z"});
  Bindings b{{"a1", parse_poly("z h", dst)}, {"a2", parse_poly("2 z h + z", dst)}};
  for (int trial = 0; trial < 100; ++trial) {
    auto p = random_poly(rng, src, 4, 2);
    auto q = random_poly(rng, src, 4, 2);
    CHECK(substitute(p + q, b, dst) == substitute(p, b, dst) + substitute(q, b, dst));
    CHECK(substitute(p * q, b, dst) == substitute(p, b, dst) * substitute(q, b, dst));
  }
}
