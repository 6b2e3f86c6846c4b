#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "stabenv/errors.hpp"
#include "stabenv/parse.hpp"
#include "stabenv/weightfn.hpp"
#include "support.hpp"

using namespace stabenv;

namespace {

MultiPoly poly(int n, const std::string& text) { return parse_poly(text, equivariant_vars(n)); }

FixedPoint fp(int n, int k, const std::string& text) { return parse_fixed_point(n, k, text); }

Chamber random_chamber(std::mt19937_64& rng, int n) {
  Chamber c = Chamber::identity(n);
  std::shuffle(c.perm.begin(), c.perm.end(), rng);
  return c;
}

// (ij) = a_i - a_j and (ij)_h = a_i - a_j + h, abbreviated.
const char* const kTP3[4][4] = {
    {"(a1-a2+h)*(a1-a3+h)*(a1-a4+h)", "h*(a2-a3+h)*(a2-a4+h)", "h*(a3-a2+h)*(a3-a4+h)",
     "h*(a4-a2+h)*(a4-a3+h)"},
    {"0", "(a1-a2)*(a2-a3+h)*(a2-a4+h)", "h*(a1-a3)*(a3-a4+h)", "h*(a1-a4)*(a4-a3+h)"},
    {"0", "0", "(a1-a3)*(a2-a3)*(a3-a4+h)", "h*(a1-a4)*(a2-a4)"},
    {"0", "0", "0", "(a1-a4)*(a2-a4)*(a3-a4)"},
};

}  // namespace

TEST_CASE("k = 1 weight function has no denominator") {
  WeightFunction w = weight_function(fp(5, 1, "3"), Chamber::identity(5));
  REQUIRE(w.summands.size() == 1);
  RationalFunction expect(
      parse_poly("(a1-t1)*(a2-t1)*(t1-a4+h)*(t1-a5+h)", weight_vars(5, 1)));
  CHECK(w.expression() == expect);
}

TEST_CASE("T*P3 restriction matrix") {
  Chamber id = Chamber::identity(4);
  for (int i = 1; i <= 4; ++i) {
    FixedPoint pi = make_fixed_point(4, 1, {i});
    WeightFunction w = weight_function(pi, id);
    for (int j = 1; j <= 4; ++j) {
      FixedPoint pj = make_fixed_point(4, 1, {j});
      MultiPoly expect = poly(4, kTP3[i - 1][j - 1]);
      CAPTURE(i);
      CAPTURE(j);
      CHECK(restrict(w, pj) == expect);
      CHECK(restriction(pi, pj, id) == expect);
    }
  }
  CHECK(restriction(fp(4, 1, "2"), fp(4, 1, "3"), id) == poly(4, "h*(a1-a3)*(a3-a4+h)"));
}

TEST_CASE("support example on Gr(2,4)") {
  Chamber id = Chamber::identity(4);
  CHECK(restrict(weight_function(fp(4, 2, "34"), id), fp(4, 2, "12")).is_zero());
  CHECK(restriction(fp(4, 2, "34"), fp(4, 2, "12"), id).is_zero());
}

TEST_CASE("weight functions are symmetric in t") {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 6; ++n) {
    for (int k = 2; k <= std::min(3, n - 1); ++k) {
      auto pts = enumerate_fixed_points(n, k);
      for (int trial = 0; trial < 4; ++trial) {
        const FixedPoint& p = pts[rng() % pts.size()];
        WeightFunction w = weight_function(p, Chamber::identity(n));
        std::size_t dim = w.vars()->size();
        for (int sample = 0; sample < 3; ++sample) {
          auto pt = testing::random_point(rng, dim);
          std::size_t x = rng() % static_cast<std::size_t>(k);
          std::size_t y = (x + 1 + rng() % static_cast<std::size_t>(k - 1)) % static_cast<std::size_t>(k);
          auto swapped = pt;
          std::swap(swapped[x], swapped[y]);
          try {
            CHECK(w.evaluate(pt) == w.evaluate(swapped));
          } catch (const AlgebraError&) {
          }
        }
      }
    }
  }
  // Symbolic check on the combined expression for Gr(2,4).
  VarSetPtr vars = weight_vars(4, 2);
  Bindings swap{{"t1", MultiPoly::variable(vars, "t2")}, {"t2", MultiPoly::variable(vars, "t1")}};
  for (const auto& p : enumerate_fixed_points(4, 2)) {
    RationalFunction e = weight_function(p, Chamber::identity(4)).expression();
    CHECK(substitute(e.num(), swap, vars) * e.den() == e.num() * substitute(e.den(), swap, vars));
  }
}

TEST_CASE("summand-wise and direct restrictions agree") {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k < n; ++k) {
      Chamber rev = Chamber::identity(n);
      std::reverse(rev.perm.begin(), rev.perm.end());
      for (const Chamber& c : {Chamber::identity(n), rev}) {
        for (const auto& i : enumerate_fixed_points(n, k)) {
          WeightFunction w = weight_function(i, c);
          for (const auto& j : enumerate_fixed_points(n, k)) {
            CHECK(restrict(w, j) == restriction(i, j, c));
          }
        }
      }
    }
  }
}

TEST_CASE("chamber covariance of restrictions") {
  std::mt19937_64 rng(5);
  for (int n = 3; n <= 5; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int trial = 0; trial < 3; ++trial) {
        Chamber tau = random_chamber(rng, n);
        for (const auto& i : enumerate_fixed_points(n, k)) {
          WeightFunction w = weight_function(apply(tau, i), tau);
          for (const auto& j : enumerate_fixed_points(n, k)) {
            MultiPoly lhs = restrict(w, apply(tau, j));
            MultiPoly rhs = apply(tau, restriction(i, j, Chamber::identity(n)));
            CHECK(lhs == rhs);
          }
        }
      }
    }
  }
}

TEST_CASE("GKM relations") {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k < n; ++k) {
      MomentGraph g = build_moment_graph(n, k);
      for (const auto& p : g.vertices) {
        CHECK(gkm_check(stab_class(p, Chamber::identity(n)), g).ok());
      }
    }
  }
  MomentGraph g = build_moment_graph(4, 2);
  StabClass constant{fp(4, 2, "12"), {}};
  for (const auto& v : g.vertices) {
    constant.restrictions.emplace_back(v, MultiPoly::constant(equivariant_vars(4), Rational(1)));
  }
  CHECK(gkm_check(constant, g).ok());
  StabClass corrupted = stab_class(fp(4, 2, "13"), Chamber::identity(4));
  corrupted.restrictions[3].second += MultiPoly::constant(equivariant_vars(4), Rational(1));
  CheckOutcome bad = gkm_check(corrupted, g);
  CHECK(bad.status == Status::refuted);
  CHECK_FALSE(bad.failures.empty());
}

TEST_CASE("stable envelope axioms") {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k < n; ++k) {
      std::vector<Chamber> chambers{Chamber::identity(n), random_chamber(rng, n)};
      for (const auto& c : chambers) {
        for (const auto& p : enumerate_fixed_points(n, k)) {
          CheckOutcome out = axiom_check(stab_class(p, c), c);
          CAPTURE(out.name);
          CHECK(out.ok());
        }
      }
    }
  }
  // Every chamber of T*Gr(2,4).
  Chamber c = Chamber::identity(4);
  do {
    for (const auto& p : enumerate_fixed_points(4, 2)) {
      CHECK(axiom_check(stab_class(p, c), c).ok());
    }
  } while (std::next_permutation(c.perm.begin(), c.perm.end()));
  MultiPoly entry = poly(4, "h*(a2-a3+h)*(a2-a4+h)");
  CHECK(entry.degree_in(std::vector<std::size_t>{0, 1, 2, 3}) == 2);
}

TEST_CASE("restriction matrices are triangular") {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k <= std::min(3, n - 1); ++k) {
      for (const auto& i : enumerate_fixed_points(n, k)) {
        StabClass s = stab_class(i, Chamber::identity(n));
        for (const auto& [j, value] : s.restrictions) {
          if (!attracting_leq(i, j)) {
            CHECK(value.is_zero());
          }
        }
        CHECK(s.at(i) == repelling_euler_class(i, Chamber::identity(n)));
      }
    }
  }
}

TEST_CASE("serial and parallel stab classes agree") {
  for (const auto& p : enumerate_fixed_points(5, 2)) {
    StabClass a = stab_class(p, Chamber::identity(5), Execution::serial);
    StabClass b = stab_class(p, Chamber::identity(5), Execution::parallel);
    REQUIRE(a.restrictions.size() == b.restrictions.size());
    for (std::size_t idx = 0; idx < a.restrictions.size(); ++idx) {
      CHECK(a.restrictions[idx] == b.restrictions[idx]);
    }
  }
}
