#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "stabenv/geometry.hpp"
#include "stabenv/parse.hpp"

using namespace stabenv;

namespace {

MultiPoly poly(int n, const std::string& text) {
  return parse_poly(text, equivariant_vars(n));
}

FixedPoint fp(int n, int k, const std::string& text) { return parse_fixed_point(n, k, text); }

}  // namespace

TEST_CASE("fixed points enumerate lexicographically") {
  auto p41 = enumerate_fixed_points(4, 1);
  REQUIRE(p41.size() == 4);
  CHECK(p41[3].to_string() == "4");
  auto p42 = enumerate_fixed_points(4, 2);
  std::vector<std::string> labels;
  for (const auto& p : p42) {
    labels.push_back(p.label());
  }
  CHECK(labels == std::vector<std::string>{"<12>", "<13>", "<14>", "<23>", "<24>", "<34>"});
  CHECK(enumerate_fixed_points(5, 2).size() == 10);
  CHECK(enumerate_fixed_points(9, 3).size() == 84);
  CHECK(fp(4, 2, "3,1") == fp(4, 2, "13"));
  CHECK_THROWS(fp(4, 2, "1,1"));
  CHECK_THROWS(fp(4, 2, "1,5"));
  CHECK_THROWS(fp(4, 2, "1"));
}

TEST_CASE("chambers act on points and variables") {
  Chamber tau = parse_chamber(4, "4321");
  CHECK(apply(tau, fp(4, 2, "12")) == fp(4, 2, "34"));
  CHECK(apply(tau, poly(4, "a1 - a2 + h")) == poly(4, "a4 - a3 + h"));
  CHECK(tau.inverse() == tau);
  Chamber cyc = parse_chamber(4, "2,3,4,1");
  CHECK(apply(cyc.inverse(), apply(cyc, fp(4, 2, "24"))) == fp(4, 2, "24"));
  CHECK_THROWS(parse_chamber(4, "1123"));
}

TEST_CASE("tangent Euler class examples") {
  CHECK(tangent_euler_class(fp(4, 1, "1")) ==
        poly(4, "(a2-a1)*(a1-a2+h)*(a3-a1)*(a1-a3+h)*(a4-a1)*(a1-a4+h)"));
  for (int n = 2; n <= 6; ++n) {
    CHECK(tangent_euler_class(enumerate_fixed_points(n, n - 1).front()).total_degree() == 2 * (n - 1));
  }
  // a_s -> s z h turns each weight pair into h^2 z(v - j)(z(j - v) + 1).
  const int n = 5;
  auto vars = equivariant_vars(n);
  auto target = make_varset({"z", "h"});
  MultiPoly z = MultiPoly::variable(target, "z");
  MultiPoly h = MultiPoly::variable(target, "h");
  Bindings at;
  for (int s = 1; s <= n; ++s) {
    at.emplace(a_name(s), z * h * MultiPoly::constant(target, Rational(s)));
  }
  for (const auto& p : enumerate_fixed_points(n, 2)) {
    MultiPoly expect = MultiPoly::constant(target, Rational(1));
    for (int v : p.complement()) {
      for (int j : p.indices) {
        expect *= z * MultiPoly::constant(target, Rational(v - j));
        expect *= z * MultiPoly::constant(target, Rational(j - v)) + MultiPoly::constant(target, Rational(1));
      }
    }
    expect *= h.pow(2 * 2 * (n - 2));
    CHECK(substitute(tangent_euler_class(p), at, target) == expect);
  }
}

TEST_CASE("repelling Euler classes of T*P3") {
  Chamber id = Chamber::identity(4);
  CHECK(repelling_euler_class(fp(4, 1, "1"), id) == poly(4, "(a1-a2+h)*(a1-a3+h)*(a1-a4+h)"));
  CHECK(repelling_euler_class(fp(4, 1, "4"), id) == poly(4, "(a1-a4)*(a2-a4)*(a3-a4)"));
  CHECK(repelling_euler_class(fp(4, 1, "2"), id) == poly(4, "(a1-a2)*(a2-a3+h)*(a2-a4+h)"));
}

TEST_CASE("repelling times attracting is the tangent class") {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      std::vector<Chamber> chambers{Chamber::identity(n), Chamber::identity(n)};
      std::reverse(chambers[1].perm.begin(), chambers[1].perm.end());
      for (const auto& c : chambers) {
        for (const auto& p : enumerate_fixed_points(n, k)) {
          CHECK(repelling_weights(p, c).size() == static_cast<std::size_t>(k * (n - k)));
          CHECK(repelling_euler_class(p, c) * attracting_euler_class(p, c) == tangent_euler_class(p));
        }
      }
    }
  }
}

TEST_CASE("componentwise order examples") {
  CHECK(attracting_leq(fp(4, 2, "13"), fp(4, 2, "24")));
  CHECK_FALSE(attracting_leq(fp(4, 2, "13"), fp(4, 2, "12")));
  int above = 0;
  for (const auto& j : enumerate_fixed_points(4, 2)) {
    above += attracting_leq(fp(4, 2, "13"), j);
  }
  CHECK(above == 5);
  Chamber rev = parse_chamber(4, "4321");
  CHECK(attracting_leq(fp(4, 2, "34"), fp(4, 2, "12"), rev));
  CHECK_FALSE(attracting_leq(fp(4, 2, "12"), fp(4, 2, "34"), rev));
}

TEST_CASE("componentwise order is a partial order") {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      auto pts = enumerate_fixed_points(n, k);
      for (const auto& x : pts) {
        CHECK(attracting_leq(x, x));
        for (const auto& y : pts) {
          if (x != y && attracting_leq(x, y)) {
            CHECK_FALSE(attracting_leq(y, x));
            CHECK(x.weight() < y.weight());
          }
          for (const auto& w : pts) {
            if (attracting_leq(x, y) && attracting_leq(y, w)) {
              CHECK(attracting_leq(x, w));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("moment graph") {
  auto g21 = build_moment_graph(2, 1);
  REQUIRE(g21.edges.size() == 1);
  CHECK(g21.edges[0].zero_section == poly(2, "a2 - a1"));
  auto g42 = build_moment_graph(4, 2);
  CHECK(g42.vertices.size() == 6);
  CHECK(g42.degree(fp(4, 2, "12")) == 4);
  std::set<std::string> nbrs;
  for (const auto& e : g42.edges) {
    if (e.lower == fp(4, 2, "12")) {
      nbrs.insert(e.upper.label());
    }
  }
  CHECK(nbrs == std::set<std::string>{"<13>", "<14>", "<23>", "<24>"});
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k < n; ++k) {
      auto g = build_moment_graph(n, k);
      MultiPoly h = MultiPoly::variable(equivariant_vars(n), kHbar);
      for (const auto& v : g.vertices) {
        CHECK(g.degree(v) == static_cast<std::size_t>(k * (n - k)));
      }
      for (const auto& e : g.edges) {
        CHECK(e.zero_section + e.cotangent == h);
        CHECK(e.q > e.s);
        CHECK(e.lower.contains(e.s));
        CHECK(e.upper.contains(e.q));
        int shared = 0;
        for (int i : e.lower.indices) {
          shared += e.upper.contains(i);
        }
        CHECK(shared == k - 1);
      }
    }
  }
}

TEST_CASE("partitions and Omega") {
  CHECK(omega(make_partition(4, 2, {1})) == fp(4, 2, "13"));
  CHECK(omega(make_partition(4, 2, {})) == fp(4, 2, "12"));
  CHECK(omega(make_partition(4, 2, {2, 2})) == fp(4, 2, "34"));
  CHECK(omega(make_partition(7, 3, {3, 3, 3, 3})) == fp(7, 3, "567"));
  CHECK_THROWS(make_partition(4, 2, {3}));
  CHECK_THROWS(make_partition(4, 2, {1, 1, 1}));
  CHECK_THROWS(make_partition(4, 2, {1, 2}));
  CHECK(parse_partition(5, 2, "2,1").to_string() == "(2,1)");
}

TEST_CASE("Omega is a bijection onto fixed points") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      auto parts = enumerate_partitions(n, k);
      auto pts = enumerate_fixed_points(n, k);
      REQUIRE(parts.size() == pts.size());
      std::set<FixedPoint> image;
      for (const auto& lam : parts) {
        FixedPoint p = omega(lam);
        image.insert(p);
        CHECK(omega_inverse(p) == lam);
        CHECK(p.weight() == lam.size() + k * (k + 1) / 2);
        CHECK(lam.conjugate().conjugate() == lam);
        CHECK(lam.complement().complement() == lam);
        CHECK(lam.complement().size() == k * (n - k) - lam.size());
      }
      CHECK(image.size() == pts.size());
    }
  }
}
