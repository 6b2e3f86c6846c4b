#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "stabenv/errors.hpp"
#include "stabenv/parse.hpp"
#include "stabenv/simplex.hpp"

using namespace stabenv;

namespace {

MultiPoly abc(const std::string& text) { return parse_poly(text, abc_vars()); }

// Rows from the top of the triangle, each left to right.
std::vector<std::vector<Rational>> rows(const SimplexLayer& layer) {
  std::vector<std::vector<Rational>> out;
  for (int r = layer.n - 1; r >= 1; --r) {
    std::vector<Rational> row;
    for (int i1 = layer.n - r; i1 >= 1; --i1) {
      row.push_back(layer.at(i1, i1 + r));
    }
    out.push_back(row);
  }
  return out;
}

std::vector<std::vector<Rational>> q(std::initializer_list<std::initializer_list<int>> init) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : init) {
    std::vector<Rational> r;
    for (int v : row) {
      r.emplace_back(v);
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace

TEST_CASE("layer examples") {
  CHECK(build_layer(2).entries.size() == 1);
  CHECK(build_layer(2).at(1, 2) == 1);
  CHECK(rows(build_layer(4)) == q({{2}, {3, 3}, {1, 2, 1}}));
  CHECK(rows(build_layer(5)) == q({{2}, {5, 5}, {4, 10, 4}, {1, 4, 4, 1}}));
  CHECK(format_layer_text(build_layer(4)) == "  2\n 3 3\n1 2 1\n");
  CHECK(build_extended_layer(4).at(1, 1) == 0);
  CHECK(build_extended_layer(4).at(2, 2) == -2);
  CHECK(build_extended_layer(4).at(3, 3) == -2);
  CHECK(build_extended_layer(4).at(4, 4) == 0);
}

TEST_CASE("layer sources agree") {
  for (int n = 3; n <= 7; ++n) {
    SimplexLayer gr2 = build_layer(n, LayerSource::gr2_formula);
    CHECK(build_layer(n, LayerSource::closed_form).entries == gr2.entries);
    CHECK(build_layer(n, LayerSource::localization).entries == gr2.entries);
    CHECK(gr2.entries.size() == static_cast<std::size_t>(n * (n - 1) / 2));
    for (const auto& [key, v] : gr2.entries) {
      CHECK(is_integer(v));
      CHECK(v > 0);
    }
  }
}

TEST_CASE("left-right symmetry") {
  for (int n = 2; n <= 10; ++n) {
    SimplexLayer layer = build_layer(n);
    for (const auto& [key, v] : layer.entries) {
      CHECK(layer.at(n + 1 - key.second, n + 1 - key.first) == v);
    }
  }
}

TEST_CASE("four-neighbor addition") {
  SimplexLayer l4 = build_layer(4);
  SimplexLayer l5 = build_layer(5);
  CHECK(l5.at(2, 4) == l4.at(2, 4) + l4.at(1, 4) + l4.at(2, 3) + l4.at(1, 3));
  CHECK(l5.at(2, 4) == 10);
  CHECK(four_neighbor_check(l4, l5, NeighborMode::with_exception).ok());
  CheckOutcome plain = four_neighbor_check(l4, l5, NeighborMode::plain);
  CHECK(plain.status == Status::refuted);
  bool saw = false;
  for (const auto& f : plain.failures) {
    saw = saw || f.find("<2,3>_5 = 4 but the four neighbors give 2 + 3 + 0 + 1 = 6") != std::string::npos;
  }
  CHECK(saw);
  SimplexLayer e4 = build_extended_layer(4);
  SimplexLayer e5 = build_extended_layer(5);
  CHECK(e5.at(2, 3) == e4.at(2, 3) + e4.at(1, 3) + e4.at(2, 2) + e4.at(1, 2));
  CHECK(four_neighbor_check(e4, e5, NeighborMode::extended).ok());
  CHECK_THROWS_AS(four_neighbor_check(l4, e5, NeighborMode::extended), std::invalid_argument);
  CHECK_THROWS_AS(four_neighbor_check(l4, build_layer(6), NeighborMode::plain), std::invalid_argument);
  CheckOutcome theorem = four_neighbor_theorem_check(3, 10);
  CHECK(theorem.status == Status::verified);
  CHECK(theorem.cases > 100);
  CHECK(extended_recurrence_check(3, 10).status == Status::verified);
  // The apex convention <1,2>_2 := 1 does not feed layer 3: <1,3>_3 = 2.
  for (CheckOutcome apex : {four_neighbor_theorem_check(2, 3), extended_recurrence_check(2, 3)}) {
    CHECK(apex.status == Status::refuted);
    REQUIRE(apex.failures.size() == 1);
    CHECK(apex.failures[0] == "<1,3>_3 = 2 but the four neighbors give 0 + 0 + 1 + 0 = 1");
  }
}

TEST_CASE("layer polynomials and their reduction") {
  CHECK(layer_to_polynomial(build_layer(3)) == abc("a+2*b+c"));
  CHECK(layer_to_polynomial(build_layer(4)) == abc("(a+2*b+c)*(a+b+c)"));
  CHECK(layer_to_polynomial(build_layer(5)) == abc("(a+2*b+c)*(a^2+2*a*b+3*a*c+b^2+2*b*c+c^2)"));
  CHECK(reduce_layer(layer_to_polynomial(build_layer(3))) == abc("1"));
  CHECK(reduce_layer(layer_to_polynomial(build_layer(5))) == abc("a^2+2*a*b+3*a*c+b^2+2*b*c+c^2"));
  CHECK(reduce_layer(layer_to_polynomial(build_layer(6))) ==
        abc("a^3+3*a^2*b+3*a*b^2+b^3+6*a^2*c+8*a*b*c+3*b^2*c+6*a*c^2+3*b*c^2+c^3"));
  CHECK_THROWS_AS(reduce_layer(abc("a+b")), NotDivisible);
  CHECK(divisibility_check(12).status == Status::conjecture_supported);
}

TEST_CASE("reduced simplex") {
  ReducedLayer r1 = reduced_layer(1);
  CHECK(r1.size() == 1);
  CHECK(r1.at({1, 1}) == 1);
  ReducedLayer r4 = reduced_layer(4);
  CHECK(r4.at({3, 2}) == 8);
  ReducedLayer r3 = reduced_layer(3);
  CHECK(r4.at({3, 2}) == r3.at({3, 2}) + r3.at({2, 2}) + r3.at({2, 1}) + r3.at({1, 1}));
  CHECK(format_reduced_text(r4, 4) == "   1\n  3 3\n 3 8 3\n1 6 6 1\n");
  CheckOutcome rec = reduced_recurrence_check(12);
  CHECK(rec.status == Status::conjecture_supported);
  CHECK(rec.failures.empty());
  CHECK_THROWS_AS(reduced_recurrence_check(2), std::invalid_argument);
}

TEST_CASE("abc <-> xyz monomial maps") {
  for (unsigned i = 0; i <= 4; ++i) {
    for (unsigned j = 0; j <= 4; ++j) {
      for (unsigned k = 0; k <= 4; ++k) {
        Monomial m;
        m.set(0, i);
        m.set(1, j);
        m.set(2, k);
        CHECK(xyz_to_abc(abc_to_xyz(m)) == m);
      }
    }
  }
  Monomial bad;
  bad.set(0, 1);
  bad.set(1, 2);
  bad.set(2, 1);
  CHECK_THROWS_AS(xyz_to_abc(bad), std::invalid_argument);
  // Multiplying by a, b, c becomes multiplying by xy, x, xyz, so a + 2b + c
  // acts as xy + 2x + xyz.
  const unsigned shifts[3][3] = {{1, 1, 0}, {1, 0, 0}, {1, 1, 1}};
  for (unsigned i = 0; i <= 3; ++i) {
    for (unsigned j = 0; j <= 3; ++j) {
      Monomial m;
      m.set(0, i);
      m.set(1, j);
      m.set(2, 1);
      for (std::size_t v = 0; v < 3; ++v) {
        Monomial mv = m;
        mv.set(v, m[v] + 1u);
        Monomial expected = abc_to_xyz(m);
        for (std::size_t w = 0; w < 3; ++w) {
          expected.set(w, expected[w] + shifts[v][w]);
        }
        CHECK(abc_to_xyz(mv) == expected);
      }
    }
  }
}

TEST_CASE("generating functions") {
  CHECK(generating_function_coeff(4, 2, 3, 30) == 2);
  CHECK(generating_function_coeff(5, 2, 4, 30) == 10);
  CHECK_THROWS_AS(generating_function_coeff(10, 2, 4, 30), InsufficientOrder);
  GeneratingFunctions gf = generating_functions(30);
  for (int n = 2; n <= 8; ++n) {
    SimplexLayer layer = build_layer(n);
    for (const auto& [key, v] : layer.entries) {
      CHECK(generating_function_coeff(gf, n, key.first, key.second) == v);
    }
  }
  // B lists the reduced simplex through the monomial map.
  for (int l = 1; l <= 6; ++l) {
    for (const auto& [key, v] : reduced_layer(l)) {
      auto [r, c] = key;
      Monomial m;
      m.set(0, static_cast<unsigned>(l));
      m.set(1, static_cast<unsigned>(r));
      m.set(2, static_cast<unsigned>(c));
      CHECK(gf.b.coefficient(m) == v);
    }
  }
}

TEST_CASE("Narayana diagonal of B") {
  GeneratingFunctions gf = generating_functions(30);
  for (int l = 1; l <= 8; ++l) {
    for (int c = 1; c <= l; ++c) {
      Monomial m;
      m.set(0, static_cast<unsigned>(l));
      m.set(1, static_cast<unsigned>(l));
      m.set(2, static_cast<unsigned>(c));
      CHECK(gf.b.coefficient(m) == Rational(narayana(l, c)));
    }
  }
}

TEST_CASE("higher-k export") {
  auto layer = build_layer_k(6, 3);
  CHECK(layer.size() == 20);
  for (const auto& [p, v] : layer) {
    CHECK(v > 0);
  }
  CHECK_THROWS_AS(build_layer_k(5, 3, LayerSource::gr2_formula), std::invalid_argument);
}
