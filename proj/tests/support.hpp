#pragma once

#include <random>
#include <string>
#include <vector>

#include "stabenv/multipoly.hpp"

namespace stabenv::testing {

inline VarSetPtr vars_of(std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return make_varset(std::move(v));
}

inline Rational random_rational(std::mt19937_64& rng, int span = 9) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t dim, int span = 97) {
  std::vector<Rational> p;
  for (std::size_t i = 0; i < dim; ++i) {
    p.push_back(random_rational(rng, span));
  }
  return p;
}

inline MultiPoly random_poly(std::mt19937_64& rng, const VarSetPtr& vars, int max_terms,
                             int max_degree) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_degree);
  std::vector<Term> terms;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m;
    for (std::size_t v = 0; v < vars->size(); ++v) {
      m.set(v, static_cast<unsigned>(exp(rng)));
    }
    terms.push_back({m, random_rational(rng)});
  }
  return MultiPoly::from_terms(vars, std::move(terms));
}

}  // namespace stabenv::testing
