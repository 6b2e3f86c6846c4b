#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "stabenv/factored_fraction.hpp"
#include "stabenv/geometry.hpp"
#include "stabenv/parallel.hpp"
#include "stabenv/report.hpp"

namespace stabenv {

// t1..tk, a1..an, h. Cached per (n, k).
VarSetPtr weight_vars(int n, int k);

/// One S_k summand as unexpanded products of linear forms.
struct WeightSummand {
  std::vector<MultiPoly> numerator;
  std::vector<MultiPoly> denominator;

  FactoredFraction fraction() const;
  Rational evaluate(const std::vector<Rational>& point) const;
};

/// W_tau(p_I) kept as its S_k summands over weight_vars(n, k).
struct WeightFunction {
  FixedPoint point;
  Chamber chamber;
  VarSetPtr vars_;
  std::vector<WeightSummand> summands;

  const VarSetPtr& vars() const { return vars_; }
  // The summed canonical rational function (computed on demand).
  RationalFunction expression() const;
  Rational evaluate(const std::vector<Rational>& point) const;
};

WeightFunction weight_function(const FixedPoint& p, const Chamber& c);

// Substitutes t_r = a_{j_r} summand by summand and sums. Throws
// NonPolynomialRestriction if the result keeps a denominator.
MultiPoly restrict(const WeightFunction& w, const FixedPoint& j);

// Same value straight from the linear factors, skipping summands with a
// vanishing factor: tau(restrict_std(tau^-1 I, tau^-1 J)).
MultiPoly restriction(const FixedPoint& i, const FixedPoint& j, const Chamber& c);

// Builds a_x - a_y + shift*h in some specialization, e.g. z(x - y) + shift.
using LinearForm = std::function<MultiPoly(int x, int y, int shift)>;

// Standard-chamber restriction with every linear factor built by form.
MultiPoly restriction_with(const FixedPoint& i, const FixedPoint& j, const VarSetPtr& vars,
                           const LinearForm& form);

// Weight-function restrictions W(p_I)|_{p_J} for every J.
struct StabClass {
  FixedPoint point;
  std::vector<std::pair<FixedPoint, MultiPoly>> restrictions;

  const MultiPoly& at(const FixedPoint& j) const;
};

StabClass stab_class(const FixedPoint& p, const Chamber& c, Execution exec = Execution::parallel);

// Every edge character divides the difference of the restrictions at its
// two ends.
CheckOutcome gkm_check(const StabClass& s, const MomentGraph& g);

// Support (vanishing off the chamber's componentwise order), normalization
// (diagonal = repelling Euler class) and the a-degree bound.
CheckOutcome axiom_check(const StabClass& s, const Chamber& c);

}  // namespace stabenv
