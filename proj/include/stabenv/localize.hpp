#pragma once

#include <string>

#include "stabenv/weightfn.hpp"

namespace stabenv {

/// Sum over fixed points J of W(p_I)|_{p_J} / e(T_{p_J} X), canonical.
struct LocalizationSum {
  FixedPoint point;
  Chamber chamber;
  RationalFunction value;
};

/// h^{k(n-k)} times the nonequivariant limit of the integral.
struct IntegralValue {
  FixedPoint point;
  Rational value;
  std::string method;
};

// Terms with J outside the chamber's componentwise order vanish and are
// skipped.
LocalizationSum localization_sum(const FixedPoint& p, const Chamber& c,
                                 Execution exec = Execution::parallel);

// Untruncated sum built by substituting t = a_J into W_c(p_I) itself.
RationalFunction localization_sum_from_weight_function(const FixedPoint& p, const Chamber& c,
                                                       Execution exec = Execution::parallel);

// The single variable z of the a_s -> s z h specialization.
VarSetPtr z_vars();

// restriction(I, J) with a_s -> s z h, divided by h^{k(n-k)}.
MultiPoly restriction_z(const FixedPoint& i, const FixedPoint& j);

// h^{k(n-k)} times the localization sum after a_s -> s z h, as a function of z.
RationalFunction scaled_sum_z(const FixedPoint& p, Execution exec = Execution::parallel);

// Limit z -> 0 of scaled_sum_z. Throws PoleAtZero or NonIntegerResult.
IntegralValue integral_via_z_limit(const FixedPoint& p, Execution exec = Execution::parallel);

/// The chart h = 1, a_n = 0 with variables a1..a_{n-1}. A sum of terms built
/// from linear forms in a_i - a_j and h, all of one degree, is translation
/// invariant and homogeneous, so two such sums agree iff they agree here.
struct AffineChart {
  int n = 0;
  VarSetPtr vars;
  Bindings bindings;  // from equivariant_vars(n)

  // a_x - a_y + shift, directly in chart variables.
  MultiPoly form(int x, int y, int shift) const;
  // Throws std::invalid_argument unless w is a_i - a_j combinations plus a
  // multiple of h.
  MultiPoly linear(const MultiPoly& w) const;
};
const AffineChart& affine_chart(int n);

// localization_sum(p, identity) on the chart, with restrictions computed in
// chart variables.
FactoredFraction localization_sum_on_chart(const FixedPoint& p, Execution exec = Execution::parallel);

// Sets a = 0 in a canonical localization sum and scales by h^{k(n-k)}.
IntegralValue integral_from_sum(const LocalizationSum& s);

// C(n, k) * 2k(n-k), compared against ENVELOPE_MAX_COST (default 360,
// which admits every k for n <= 6).
long full_multivariate_cost(int n, int k);
long full_multivariate_cost_limit();

// integral_from_sum(localization_sum(p, id)); throws CostLimitExceeded above
// the cost limit.
IntegralValue integral_full_multivariate(const FixedPoint& p, Execution exec = Execution::parallel);

// prod_{x<y} (a_x - a_y).
MultiPoly full_vandermonde(int n);

// sum_J N'_J V_J V_{J^c} (-1)^{kn + C(k,2) + |J|} / (D'_J V^h_{J,J^c}).
// Dividing by full_vandermonde(n) gives localization_sum(p, id).
FactoredFraction vandermonde_combined_sum(const FixedPoint& p, Execution exec = Execution::parallel);

// The numerator of vandermonde_combined_sum is divisible by the full
// Vandermonde and vanishes under a_y -> a_x for three sampled pairs.
CheckOutcome vandermonde_divisibility_check(const FixedPoint& p,
                                            Execution exec = Execution::parallel);

// Integral with chamber tau equals tau applied to the standard integral of
// tau^{-1}(p), compared as rational functions before any limit.
CheckOutcome chamber_covariance_check(const FixedPoint& p, const Chamber& tau,
                                      Execution exec = Execution::parallel);

}  // namespace stabenv
