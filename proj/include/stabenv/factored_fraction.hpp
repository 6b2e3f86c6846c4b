#pragma once

#include <vector>

#include "stabenv/rational_function.hpp"

namespace stabenv {

struct Factor {
  MultiPoly poly;  // normalized, non-constant
  unsigned mult = 1;
};

/// num / prod(factor^mult) with the denominator kept factored. Sums use the
/// lcm of the factor multisets and cancellation is trial division by each
/// factor, so no polynomial gcd is needed while the factors are linear.
class FactoredFraction {
 public:
  FactoredFraction() = default;
  explicit FactoredFraction(MultiPoly num);
  // den polys may be arbitrary nonzero polynomials; constants and monomial
  // content are split off.
  FactoredFraction(MultiPoly num, const std::vector<MultiPoly>& den);
  // prod(num) / prod(den). Matching normalized factors cancel before the
  // numerator is expanded; trial division runs only for non-linear factors.
  static FactoredFraction from_products(const VarSetPtr& vars, const std::vector<MultiPoly>& num,
                                        const std::vector<MultiPoly>& den);

  const MultiPoly& num() const { return num_; }
  const std::vector<Factor>& factors() const { return factors_; }
  const VarSetPtr& vars() const { return num_.vars(); }
  bool is_zero() const { return num_.is_zero(); }
  int denominator_degree() const;

  FactoredFraction operator-() const;
  FactoredFraction& operator+=(const FactoredFraction& rhs);
  FactoredFraction& operator-=(const FactoredFraction& rhs);
  FactoredFraction& operator*=(const FactoredFraction& rhs);
  FactoredFraction& operator*=(const MultiPoly& rhs);
  // Multiplies by 1/poly.
  FactoredFraction& divide_by(const MultiPoly& poly, unsigned mult = 1);

  Rational evaluate(const std::vector<Rational>& point) const;

  MultiPoly denominator() const;
  RationalFunction to_rational_function() const;

 private:
  void absorb(const MultiPoly& poly, unsigned mult);
  void insert_factor(MultiPoly norm, unsigned mult);
  void cancel();

  MultiPoly num_;
  std::vector<Factor> factors_;  // sorted by poly_less, distinct
};

inline FactoredFraction operator+(FactoredFraction l, const FactoredFraction& r) { return l += r; }
inline FactoredFraction operator-(FactoredFraction l, const FactoredFraction& r) { return l -= r; }
inline FactoredFraction operator*(FactoredFraction l, const FactoredFraction& r) { return l *= r; }

// Total order on polynomials over one VarSet (term by term).
bool poly_less(const MultiPoly& lhs, const MultiPoly& rhs);

FactoredFraction substitute(const FactoredFraction& f, const Bindings& bindings,
                            const VarSetPtr& target);

}  // namespace stabenv
