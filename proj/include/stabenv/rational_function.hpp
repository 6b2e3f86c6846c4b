#pragma once

#include <string>
#include <string_view>

#include "stabenv/multipoly.hpp"

namespace stabenv {

/// Quotient num/den kept in canonical form: gcd(num, den) = 1, integer
/// coefficients with no common integer factor, positive leading coefficient
/// of den. Equality is comparison of canonical forms.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(MultiPoly num);
  RationalFunction(MultiPoly num, MultiPoly den);

  // Skips the polynomial gcd; the caller guarantees num and den are coprime.
  static RationalFunction from_coprime(MultiPoly num, MultiPoly den);
  static RationalFunction constant(VarSetPtr vars, const Rational& value);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const VarSetPtr& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  // num/den as a polynomial; throws NonPolynomialRestriction otherwise.
  MultiPoly as_polynomial() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);
  RationalFunction inverse() const;

  Rational evaluate(const std::vector<Rational>& point) const;

  // "num" when den is 1, otherwise "(num)/(den)".
  std::string to_string() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  void scale_normalize();

  MultiPoly num_;
  MultiPoly den_;
};

inline RationalFunction operator+(RationalFunction l, const RationalFunction& r) { return l += r; }
inline RationalFunction operator-(RationalFunction l, const RationalFunction& r) { return l -= r; }
inline RationalFunction operator*(RationalFunction l, const RationalFunction& r) { return l *= r; }
inline RationalFunction operator/(RationalFunction l, const RationalFunction& r) { return l /= r; }

RationalFunction canonicalize(const RationalFunction& f);

// Throws DenominatorVanishes when the image denominator is zero.
RationalFunction substitute(const RationalFunction& f, const Bindings& bindings,
                            const VarSetPtr& target);

// Value at var = 0; the VarSet is unchanged.
// Throws PoleAtZero when only the denominator vanishes there.
RationalFunction rational_limit_at_zero(const RationalFunction& f, std::string_view var);

}  // namespace stabenv
