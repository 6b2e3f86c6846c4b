#pragma once

#include "stabenv/multipoly.hpp"

namespace stabenv {

/// Power series truncated by total degree: only terms of degree < order are
/// kept and every operation discards the rest.
class TruncatedSeries {
 public:
  TruncatedSeries(MultiPoly poly, int order);

  const VarSetPtr& vars() const { return poly_.vars(); }
  int order() const { return order_; }
  const MultiPoly& poly() const { return poly_; }
  Rational coefficient(const Monomial& mono) const;

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const Rational& scalar);

  // Same series re-truncated at a smaller order.
  TruncatedSeries truncated(int order) const;

 private:
  MultiPoly poly_;
  int order_;
};

inline TruncatedSeries operator+(TruncatedSeries l, const TruncatedSeries& r) { return l += r; }
inline TruncatedSeries operator-(TruncatedSeries l, const TruncatedSeries& r) { return l -= r; }
inline TruncatedSeries operator*(TruncatedSeries l, const TruncatedSeries& r) { return l *= r; }

// Product keeping only terms of total degree < order.
MultiPoly truncated_mul(const MultiPoly& lhs, const MultiPoly& rhs, int order);

// 1/s by Newton iteration; needs a nonzero constant term.
TruncatedSeries series_inverse(const TruncatedSeries& s);

// Square root with positive constant term by Newton iteration. Throws
// ConstantTermNotSquare unless the constant term is a positive rational
// square.
TruncatedSeries series_sqrt(const TruncatedSeries& s);

}  // namespace stabenv
