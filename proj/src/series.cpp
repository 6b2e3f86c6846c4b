#include "stabenv/series.hpp"

#include <algorithm>
#include <unordered_map>

#include "stabenv/errors.hpp"

namespace stabenv {

namespace {

MultiPoly truncate(const MultiPoly& p, int order) {
  std::vector<Term> kept;
  for (const auto& t : p.terms()) {
    if (t.mono.degree < order) {
      kept.push_back(t);
    }
  }
  return MultiPoly::from_terms(p.vars(), std::move(kept));
}

std::optional<Integer> exact_sqrt(const Integer& v) {
  if (sgn(v) < 0) {
    return std::nullopt;
  }
  Integer r = sqrt(v);
  if (r * r != v) {
    return std::nullopt;
  }
  return r;
}

}  // namespace

MultiPoly truncated_mul(const MultiPoly& lhs, const MultiPoly& rhs, int order) {
  require_same_vars(lhs, rhs);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  Rational prod;
  // Terms are stored by descending degree, so walk rhs from its low end and
  // stop once the degree budget is exceeded.
  const auto& r = rhs.terms();
  for (const auto& l : lhs.terms()) {
    int budget = order - l.mono.degree;
    if (budget <= 0) {
      continue;
    }
    for (auto it = r.rbegin(); it != r.rend() && it->mono.degree < budget; ++it) {
      mpq_mul(prod.get_mpq_t(), l.coeff.get_mpq_t(), it->coeff.get_mpq_t());
      auto [pos, inserted] = acc.try_emplace(monomial_mul(l.mono, it->mono), prod);
      if (!inserted) {
        pos->second += prod;
      }
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    terms.push_back({m, std::move(c)});
  }
  return MultiPoly::from_terms(lhs.vars(), std::move(terms));
}

TruncatedSeries::TruncatedSeries(MultiPoly poly, int order)
    : poly_(truncate(poly, order)), order_(order) {
  if (order < 1) {
    throw std::invalid_argument("series order must be positive");
  }
}

Rational TruncatedSeries::coefficient(const Monomial& mono) const {
  if (mono.degree >= order_) {
    throw InsufficientOrder("coefficient of degree " + std::to_string(mono.degree) +
                            " requested from a series truncated at " + std::to_string(order_));
  }
  auto it = std::lower_bound(poly_.terms().begin(), poly_.terms().end(), mono,
                             [](const Term& t, const Monomial& m) { return grlex_greater(t.mono, m); });
  if (it != poly_.terms().end() && it->mono == mono) {
    return it->coeff;
  }
  return Rational(0);
}

TruncatedSeries TruncatedSeries::operator-() const { return TruncatedSeries(-poly_, order_); }

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  order_ = std::min(order_, rhs.order_);
  poly_ = truncate(poly_ + rhs.poly_, order_);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  order_ = std::min(order_, rhs.order_);
  poly_ = truncate(poly_ - rhs.poly_, order_);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& rhs) {
  order_ = std::min(order_, rhs.order_);
  poly_ = truncated_mul(poly_, rhs.poly_, order_);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
  poly_ *= scalar;
  return *this;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  return TruncatedSeries(poly_, std::min(order, order_));
}

TruncatedSeries series_inverse(const TruncatedSeries& s) {
  Rational c0 = s.coefficient(Monomial{});
  if (sgn(c0) == 0) {
    throw DivisionByZero("series inverse needs a nonzero constant term");
  }
  const VarSetPtr& vars = s.vars();
  MultiPoly two = MultiPoly::constant(vars, Rational(2));
  MultiPoly y = MultiPoly::constant(vars, 1 / c0);
  int prec = 1;
  while (prec < s.order()) {
    prec = std::min(2 * prec, s.order());
    // y <- y (2 - s y)
    MultiPoly sy = truncated_mul(s.poly(), y, prec);
    y = truncated_mul(y, two - sy, prec);
  }
  return TruncatedSeries(y, s.order());
}

TruncatedSeries series_sqrt(const TruncatedSeries& s) {
  Rational c0 = s.coefficient(Monomial{});
  auto num = exact_sqrt(c0.get_num());
  auto den = exact_sqrt(c0.get_den());
  if (sgn(c0) <= 0 || !num || !den) {
    throw ConstantTermNotSquare("constant term " + c0.get_str() + " is not a positive square");
  }
  const VarSetPtr& vars = s.vars();
  Rational root(*num, *den);
  MultiPoly r = MultiPoly::constant(vars, root);
  int prec = 1;
  while (prec < s.order()) {
    prec = std::min(2 * prec, s.order());
    // r <- r + (s - r^2) / (2 r)
    MultiPoly resid = truncate(s.poly(), prec) - truncated_mul(r, r, prec);
    TruncatedSeries inv = series_inverse(TruncatedSeries(r, prec));
    MultiPoly step = truncated_mul(resid, inv.poly(), prec);
    step *= Rational(1, 2);
    r += step;
  }
  return TruncatedSeries(r, s.order());
}

}  // namespace stabenv
