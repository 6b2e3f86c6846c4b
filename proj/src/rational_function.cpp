#include "stabenv/rational_function.hpp"

#include "stabenv/errors.hpp"

namespace stabenv {

RationalFunction::RationalFunction(MultiPoly num)
    : num_(std::move(num)), den_(MultiPoly::constant(num_.vars(), Rational(1))) {
  scale_normalize();
}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den) {
  require_same_vars(num, den);
  if (den.is_zero()) {
    throw DivisionByZero("rational function with zero denominator");
  }
  if (num.is_zero()) {
    num_ = std::move(num);
    den_ = MultiPoly::constant(num_.vars(), Rational(1));
    return;
  }
  if (!den.is_constant() && !num.is_constant()) {
    MultiPoly g = poly_gcd(num, den);
    if (!g.is_constant()) {
      num = exact_divide(num, g);
      den = exact_divide(den, g);
    }
  }
  num_ = std::move(num);
  den_ = std::move(den);
  scale_normalize();
}

RationalFunction RationalFunction::from_coprime(MultiPoly num, MultiPoly den) {
  require_same_vars(num, den);
  if (den.is_zero()) {
    throw DivisionByZero("rational function with zero denominator");
  }
  RationalFunction f;
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  if (f.num_.is_zero()) {
    f.den_ = MultiPoly::constant(f.num_.vars(), Rational(1));
  }
  f.scale_normalize();
  return f;
}

RationalFunction RationalFunction::constant(VarSetPtr vars, const Rational& value) {
  return RationalFunction(MultiPoly::constant(std::move(vars), value));
}

void RationalFunction::scale_normalize() {
  if (num_.is_zero()) {
    return;
  }
  // Make both sides integral and jointly primitive, den leading coeff > 0.
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto* p : {&num_, &den_}) {
    for (const auto& t : p->terms()) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
  }
  for (const auto* p : {&num_, &den_}) {
    for (const auto& t : p->terms()) {
      Integer scaled = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(den_.leading_coeff()) < 0) {
    scale = -scale;
  }
  if (scale != 1) {
    num_ *= scale;
    den_ *= scale;
  }
}

MultiPoly RationalFunction::as_polynomial() const {
  if (!is_polynomial()) {
    throw NonPolynomialRestriction("not a polynomial: " + to_string());
  }
  return num_ * (1 / den_.constant_value());
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  require_same_vars(num_, rhs.num_);
  if (rhs.is_zero()) {
    return *this;
  }
  if (is_zero()) {
    return *this = rhs;
  }
  if (den_ == rhs.den_) {
    *this = RationalFunction(num_ + rhs.num_, den_);
    return *this;
  }
  MultiPoly g = poly_gcd(den_, rhs.den_);
  MultiPoly lcof = exact_divide(rhs.den_, g);
  MultiPoly rcof = exact_divide(den_, g);
  *this = RationalFunction(num_ * lcof + rhs.num_ * rcof, den_ * lcof);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  return *this += -rhs;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  require_same_vars(num_, rhs.num_);
  if (is_zero() || rhs.is_zero()) {
    *this = RationalFunction(MultiPoly(num_.vars()));
    return *this;
  }
  // Cross-cancel so the products stay coprime.
  MultiPoly g1 = poly_gcd(num_, rhs.den_);
  MultiPoly g2 = poly_gcd(rhs.num_, den_);
  MultiPoly n = exact_divide(num_, g1) * exact_divide(rhs.num_, g2);
  MultiPoly d = exact_divide(den_, g2) * exact_divide(rhs.den_, g1);
  *this = from_coprime(std::move(n), std::move(d));
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  return *this *= rhs.inverse();
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) {
    throw DivisionByZero("inverse of the zero rational function");
  }
  return from_coprime(den_, num_);
}

Rational RationalFunction::evaluate(const std::vector<Rational>& point) const {
  Rational d = den_.evaluate(point);
  if (sgn(d) == 0) {
    throw DenominatorVanishes("denominator vanishes at the evaluation point");
  }
  return num_.evaluate(point) / d;
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) {
    return num_.to_string();
  }
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction canonicalize(const RationalFunction& f) {
  return RationalFunction(f.num(), f.den());
}

RationalFunction substitute(const RationalFunction& f, const Bindings& bindings,
                            const VarSetPtr& target) {
  MultiPoly den = substitute(f.den(), bindings, target);
  if (den.is_zero()) {
    throw DenominatorVanishes("denominator vanishes under substitution: " + f.den().to_string());
  }
  return RationalFunction(substitute(f.num(), bindings, target), std::move(den));
}

RationalFunction rational_limit_at_zero(const RationalFunction& f, std::string_view var) {
  const VarSetPtr& vars = f.vars();
  Bindings zero{{std::string(var), MultiPoly(vars)}};
  vars->require(var);
  MultiPoly den = substitute(f.den(), zero, vars);
  MultiPoly num = substitute(f.num(), zero, vars);
  if (den.is_zero()) {
    if (num.is_zero()) {
      throw IndeterminateInternal("0/0 at " + std::string(var) + " = 0 on a canonical form");
    }
    throw PoleAtZero("pole at " + std::string(var) + " = 0: " + f.to_string());
  }
  return RationalFunction(std::move(num), std::move(den));
}

}  // namespace stabenv
