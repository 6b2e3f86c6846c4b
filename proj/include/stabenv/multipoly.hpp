#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stabenv/monomial.hpp"
#include "stabenv/rational.hpp"
#include "stabenv/varset.hpp"

namespace stabenv {

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse polynomial with rational coefficients. Terms are kept sorted in
/// descending graded lexicographic order with no zero coefficients, so two
/// equal polynomials over the same VarSet have identical term vectors.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(VarSetPtr vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(VarSetPtr vars, const Rational& value);
  static MultiPoly variable(VarSetPtr vars, std::string_view name);
  static MultiPoly variable(VarSetPtr vars, std::size_t index);
  static MultiPoly monomial(VarSetPtr vars, const Monomial& mono, const Rational& coeff);
  // Accepts terms in any order, with repeats and zeros.
  static MultiPoly from_terms(VarSetPtr vars, std::vector<Term> terms);

  const VarSetPtr& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // Constant value; throws std::logic_error for a non-constant polynomial.
  Rational constant_value() const;

  const Term& leading_term() const;
  const Rational& leading_coeff() const { return leading_term().coeff; }

  int total_degree() const;
  int degree_in(std::size_t var) const;
  // Total degree counting only the listed variables.
  int degree_in(const std::vector<std::size_t>& vars) const;
  bool uses(std::size_t var) const { return degree_in(var) > 0; }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& scalar);

  MultiPoly mul_term(const Monomial& mono, const Rational& coeff) const;
  MultiPoly pow(unsigned exponent) const;

  // Exact evaluation; point holds one value per variable of the VarSet.
  Rational evaluate(const std::vector<Rational>& point) const;

  // Integer-coefficient primitive associate with positive leading
  // coefficient. Zero stays zero.
  MultiPoly normalized() const;
  // The rational c with *this == c * normalized().
  Rational content() const;

  std::string to_string() const;

  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs);

 private:
  friend struct PolyAccess;
  VarSetPtr vars_;
  std::vector<Term> terms_;
};

inline MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
inline MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
inline MultiPoly operator*(MultiPoly lhs, const Rational& rhs) { return lhs *= rhs; }
inline MultiPoly operator*(const Rational& lhs, MultiPoly rhs) { return rhs *= lhs; }

enum class ArithKind { add, sub, mul };

MultiPoly poly_arith(const MultiPoly& lhs, const MultiPoly& rhs, ArithKind kind);

// Quotient when den divides num exactly, nullopt otherwise. Throws
// DivisionByZero for den == 0.
std::optional<MultiPoly> try_divide(const MultiPoly& num, const MultiPoly& den);

// Throws NotDivisible when the remainder is nonzero.
MultiPoly exact_divide(const MultiPoly& num, const MultiPoly& den);

// Greatest common divisor, normalized (primitive, integer coefficients,
// positive leading coefficient). gcd(0, p) = normalized p.
MultiPoly poly_gcd(const MultiPoly& lhs, const MultiPoly& rhs);

// Variable name -> image polynomial over the target VarSet.
using Bindings = std::map<std::string, MultiPoly, std::less<>>;

// Replaces every bound variable by its image; unbound variables must exist
// in the target VarSet under the same name.
MultiPoly substitute(const MultiPoly& poly, const Bindings& bindings, const VarSetPtr& target);

// Re-expresses the polynomial over another VarSet containing its variables.
MultiPoly rebase(const MultiPoly& poly, const VarSetPtr& target);

void require_same_vars(const MultiPoly& lhs, const MultiPoly& rhs);

}  // namespace stabenv
