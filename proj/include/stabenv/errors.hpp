#pragma once

#include <stdexcept>
#include <string>

namespace stabenv {

// Base for every failure raised by the exact-arithmetic kernel and the
// modules built on top of it.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VarSetMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class NotDivisible : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class DivisionByZero : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class DenominatorVanishes : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class PoleAtZero : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// Both numerator and denominator vanish after canonicalization. Canonical
// forms are coprime, so seeing this means an internal bug.
class IndeterminateInternal : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class ConstantTermNotSquare : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class InsufficientOrder : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class NonPolynomialRestriction : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class NonIntegerResult : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class ZeroWeightEncountered : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class ParseError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class CostLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stabenv
