#pragma once

#include <stdexcept>
#include <string>

namespace ideal_lab {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// build_root_system: invalid (letter, rank) pair
class UnsupportedTypeError : public Error {
public:
  using Error::Error;
};

// enumerate_weyl: |W| exceeds the requested cap
class GroupTooLargeError : public Error {
public:
  using Error::Error;
};

// direct Weyl-type enumeration: |I^c| beyond the supported bound
class ComplementTooLargeError : public Error {
public:
  using Error::Error;
};

// minimal_representative: the given subset fails a closure check
class NotWeylTypeError : public Error {
public:
  using Error::Error;
};

// lattice / finite-field / certificate search ran out of budget
class BudgetExceededError : public Error {
public:
  using Error::Error;
};

// a rational evaluation hit a vanishing denominator
class EvaluationPoleError : public Error {
public:
  using Error::Error;
};

class NonIntegralCoefficientsError : public Error {
public:
  using Error::Error;
};

class DuplicateAbscissaError : public Error {
public:
  using Error::Error;
};

class PolynomialDivisionByZeroError : public Error {
public:
  using Error::Error;
};

}  // namespace ideal_lab
