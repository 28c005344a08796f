#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ideal_lab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Dense integer polynomial in one variable t, constant term first.
// Normalized: no trailing zero coefficients; the zero polynomial is the
// empty coefficient list (degree -1).
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }
  IntPolynomial(std::initializer_list<long long> coeffs) {
    coeffs_.assign(coeffs.begin(), coeffs.end());
    normalize();
  }

  static IntPolynomial zero() { return IntPolynomial{}; }
  static IntPolynomial constant(BigInt c);
  // c * t^deg
  static IntPolynomial monomial(BigInt c, int deg);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  // coefficient of t^d (0 beyond the degree)
  const BigInt& coeff(int d) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt evaluate(const BigInt& x) const;
  BigRational evaluate(const BigRational& x) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

  // lowest degree where the two polynomials differ, if any
  std::optional<int> first_mismatch_degree(const IntPolynomial& o) const;

  // canonical text form, e.g. "1 + 2*t + t^2"
  std::string to_string() const;

private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

// prod_i (1 + t + ... + t^{m_i}) for nonnegative m_i
IntPolynomial product_of_geometrics(std::span<const int> exponents);

// exact quotient num/den, or nullopt when den does not divide num.
// Throws PolynomialDivisionByZeroError when den is zero.
std::optional<IntPolynomial> exact_divide(const IntPolynomial& num,
                                          const IntPolynomial& den);

// Unique polynomial of degree < points.size() through the given points.
// Throws DuplicateAbscissaError on repeated abscissas and
// NonIntegralCoefficientsError when the result is not in Z[t].
IntPolynomial interpolate(const std::vector<std::pair<BigInt, BigRational>>& points);

}  // namespace ideal_lab
