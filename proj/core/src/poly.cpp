#include "ideal_lab/poly.hpp"

#include "ideal_lab/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ideal_lab {

namespace {
const BigInt kZero = 0;
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
  IntPolynomial p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

IntPolynomial IntPolynomial::monomial(BigInt c, int deg) {
  IntPolynomial p;
  if (c != 0) {
    p.coeffs_.assign(deg + 1, 0);
    p.coeffs_[deg] = std::move(c);
  }
  return p;
}

const BigInt& IntPolynomial::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[d];
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigRational IntPolynomial::evaluate(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<BigInt> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial{};
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPolynomial(std::move(out));
}

std::optional<int> IntPolynomial::first_mismatch_degree(const IntPolynomial& o) const {
  int top = std::max(degree(), o.degree());
  for (int d = 0; d <= top; ++d)
    if (coeff(d) != o.coeff(d)) return d;
  return std::nullopt;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= degree(); ++d) {
    const BigInt& c = coeffs_[d];
    if (c == 0) continue;
    BigInt a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (d == 0) {
      os << a.str();
    } else {
      if (a != 1) os << a.str() << "*";
      os << "t";
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

IntPolynomial product_of_geometrics(std::span<const int> exponents) {
  IntPolynomial acc = IntPolynomial::constant(1);
  for (int m : exponents) {
    std::vector<BigInt> geo(static_cast<size_t>(m) + 1, 1);
    acc = acc * IntPolynomial(std::move(geo));
  }
  return acc;
}

std::optional<IntPolynomial> exact_divide(const IntPolynomial& num,
                                          const IntPolynomial& den) {
  if (den.is_zero()) throw PolynomialDivisionByZeroError("exact_divide: zero divisor");
  if (num.is_zero()) return IntPolynomial{};
  if (num.degree() < den.degree()) return std::nullopt;

  std::vector<BigInt> rem = num.coeffs();
  std::vector<BigInt> quot(num.degree() - den.degree() + 1, 0);
  const BigInt& lead = den.coeff(den.degree());
  for (int d = num.degree(); d >= den.degree(); --d) {
    BigInt& top = rem[d];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    BigInt q = top / lead;
    int shift = d - den.degree();
    for (int i = 0; i <= den.degree(); ++i) rem[i + shift] -= q * den.coeff(i);
    quot[shift] = std::move(q);
  }
  for (const BigInt& c : rem)
    if (c != 0) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

IntPolynomial interpolate(const std::vector<std::pair<BigInt, BigRational>>& points) {
  const size_t n = points.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first)
        throw DuplicateAbscissaError("interpolate: repeated abscissa " +
                                     points[i].first.str());
  if (n == 0) return IntPolynomial{};

  // Newton divided differences
  std::vector<BigRational> dd(n);
  for (size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  std::vector<BigRational> coeffs_newton(n);
  coeffs_newton[0] = dd[0];
  for (size_t level = 1; level < n; ++level) {
    for (size_t i = 0; i + level < n; ++i) {
      BigRational dx = BigRational(points[i + level].first - points[i].first);
      dd[i] = (dd[i + 1] - dd[i]) / dx;
    }
    coeffs_newton[level] = dd[0];
  }

  // expand sum_k c_k * prod_{j<k} (t - x_j)
  std::vector<BigRational> result(n, 0);
  std::vector<BigRational> basis;
  basis.push_back(1);
  for (size_t k = 0; k < n; ++k) {
    if (k > 0) {
      BigRational x = BigRational(points[k - 1].first);
      basis.push_back(0);
      for (size_t j = basis.size() - 1; j > 0; --j)
        basis[j] = basis[j - 1] - x * basis[j];
      basis[0] = -x * basis[0];
    }
    for (size_t j = 0; j < basis.size(); ++j) result[j] += coeffs_newton[k] * basis[j];
  }

  std::vector<BigInt> out(n);
  for (size_t j = 0; j < n; ++j) {
    if (denominator(result[j]) != 1)
      throw NonIntegralCoefficientsError(
          "interpolate: coefficient of t^" + std::to_string(j) +
          " is not an integer");
    out[j] = numerator(result[j]);
  }
  return IntPolynomial(std::move(out));
}

}  // namespace ideal_lab
