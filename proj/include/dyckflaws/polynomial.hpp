#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "dyckflaws/integer.hpp"

namespace dyck {

/// Dense univariate polynomial with exact integer coefficients. Trailing
/// zeros are trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(Integer c, int exponent);

  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Integer coefficient(int k) const;
  Integer evaluate(const Integer& x) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }

  /// Multiply by x^j.
  IntPolynomial shifted(int j) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Descending powers without spaces, e.g. "4x^4+18x^3+17x^2+3x".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

}  // namespace dyck
