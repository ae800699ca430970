#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dyckflaws/integer.hpp"

namespace dyck {

/// Exponent pair (x, y); either may be negative.
using Exponent2 = std::pair<int, int>;

/// Laurent polynomial in x and y with exact integer coefficients. Zero
/// coefficients are never stored.
class LaurentPoly2 {
 public:
  using Terms = std::map<Exponent2, Integer>;

  LaurentPoly2() = default;
  LaurentPoly2(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly2(Integer c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly2 monomial(Integer c, int xexp, int yexp);
  static LaurentPoly2 x(int exp = 1) { return monomial(1, exp, 0); }
  static LaurentPoly2 y(int exp = 1) { return monomial(1, 0, exp); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(int xexp, int yexp) const;
  void add_term(int xexp, int yexp, const Integer& c);

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  LaurentPoly2& operator*=(const LaurentPoly2& o);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  LaurentPoly2 operator-() const;

  /// Multiply by x^dx y^dy.
  LaurentPoly2 shifted(int dx, int dy) const;
  /// Divide every coefficient by d; throws std::domain_error if inexact.
  LaurentPoly2 divided_exactly(const Integer& d) const;

  /// True when no stored exponent is negative.
  bool is_polynomial() const;

  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

  /// e.g. "x^2*y+3x-2x^-1"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Power series in z truncated after z^order, with LaurentPoly2 coefficients.
/// Binary operations on operands of different order truncate to the smaller.
class TruncSeries {
 public:
  explicit TruncSeries(int order);
  TruncSeries(int order, std::vector<LaurentPoly2> coeffs);

  static TruncSeries constant(int order, LaurentPoly2 c);
  /// The series z.
  static TruncSeries z(int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const LaurentPoly2& operator[](int n) const { return coeffs_.at(n); }
  LaurentPoly2& operator[](int n) { return coeffs_.at(n); }
  const std::vector<LaurentPoly2>& coefficients() const noexcept { return coeffs_; }

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator+(TruncSeries a, const LaurentPoly2& c);
  friend TruncSeries operator-(TruncSeries a, const LaurentPoly2& c);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const LaurentPoly2& c, const TruncSeries& a);
  friend TruncSeries operator*(const TruncSeries& a, const LaurentPoly2& c) { return c * a; }
  TruncSeries operator-() const;

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

  /// Re-truncate after z^order (order must not exceed the current one).
  TruncSeries truncated(int order) const;

  /// Rewrite every term c x^a y^b z^n as c x^a' y^b' z^n with
  /// (a', b') = remap(n, a, b). Used for substitutions that keep z-degree.
  TruncSeries remap_exponents(const std::function<Exponent2(int, int, int)>& remap) const;

  bool is_polynomial() const;

 private:
  std::vector<LaurentPoly2> coeffs_;
};

TruncSeries add(const TruncSeries& a, const TruncSeries& b);
TruncSeries mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries scale(const TruncSeries& a, const LaurentPoly2& c);
/// Multiply by z^j, dropping terms beyond the order.
TruncSeries shift_z(const TruncSeries& a, int j);
/// z -> y z, i.e. the z^n coefficient picks up y^n.
TruncSeries substitute_yz(const TruncSeries& a);

/// Multiplicative inverse. Requires constant coefficient exactly 1.
TruncSeries series_invert(const TruncSeries& a);

/// Square root with constant coefficient 1, by coefficient recursion.
/// Requires constant coefficient exactly 1; throws std::domain_error if a
/// coefficient would need a non-integral value.
TruncSeries series_sqrt(const TruncSeries& a);

}  // namespace dyck
