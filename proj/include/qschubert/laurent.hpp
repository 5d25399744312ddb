#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qschubert {

using Rational = mpq_class;

/// Laurent polynomial in q with rational coefficients.
///
/// Stored densely as coeffs_[k] = coefficient of q^(low_ + k). The first and
/// last stored coefficients are nonzero, so equal values compare equal
/// structurally. The zero polynomial has no coefficients and low_ == 0.
class LaurentQ {
 public:
  LaurentQ() = default;
  LaurentQ(long c);  // NOLINT(google-explicit-constructor)
  LaurentQ(const Rational& c);  // NOLINT(google-explicit-constructor)

  static LaurentQ monomial(const Rational& c, int exponent);
  static LaurentQ q_power(int exponent) { return monomial(Rational(1), exponent); }
  /// q - q^{-1}
  static LaurentQ q_minus_qinv();

  /// Parses the textual form emitted by to_string(), e.g. "q^2 - 1/2*q^-1 + 3".
  static LaurentQ parse(std::string_view text);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monomial() const noexcept { return coeffs_.size() == 1; }
  bool is_one() const;
  /// Lowest and highest exponents; both 0 for the zero polynomial.
  int low_degree() const noexcept { return low_; }
  int high_degree() const noexcept {
    return coeffs_.empty() ? 0 : low_ + static_cast<int>(coeffs_.size()) - 1;
  }
  Rational coeff(int exponent) const;
  std::size_t term_count() const;

  /// (exponent, coefficient) pairs with nonzero coefficient, ascending.
  std::vector<std::pair<int, Rational>> terms() const;

  LaurentQ& operator+=(const LaurentQ& rhs);
  LaurentQ& operator-=(const LaurentQ& rhs);
  LaurentQ& operator*=(const LaurentQ& rhs);
  LaurentQ& operator*=(const Rational& rhs);
  LaurentQ operator-() const;

  friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
  friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);

  friend bool operator==(const LaurentQ& a, const LaurentQ& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiplies by q^k.
  LaurentQ shifted(int k) const;
  /// Inverse of a unit c*q^k; throws for non-units.
  LaurentQ unit_inverse() const;

  /// Value at q = q0. Throws ZeroSpecialization when q0 == 0.
  Rational eval(const Rational& q0) const;

  std::string to_string() const;

  // Raw dense access used by the rational-function layer.
  const std::vector<Rational>& dense() const noexcept { return coeffs_; }
  static LaurentQ from_dense(int low, std::vector<Rational> coeffs);

 private:
  void trim();

  int low_ = 0;
  std::vector<Rational> coeffs_;
};

LaurentQ laurent_mul(const LaurentQ& a, const LaurentQ& b);
Rational laurent_eval(const LaurentQ& a, const Rational& q0);

/// Parses "3", "-1/2", "2/3". Throws Parse on malformed input.
Rational parse_rational(std::string_view text);

/// Appends "c*name" to a signed sum being built in out ("" when empty),
/// writing " - " and the negated coefficient for a negative leading sign and
/// omitting a unit coefficient. An empty name stands for the constant term.
void append_term(std::string& out, const LaurentQ& c, const std::string& name);
std::string rational_to_string(const Rational& r);

}  // namespace qschubert
