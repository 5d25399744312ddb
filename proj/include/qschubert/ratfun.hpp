#pragma once

#include <string>
#include <vector>

#include "qschubert/laurent.hpp"

namespace qschubert {

/// Dense polynomial in q over Q, ascending coefficients, no trailing zeros.
using Poly = std::vector<Rational>;

namespace poly {
void trim(Poly& p);
Poly mul(const Poly& a, const Poly& b);
Poly add(const Poly& a, const Poly& b);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd (the zero polynomial when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
bool is_constant(const Poly& p);
}  // namespace poly

/// Element of Q(q), stored as q^shift * num / den where neither num nor den
/// is divisible by q, den is monic and gcd(num, den) = 1. Equality is
/// structural. Laurent polynomials are exactly the values with den == 1, and
/// arithmetic between them never computes a gcd.
class RatFun {
 public:
  RatFun() = default;
  RatFun(const LaurentQ& l);  // NOLINT(google-explicit-constructor)
  RatFun(long c) : RatFun(LaurentQ(c)) {}  // NOLINT(google-explicit-constructor)

  bool is_zero() const noexcept { return num_.empty(); }
  bool is_laurent() const noexcept { return den_.size() == 1; }
  /// c*q^k with c != 0.
  bool is_unit_laurent() const noexcept { return is_laurent() && num_.size() == 1; }
  /// Throws Internal when the value is not a Laurent polynomial.
  LaurentQ to_laurent() const;

  const Poly& numerator() const noexcept { return num_; }
  const Poly& denominator() const noexcept { return den_; }
  int shift() const noexcept { return shift_; }

  RatFun& operator+=(const RatFun& rhs);
  RatFun& operator-=(const RatFun& rhs);
  RatFun& operator*=(const RatFun& rhs);
  RatFun& operator/=(const RatFun& rhs);
  RatFun operator-() const;
  RatFun inverse() const;

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Rough size measure used for pivot choice.
  std::size_t weight() const noexcept { return num_.size() + 2 * (den_.size() - 1); }

  std::string to_string() const;

 private:
  static RatFun make(int shift, Poly num, Poly den);
  void normalize(bool need_gcd);

  int shift_ = 0;
  Poly num_;
  Poly den_{Rational(1)};
};

}  // namespace qschubert
