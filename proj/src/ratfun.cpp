#include "qschubert/ratfun.hpp"

#include <algorithm>

#include "qschubert/error.hpp"

namespace qschubert {

namespace poly {

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

bool is_constant(const Poly& p) { return p.size() <= 1; }

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Poly add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.empty()) fail(ErrorCode::Internal, "polynomial division by zero");
  Poly r = a;
  trim(r);
  if (r.size() < b.size()) return {Poly{}, r};
  Poly quot(r.size() - b.size() + 1);
  const Rational inv_lead = Rational(1) / b.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational c = r[k + b.size() - 1] * inv_lead;
    quot[k] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
  }
  trim(r);
  trim(quot);
  return {quot, r};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (!x.empty()) {
    const Rational inv = Rational(1) / x.back();
    for (auto& c : x) c *= inv;
  }
  return x;
}

}  // namespace poly

namespace {

// Strips factors of q from p, returning how many were removed.
int strip_q(Poly& p) {
  std::size_t k = 0;
  while (k < p.size() && sgn(p[k]) == 0) ++k;
  if (k > 0) p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
  return static_cast<int>(k);
}

Poly shift_up(const Poly& p, int k) {
  Poly out(static_cast<std::size_t>(k), Rational(0));
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

RatFun::RatFun(const LaurentQ& l) {
  if (l.is_zero()) return;
  shift_ = l.low_degree();
  num_ = l.dense();
}

RatFun RatFun::make(int shift, Poly num, Poly den) {
  RatFun r;
  r.shift_ = shift;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

void RatFun::normalize(bool need_gcd) {
  poly::trim(num_);
  poly::trim(den_);
  if (den_.empty()) fail(ErrorCode::Internal, "rational function with zero denominator");
  if (num_.empty()) {
    shift_ = 0;
    den_ = Poly{Rational(1)};
    return;
  }
  shift_ += strip_q(num_);
  shift_ -= strip_q(den_);
  if (need_gcd && den_.size() > 1) {
    Poly g = poly::gcd(num_, den_);
    if (g.size() > 1) {
      num_ = poly::divmod(num_, g).first;
      den_ = poly::divmod(den_, g).first;
    }
  }
  const Rational inv = Rational(1) / den_.back();
  if (inv != 1) {
    for (auto& c : num_) c *= inv;
    for (auto& c : den_) c *= inv;
  }
}

LaurentQ RatFun::to_laurent() const {
  if (!is_laurent()) fail(ErrorCode::Internal, "value is not a Laurent polynomial: " + to_string());
  return LaurentQ::from_dense(shift_, num_);
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

RatFun& RatFun::operator+=(const RatFun& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int s = std::min(shift_, rhs.shift_);
  const Poly a = shift_up(num_, shift_ - s);
  const Poly b = shift_up(rhs.num_, rhs.shift_ - s);
  if (den_ == rhs.den_) {
    // Same denominator; a gcd is only needed when it is nontrivial.
    num_ = poly::add(a, b);
    shift_ = s;
    normalize(den_.size() > 1);
    return *this;
  }
  num_ = poly::add(poly::mul(a, rhs.den_), poly::mul(b, den_));
  den_ = poly::mul(den_, rhs.den_);
  shift_ = s;
  normalize(true);
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& rhs) { return *this += -rhs; }

RatFun& RatFun::operator*=(const RatFun& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = RatFun();
  const bool laurent = is_laurent() && rhs.is_laurent();
  num_ = poly::mul(num_, rhs.num_);
  den_ = poly::mul(den_, rhs.den_);
  shift_ += rhs.shift_;
  normalize(!laurent);
  return *this;
}

RatFun RatFun::inverse() const {
  if (is_zero()) fail(ErrorCode::Internal, "inverse of zero rational function");
  RatFun r = make(-shift_, den_, num_);
  r.normalize(false);
  return r;
}

RatFun& RatFun::operator/=(const RatFun& rhs) { return *this *= rhs.inverse(); }

std::string RatFun::to_string() const {
  const std::string n = LaurentQ::from_dense(shift_, num_).to_string();
  if (is_laurent()) return n;
  return "(" + n + ")/(" + LaurentQ::from_dense(0, den_).to_string() + ")";
}

}  // namespace qschubert
