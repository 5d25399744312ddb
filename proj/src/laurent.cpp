#include "qschubert/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "qschubert/error.hpp"

namespace qschubert {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::ZeroSpecialization: return "ZeroSpecialization";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InhomogeneousInput: return "InhomogeneousInput";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NotInResidualPoset: return "NotInResidualPoset";
    case ErrorCode::NoRelationFound: return "NoRelationFound";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

LaurentQ::LaurentQ(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

LaurentQ::LaurentQ(const Rational& c) {
  if (sgn(c) != 0) {
    coeffs_.push_back(c);
    coeffs_.back().canonicalize();
  }
}

LaurentQ LaurentQ::monomial(const Rational& c, int exponent) {
  LaurentQ r(c);
  if (!r.is_zero()) r.low_ = exponent;
  return r;
}

LaurentQ LaurentQ::q_minus_qinv() {
  return from_dense(-1, {Rational(-1), Rational(0), Rational(1)});
}

LaurentQ LaurentQ::from_dense(int low, std::vector<Rational> coeffs) {
  LaurentQ r;
  r.low_ = low;
  r.coeffs_ = std::move(coeffs);
  r.trim();
  return r;
}

void LaurentQ::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

bool LaurentQ::is_one() const {
  return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1;
}

Rational LaurentQ::coeff(int exponent) const {
  const int k = exponent - low_;
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

std::size_t LaurentQ::term_count() const {
  return static_cast<std::size_t>(std::count_if(
      coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) != 0; }));
}

std::vector<std::pair<int, Rational>> LaurentQ::terms() const {
  std::vector<std::pair<int, Rational>> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (sgn(coeffs_[k]) != 0) out.emplace_back(low_ + static_cast<int>(k), coeffs_[k]);
  return out;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(low_, rhs.low_);
  const int hi = std::max(high_degree(), rhs.high_degree());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
    coeffs_[static_cast<std::size_t>(rhs.low_ - lo) + k] += rhs.coeffs_[k];
  trim();
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& rhs) { return *this += -rhs; }

LaurentQ LaurentQ::operator-() const {
  LaurentQ r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentQ::from_dense(a.low_ + b.low_, std::move(out));
}

LaurentQ& LaurentQ::operator*=(const LaurentQ& rhs) { return *this = *this * rhs; }

LaurentQ& LaurentQ::operator*=(const Rational& rhs) {
  if (sgn(rhs) == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

LaurentQ LaurentQ::shifted(int k) const {
  LaurentQ r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentQ LaurentQ::unit_inverse() const {
  if (!is_monomial()) fail(ErrorCode::InvalidArgument, "not a unit: " + to_string());
  return monomial(Rational(1) / coeffs_[0], -low_);
}

Rational LaurentQ::eval(const Rational& q0) const {
  if (sgn(q0) == 0) fail(ErrorCode::ZeroSpecialization, "cannot specialize q at 0");
  // Horner on the polynomial part, then multiply by q0^low.
  Rational x = q0;
  x.canonicalize();
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  Rational scale(1);
  const Rational base = low_ >= 0 ? x : Rational(1) / x;
  for (int k = 0; k < std::abs(low_); ++k) scale *= base;
  return acc * scale;
}

LaurentQ laurent_mul(const LaurentQ& a, const LaurentQ& b) { return a * b; }
Rational laurent_eval(const LaurentQ& a, const Rational& q0) { return a.eval(q0); }

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  auto bad = [&] { fail(ErrorCode::Parse, "malformed rational: '" + std::string(text) + "'"); };
  if (text.empty()) bad();
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') pos = 1;
  bool seen_digit = false, seen_slash = false, digit_after_slash = false;
  for (std::size_t i = pos; i < text.size(); ++i) {
    const char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (ch == '/' && seen_digit && !seen_slash) {
      seen_slash = true;
    } else {
      bad();
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash)) bad();
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rational r;
  if (r.set_str(s, 10) != 0) bad();
  if (seen_slash && sgn(mpz_class(r.get_den())) == 0) bad();
  r.canonicalize();
  return r;
}

namespace {

// Magnitude |c|*q^k without sign.
std::string term_magnitude(const Rational& abs_c, int k) {
  if (k == 0) return rational_to_string(abs_c);
  std::string qpart = k == 1 ? "q" : "q^" + std::to_string(k);
  if (abs_c == 1) return qpart;
  return rational_to_string(abs_c) + "*" + qpart;
}

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::string LaurentQ::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    const Rational& c = coeffs_[idx];
    if (sgn(c) == 0) continue;
    const int k = low_ + static_cast<int>(idx);
    const Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
      first = false;
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    out += term_magnitude(mag, k);
  }
  return out;
}

LaurentQ LaurentQ::parse(std::string_view text) {
  const std::string s = strip(text);
  auto bad = [&](const char* why) -> void {
    fail(ErrorCode::Parse, std::string(why) + " in Laurent polynomial '" + s + "'");
  };
  if (s.empty()) bad("empty input");
  LaurentQ result;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= s.size()) break;
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      bad("expected '+' or '-'");
    }
    first = false;

    // term := rational ['*' qpart] | qpart ;  qpart := 'q' ['^' int]
    const std::size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    const bool has_coeff = i > start;
    Rational c(1);
    if (has_coeff) c = parse_rational(std::string_view(s).substr(start, i - start));
    bool has_q = false;
    if (has_coeff && i < s.size() && s[i] == '*') {
      ++i;
      if (i >= s.size() || s[i] != 'q') bad("expected 'q' after '*'");
    }
    int k = 0;
    if (i < s.size() && s[i] == 'q') {
      has_q = true;
      ++i;
      k = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        const std::size_t e0 = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        const std::size_t d0 = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == d0) bad("malformed exponent");
        k = std::stoi(s.substr(e0, i - e0));
      }
    }
    if (!has_coeff && !has_q) bad("malformed term");
    result += monomial(c * sign, k);
  }
  return result;
}

void append_term(std::string& out, const LaurentQ& c, const std::string& name) {
  bool negative = false;
  std::string coeff;
  if (c.is_monomial()) {
    const auto t = c.terms().front();
    negative = sgn(t.second) < 0;
    const LaurentQ mag = LaurentQ::monomial(abs(t.second), t.first);
    if (!mag.is_one() || name.empty()) coeff = mag.to_string();
  } else {
    negative = sgn(c.coeff(c.high_degree())) < 0;
    coeff = "(" + (negative ? -c : c).to_string() + ")";
  }
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  out += coeff;
  if (!name.empty()) out += (coeff.empty() ? "" : "*") + name;
}

}  // namespace qschubert
