#include <doctest.h>

#include "qschubert/error.hpp"
#include "qschubert/ratfun.hpp"
#include "support.hpp"

using namespace qschubert;
using support::L;

namespace {

LaurentQ random_laurent(oracle::Rng& rng) {
  LaurentQ out;
  const int terms = rng.between(0, 4);
  for (int i = 0; i < terms; ++i)
    out += LaurentQ::monomial(Rational(rng.between(-5, 5), rng.between(1, 3)), rng.between(-3, 3));
  return out;
}

}  // namespace

TEST_CASE("laurent products") {
  CHECK(laurent_mul(L("q"), L("q^-1")) == LaurentQ(1));
  CHECK(laurent_mul(L("q - q^-1"), L("q + q^-1")) == L("q^2 - q^-2"));
  CHECK(laurent_mul(LaurentQ(), L("3*q^5 - 2")).is_zero());
  CHECK(laurent_mul(L("q^2 + 1"), L("q^-3")).high_degree() == -1);
}

TEST_CASE("laurent evaluation") {
  CHECK(laurent_eval(L("q - q^-1"), Rational(1)) == 0);
  CHECK(laurent_eval(L("q^2"), Rational(2)) == 4);
  CHECK(laurent_eval(L("-q"), Rational(1, 2)) == Rational(-1, 2));
  CHECK_THROWS_AS(laurent_eval(L("q"), Rational(0)), Error);
  try {
    laurent_eval(L("q"), Rational(0));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroSpecialization);
  }
}

TEST_CASE("laurent text form") {
  for (const char* text : {"q^2 - q^-2", "0", "1", "-q + q^-1", "3/2*q^4 - q - 7", "q^-1", "-1/3*q^-2"})
    CHECK(L(text).to_string() == text);
  CHECK(L("q-q^-1") == L("q - q^-1"));
  CHECK(L("1 + q") == L("q + 1"));
  CHECK_THROWS_AS(L("q^"), Error);
  CHECK_THROWS_AS(L("x"), Error);
}

TEST_CASE("laurent canonical form and units") {
  CHECK(L("q - q").is_zero());
  CHECK(L("q + q") == L("2*q"));
  CHECK(L("2*q^3").is_monomial());
  CHECK(L("2*q^3").unit_inverse() == L("1/2*q^-3"));
  CHECK(!L("q + 1").is_monomial());
}

TEST_CASE("laurent ring axioms on random triples") {
  oracle::Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == LaurentQ());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  oracle::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_laurent(rng), b = random_laurent(rng);
    Rational q0(rng.between(1, 7), rng.between(1, 5));
    if (rng.below(2)) q0 = -q0;
    CHECK(laurent_eval(a * b, q0) == laurent_eval(a, q0) * laurent_eval(b, q0));
    CHECK(laurent_eval(a + b, q0) == laurent_eval(a, q0) + laurent_eval(b, q0));
  }
}

TEST_CASE("rational functions") {
  const RatFun a(L("q^2 - 1")), b(L("q + 1"));
  const RatFun quotient = a / b;
  CHECK(quotient.is_laurent());
  CHECK(quotient.to_laurent() == L("q - 1"));
  const RatFun c = RatFun(L("1")) / RatFun(L("q - q^-1"));
  CHECK(!c.is_laurent());
  CHECK(c * RatFun(L("q - q^-1")) == RatFun(LaurentQ(1)));
  CHECK(c + c == RatFun(LaurentQ(2)) / RatFun(L("q - q^-1")));
  CHECK_THROWS_AS(RatFun(LaurentQ()).inverse(), Error);

  oracle::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_laurent(rng), y = random_laurent(rng), z = random_laurent(rng);
    if (y.is_zero() || z.is_zero()) continue;
    if ((y + z).is_zero()) continue;
    const RatFun f = RatFun(x) / RatFun(y);
    const RatFun g = RatFun(z) / RatFun(y + z);
    CHECK((f + g) - g == f);
    CHECK((f * g) / g == f);
  }
}
