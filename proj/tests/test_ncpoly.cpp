#include <doctest.h>

#include "qschubert/error.hpp"
#include "qschubert/linalg.hpp"
#include "qschubert/ncpoly.hpp"
#include "support.hpp"

using namespace qschubert;
using support::L;

namespace {

Word word(const Shape& s, std::vector<Generator> gens) { return Word::from_generators(s, gens); }

Word random_word(const Shape& s, oracle::Rng& rng, int len) {
  std::vector<Generator> gens;
  for (int i = 0; i < len; ++i) gens.push_back({rng.between(1, s.m), rng.between(1, s.n)});
  return Word::from_generators(s, gens);
}

NcPoly random_poly(const Shape& s, oracle::Rng& rng) {
  NcPoly p(s);
  const int terms = rng.between(1, 3);
  for (int i = 0; i < terms; ++i)
    p += normal_form(random_word(s, rng, rng.between(0, 3)), s) *
         LaurentQ::monomial(Rational(rng.between(-2, 2)), rng.between(-1, 1));
  return p;
}

}  // namespace

TEST_CASE("normal form examples") {
  const Shape s{2, 2};
  const auto x11x22 = word(s, {{1, 1}, {2, 2}}), x11x12 = word(s, {{1, 1}, {1, 2}}), x12x21 = word(s, {{1, 2}, {2, 1}});
  CHECK(normal_form(x11x22, s) == NcPoly::term(s, x11x22, 1));
  CHECK(normal_form(word(s, {{1, 2}, {1, 1}}), s) == NcPoly::term(s, x11x12, L("q^-1")));
  CHECK(normal_form(word(s, {{2, 2}, {1, 1}}), s) ==
        NcPoly::term(s, x11x22, 1) - NcPoly::term(s, x12x21, L("q - q^-1")));
  CHECK(normal_form(word(s, {{2, 2}, {1, 1}}), s).to_string() == "X11*X22 - (q - q^-1)*X12*X21");
}

TEST_CASE("products") {
  const Shape s{2, 2};
  const QuantumMatrixAlgebra alg(s);
  const auto x11 = alg.generator(1, 1), x12 = alg.generator(1, 2);
  CHECK(nc_mul(x11, x12) == NcPoly::term(s, word(s, {{1, 1}, {1, 2}}), 1));
  CHECK(nc_mul(x12, x11) == NcPoly::term(s, word(s, {{1, 1}, {1, 2}}), L("q^-1")));
  const auto det = nc_mul(x11, alg.generator(2, 2)) - nc_mul(x12, alg.generator(2, 1)) * L("q");
  CHECK(nc_mul(det, alg.one()) == det);
  CHECK_THROWS_AS(nc_mul(x11, QuantumMatrixAlgebra(Shape{2, 3}).generator(1, 1)), Error);
}

TEST_CASE("multidegree") {
  const Shape s{2, 2};
  const QuantumMatrixAlgebra alg(s);
  const auto det = nc_mul(alg.generator(1, 1), alg.generator(2, 2)) -
                   nc_mul(alg.generator(1, 2), alg.generator(2, 1)) * L("q");
  const auto md = multidegree(det);
  REQUIRE(md.has_value());
  CHECK(md->rows == std::vector<int>{1, 1});
  CHECK(md->cols == std::vector<int>{1, 1});
  CHECK(!multidegree(alg.generator(1, 1) + alg.generator(1, 2)).has_value());
  const auto one = multidegree(alg.one());
  REQUIRE(one.has_value());
  CHECK(one->rows == std::vector<int>{0, 0});
}

TEST_CASE("graded bases") {
  const Shape s12{1, 2};
  const auto b = graded_basis(s12, 2);
  REQUIRE(b.size() == 3);
  CHECK(word_to_string(s12, b[0]) == "X11*X11");
  CHECK(word_to_string(s12, b[1]) == "X11*X12");
  CHECK(word_to_string(s12, b[2]) == "X12*X12");
  const Shape s{2, 2};
  const auto mb = graded_basis(s, Multidegree{{1, 1}, {1, 1}});
  REQUIRE(mb.size() == 2);
  CHECK(word_to_string(s, mb[0]) == "X11*X22");
  CHECK(word_to_string(s, mb[1]) == "X12*X21");
  CHECK(graded_basis(Shape{3, 2}, 0).size() == 1);
  // multisets of size 3 from 6 letters
  CHECK(graded_basis(Shape{2, 3}, 3).size() == 56);
}

TEST_CASE("confluence") {
  for (const Shape s : {Shape{1, 1}, Shape{1, 4}, Shape{2, 2}, Shape{2, 3}}) {
    const auto r = confluence_check(s);
    CHECK(r.passed());
    CHECK((r.triples_checked > 0) == (s.generator_count() > 1));
  }
}

TEST_CASE("normal forms agree with the naive specialized reducer") {
  oracle::Rng rng(17);
  for (const Shape s : {Shape{2, 2}, Shape{2, 3}, Shape{3, 3}}) {
    for (int trial = 0; trial < 40; ++trial) {
      const Word w = random_word(s, rng, rng.between(0, 5));
      const NcPoly nf = normal_form(w, s);
      oracle::GenWord gw;
      for (const auto& g : w.generators(s)) gw.push_back({g.row, g.col});
      for (const Rational q0 : {Rational(2), Rational(3, 5)})
        CHECK(support::specialized(nf, q0) == oracle::reduce(gw, q0));
      for (const auto& [t, c] : nf.terms()) {
        CHECK(t.is_normal());
        CHECK(t.size() == w.size());
        CHECK(word_multidegree(s, t) == word_multidegree(s, w));
      }
    }
  }
}

TEST_CASE("idempotence, associativity and additivity of multidegree") {
  oracle::Rng rng(23);
  const Shape s{2, 3};
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_poly(s, rng), b = random_poly(s, rng), c = random_poly(s, rng);
    CHECK(nc_mul(nc_mul(a, b), c) == nc_mul(a, nc_mul(b, c)));
    for (const auto& [w, coeff] : a.terms()) CHECK(normal_form(w, s) == NcPoly::term(s, w, 1));
  }
  for (int trial = 0; trial < 30; ++trial) {
    const Word u = random_word(s, rng, 2), v = random_word(s, rng, 3);
    const auto md = multidegree(nc_mul(normal_form(u, s), normal_form(v, s)));
    REQUIRE(md.has_value());
    CHECK(*md == word_multidegree(s, u + v));
  }
}

TEST_CASE("ordered monomials span each degree") {
  const Shape s{2, 2};
  const std::size_t d = 3;
  const auto basis = graded_basis(s, d);
  std::map<Word, std::size_t> row_of;
  for (const auto& w : basis) row_of.emplace(w, row_of.size());
  std::vector<std::vector<LaurentQ>> vectors;
  std::vector<Generator> all = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all) {
        std::vector<LaurentQ> v(basis.size());
        const auto nf = normal_form(Word::from_generators(s, {a, b, c}), s);
        for (const auto& [w, coeff] : nf.terms()) v[row_of.at(w)] = coeff;
        vectors.push_back(v);
      }
  CHECK(span_rank(vectors, basis.size()) == basis.size());
}

TEST_CASE("degree budget") {
  const Shape s{1, 2};
  const QuantumMatrixAlgebra alg(s, 4);
  std::vector<Generator> gens(5, Generator{1, 2});
  CHECK_THROWS_AS(alg.normal_form(Word::from_generators(s, gens)), Error);
}
