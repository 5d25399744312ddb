#include <doctest.h>

#include "qschubert/detring.hpp"
#include "qschubert/error.hpp"
#include "qschubert/minors.hpp"
#include "support.hpp"

using namespace qschubert;
using support::L;

namespace {

IndexPair P(std::vector<int> r, std::vector<int> c) { return IndexPair(std::move(r), std::move(c)); }

DetMonomial D(std::vector<IndexPair> f) { return DetMonomial{std::move(f)}; }

DetAlgElement element(Shape s, std::optional<IndexPair> delta, std::vector<std::pair<DetMonomial, LaurentQ>> terms) {
  DetAlgElement e;
  e.shape = s;
  e.delta = std::move(delta);
  for (const auto& [m, c] : terms) e.add_term(m, c);
  return e;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

oracle::SpecPoly oracle_relation(const MinorRelation& r, const Rational& q0) {
  oracle::SpecPoly total;
  for (const auto& t : r.terms) {
    oracle::SpecPoly acc{{{}, Rational(1)}};
    for (const auto& f : t.factors) acc = oracle::mul(acc, oracle::minor(f.rows, f.cols, q0), q0);
    const Rational c = t.coeff.eval(q0);
    for (const auto& [w, v] : acc) total[w] += c * v;
  }
  std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
  return total;
}

}  // namespace

TEST_CASE("determinantal standard monomials") {
  const Shape s22{2, 2};
  const auto one = det_standard_monomials(s22, P({1}, {1}), 1);
  CHECK(one.size() == 4);
  for (const auto& m : one) CHECK(m.factors[0].size() == 1);
  CHECK(det_standard_monomials(s22, P({2}, {2}), 1) == std::vector<DetMonomial>{D({P({2}, {2})})});
  CHECK(det_standard_monomials(s22, P({1, 2}, {1, 2}), 2) == det_standard_monomials(s22, std::nullopt, 2));
  CHECK(det_standard_monomials(s22, std::nullopt, 0) == std::vector<DetMonomial>{D({})});

  // the full A.S.L. has as many standard monomials as ordered monomials
  for (const Shape s : {Shape{1, 2}, Shape{2, 2}, Shape{2, 3}})
    for (int d = 0; d <= 3; ++d)
      CHECK(static_cast<long>(det_standard_monomials(s, std::nullopt, d).size()) ==
            binomial(s.m * s.n + d - 1, d));
}

TEST_CASE("standard monomials stay independent under specialization") {
  for (const Shape s : {Shape{2, 2}, Shape{2, 3}}) {
    const auto& mm = matrix_minors(s);
    for (int d = 1; d <= 3; ++d) {
      const auto mons = mm.standard_monomials(d);
      for (const Rational q0 : {Rational(2), Rational(1, 3)}) {
        std::map<Word, std::size_t> col;
        std::vector<std::map<Word, Rational>> evals;
        for (const auto& m : mons) {
          evals.push_back(mm.expand(m).eval(q0));
          for (const auto& [w, c] : evals.back()) col.try_emplace(w, col.size());
        }
        std::vector<std::vector<Rational>> rows;
        for (const auto& e : evals) {
          std::vector<Rational> row(col.size(), 0);
          for (const auto& [w, c] : e) row[col[w]] = c;
          rows.push_back(row);
        }
        CHECK(rank_rational(rows, col.size()) == mons.size());
      }
    }
  }
}

TEST_CASE("determinantal straightening") {
  const auto a = straighten_det({P({1}, {2}), P({1}, {1})}, Shape{1, 2}, P({1}, {1}));
  CHECK(a == element(Shape{1, 2}, P({1}, {1}), {{D({P({1}, {1}), P({1}, {2})}), L("q^-1")}}));

  const auto chain = std::vector<IndexPair>{P({1, 2}, {1, 2}), P({1}, {1}), P({2}, {2})};
  CHECK(straighten_det(chain, Shape{2, 2}, std::nullopt) ==
        element(Shape{2, 2}, std::nullopt, {{D(chain), 1}}));

  // [2|2][1|1] = [1|1][2|2] - (q - q^-1)[1|2][2|1], right side straightened too
  const Shape s{2, 2};
  const auto lhs = straighten_det({P({2}, {2}), P({1}, {1})}, s, std::nullopt);
  const auto rhs = straighten_det({P({1}, {1}), P({2}, {2})}, s, std::nullopt) -
                   straighten_det({P({1}, {2}), P({2}, {1})}, s, std::nullopt) * L("q - q^-1");
  CHECK(lhs == rhs);

  oracle::Rng rng(59);
  for (const Shape sh : {Shape{2, 2}, Shape{2, 3}}) {
    const auto& mm = matrix_minors(sh);
    const auto elems = mm.poset().elements();
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<IndexPair> f;
      const int k = rng.between(1, 3);
      for (int i = 0; i < k; ++i) f.push_back(elems[rng.below(static_cast<int>(elems.size()))]);
      const auto st = mm.straighten(f);
      for (const auto& [m, c] : st.terms) CHECK(m.is_standard());
      CHECK(mm.expand(st) == mm.product(f));
      const auto delta = elems[rng.below(static_cast<int>(elems.size()))];
      const auto projected = straighten_det(f, sh, delta);
      for (const auto& [m, c] : projected.terms) CHECK(leq_st(delta, m.factors.front()));
      CHECK(projected == project(st, delta));
    }
  }
}

TEST_CASE("last-row Laplace expansion") {
  const auto r = laplace_last_row(2, {1, 2}, {1, 2});
  CHECK(r.verified);
  CHECK(expansion_to_string(r) == "[1,2|1,2] = X22*[1|1] - q^-1*X21*[1|2]");
  for (const Rational q0 : {Rational(2), Rational(-1, 3)}) CHECK(oracle_relation(r, q0).empty());

  const auto r13 = laplace_last_row(2, {1, 2}, {1, 3});
  CHECK(r13.verified);
  CHECK(oracle_relation(r13, Rational(3)).empty());

  for (const auto& rows : oracle::subsets(3, 3)) {
    const auto r3 = laplace_last_row(3, rows, {1, 2, 4}, Shape{3, 4});
    CHECK(r3.verified);
    CHECK(r3.terms[0].coeff == LaurentQ(1));
    CHECK(oracle_relation(r3, Rational(2)).empty());
  }
  CHECK(code_of([] { laplace_last_row(1, {1}, {1}); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("delta map is a poset isomorphism") {
  for (const Shape s : {Shape{1, 1}, Shape{1, 2}, Shape{2, 2}, Shape{2, 3}}) {
    const auto r = delta_map_check(s);
    CHECK(r.passed());
    CHECK(r.size == matrix_poset(s).size());
  }
}

TEST_CASE("dehomogenisation correspondence") {
  const auto small = dehom_correspondence_check(P({1}, {1}), Shape{1, 1}, 2);
  CHECK(small.passed());
  CHECK(small.gamma == IndexSet({1}));

  for (const auto& d : matrix_poset(Shape{2, 2}).elements()) {
    const auto r = dehom_correspondence_check(d, Shape{2, 2}, 2);
    CHECK_MESSAGE(r.passed(), d.to_string());
    CHECK(r.ideal_matches);
    CHECK(r.gamma == delta_map(d, Shape{2, 2}));
    CHECK(r.products_checked > 0);
  }
}

TEST_CASE("normality of the corner minor") {
  for (const auto& [t, s] : {std::pair{2, Shape{2, 2}}, std::pair{2, Shape{2, 3}}, std::pair{3, Shape{3, 3}}}) {
    const auto r = normality_check(t, s);
    CHECK(r.passed());
    CHECK(r.expected_count == static_cast<std::size_t>(s.m * s.n - (s.m - t + 1) * (s.n - t + 1)));
  }
  CHECK(rank_and_gkdim(P({1}, {1}), Shape{2, 2}).rank == 3);
  CHECK(rank_and_gkdim(P({1}, {1}), Shape{2, 3}).rank == 4);
}
