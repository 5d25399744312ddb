#include <doctest.h>

#include "qschubert/linalg.hpp"
#include "qschubert/minors.hpp"
#include "support.hpp"

using namespace qschubert;
using support::L;

namespace {

LaurentMatrix matrix_of(std::vector<std::vector<LaurentQ>> rows) {
  LaurentMatrix m(0, rows.empty() ? 0 : rows[0].size());
  m.rows = std::move(rows);
  return m;
}

bool annihilates(const LaurentMatrix& m, const std::vector<LaurentQ>& v) {
  for (const auto& x : multiply(m, v))
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("kernel examples") {
  CHECK(solve_kernel(matrix_of({{1, 0}, {0, 1}})).empty());
  const auto k = solve_kernel(matrix_of({{1, -1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<LaurentQ>{1, 1});
}

TEST_CASE("kernel of the three-term Plucker matrix") {
  const Shape s{2, 4};
  const QuantumMatrixAlgebra alg(s);
  std::vector<NcPoly> cols;
  for (const char* p : {"[1,3][2,4]", "[2,4][1,3]", "[1,4][2,3]"}) {
    std::vector<IndexPair> f;
    for (const auto& x : parse_index_set_product(p)) f.push_back(x.as_pair());
    cols.push_back(minor_product(alg, f));
  }
  std::map<Word, std::size_t> row_of;
  for (const auto& c : cols)
    for (const auto& [w, coeff] : c.terms()) row_of.try_emplace(w, row_of.size());
  LaurentMatrix m(row_of.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [w, coeff] : cols[j].terms()) m.rows[row_of[w]][j] = coeff;
  const auto k = solve_kernel(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == std::vector<LaurentQ>{1, -1, L("-q + q^-1")});
}

TEST_CASE("random kernels are annihilated and rank plus nullity is the width") {
  oracle::Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = rng.between(1, 4), c = rng.between(1, 5);
    LaurentMatrix m(r, c);
    for (auto& row : m.rows)
      for (auto& x : row)
        if (rng.below(3)) x = LaurentQ::monomial(Rational(rng.between(-3, 3)), rng.between(-2, 2)) + LaurentQ(rng.between(-1, 1));
    if (rng.below(3) == 0 && r > 1) m.rows[r - 1] = m.rows[0];
    const auto k = solve_kernel(m);
    for (const auto& v : k) CHECK(annihilates(m, v));
    CHECK(rank(m) + k.size() == c);
    for (const auto& v : k) {
      // first nonzero entry has lowest coefficient 1
      for (const auto& x : v)
        if (!x.is_zero()) {
          CHECK(x.coeff(x.low_degree()) == 1);
          break;
        }
    }
  }
}

TEST_CASE("span intersection and column solver") {
  const std::vector<std::vector<LaurentQ>> u = {{1, 0, 0}, {0, 1, 0}};
  const std::vector<std::vector<LaurentQ>> v = {{0, L("q"), 0}, {0, 0, 1}};
  const auto both = intersect_spans(u, v, 3);
  REQUIRE(both.size() == 1);
  CHECK(both[0] == std::vector<LaurentQ>{0, 1, 0});
  CHECK(span_rank({{1, L("q")}, {L("q^-1"), 1}}, 2) == 1);

  LaurentMatrix a(3, 2);
  a.rows = {{1, 0}, {L("q"), 1}, {0, L("q - q^-1")}};
  ColumnSolver solver(a);
  CHECK(solver.full_column_rank());
  const auto x = solver.solve({2, L("2*q + q^2"), L("q^3 - q")});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == LaurentQ(2));
  CHECK((*x)[1] == L("q^2"));
  CHECK(!solver.solve({1, 0, 0}).has_value());
}
