#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qschubert/laurent.hpp"
#include "qschubert/ratfun.hpp"

namespace qschubert {

/// Row-major matrix with Laurent entries. Column count is carried explicitly
/// so that matrices with zero rows still have a shape.
struct LaurentMatrix {
  std::size_t cols = 0;
  std::vector<std::vector<LaurentQ>> rows;

  LaurentMatrix() = default;
  LaurentMatrix(std::size_t r, std::size_t c)
      : cols(c), rows(r, std::vector<LaurentQ>(c)) {}
};

/// Basis of the right kernel over Q(q). Each vector is scaled to a primitive
/// Laurent vector (entries share no non-unit common factor) whose first nonzero
/// entry has lowest term exactly 1. Vectors are ordered by free column of the
/// reduced echelon form.
std::vector<std::vector<LaurentQ>> solve_kernel(const LaurentMatrix& matrix);

/// Rank over Q(q).
std::size_t rank(const LaurentMatrix& matrix);

/// Rank over Q.
std::size_t rank_rational(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

/// Basis of the span of the given vectors of length dim, each a primitive
/// Laurent vector, in reduced echelon order.
std::vector<std::vector<LaurentQ>> span_basis(const std::vector<std::vector<LaurentQ>>& vectors,
                                              std::size_t dim);

/// Basis of the intersection of span(u) and span(v).
std::vector<std::vector<LaurentQ>> intersect_spans(const std::vector<std::vector<LaurentQ>>& u,
                                                   const std::vector<std::vector<LaurentQ>>& v,
                                                   std::size_t dim);

/// Dimension of the span over Q(q).
std::size_t span_rank(const std::vector<std::vector<LaurentQ>>& vectors, std::size_t dim);

/// Matrix-vector product in Laurent arithmetic.
std::vector<LaurentQ> multiply(const LaurentMatrix& matrix, const std::vector<LaurentQ>& x);

/// Repeated solves of A x = b for a fixed A. Picks an invertible square
/// submatrix of rows once, so each solve costs a c x c product plus an exact
/// verification against every row of A.
class ColumnSolver {
 public:
  explicit ColumnSolver(LaurentMatrix a);

  std::size_t rank() const noexcept { return pivot_rows_.size(); }
  bool full_column_rank() const noexcept { return pivot_rows_.size() == a_.cols; }

  /// The unique solution with Laurent entries, or nullopt if b is outside the
  /// column span or the solution is not Laurent. Requires full column rank.
  std::optional<std::vector<LaurentQ>> solve(const std::vector<LaurentQ>& b) const;

 private:
  LaurentMatrix a_;
  std::vector<std::size_t> pivot_rows_;
  std::vector<std::vector<RatFun>> inverse_;
};

}  // namespace qschubert
