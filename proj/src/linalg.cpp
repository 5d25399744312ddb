#include "qschubert/linalg.hpp"

#include <limits>

#include "qschubert/error.hpp"

namespace qschubert {

namespace {

bool is_zero(const RatFun& x) { return x.is_zero(); }
bool is_zero(const Rational& x) { return sgn(x) == 0; }

// Smaller is a better pivot. Units keep the elimination inside the Laurent
// ring; anything else forces denominators.
std::size_t pivot_cost(const RatFun& x) {
  if (x.is_unit_laurent()) return 0;
  if (x.is_laurent()) return 1 + x.weight();
  return 1000 + x.weight();
}
std::size_t pivot_cost(const Rational&) { return 0; }

// Reduced row echelon form in place, searching for pivots only in the first
// pivot_cols columns (the rest are carried along, as in an augmented matrix).
// Returns the pivot column of each of the leading rows.
template <typename F>
std::vector<std::size_t> rref(std::vector<std::vector<F>>& m, std::size_t pivot_cols) {
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.size(); ++c) {
    std::size_t best = m.size();
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = r; i < m.size(); ++i) {
      if (is_zero(m[i][c])) continue;
      const std::size_t cost = pivot_cost(m[i][c]);
      if (cost < best_cost) {
        best = i;
        best_cost = cost;
        if (cost == 0) break;
      }
    }
    if (best == m.size()) continue;
    std::swap(m[r], m[best]);
    const F inv = F(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j)
      if (!is_zero(m[r][j])) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      const F factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!is_zero(m[r][j])) m[i][j] -= factor * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<RatFun>> to_ratfun(const LaurentMatrix& a) {
  std::vector<std::vector<RatFun>> m;
  m.reserve(a.rows.size());
  for (const auto& row : a.rows) {
    if (row.size() != a.cols) fail(ErrorCode::InvalidArgument, "ragged matrix row");
    std::vector<RatFun> out;
    out.reserve(a.cols);
    for (const auto& x : row) out.emplace_back(x);
    m.push_back(std::move(out));
  }
  return m;
}

std::vector<LaurentQ> primitive_laurent(const std::vector<RatFun>& v) {
  // Clear denominators with their lcm.
  Poly lcm{Rational(1)};
  for (const auto& x : v) {
    if (x.is_zero() || x.is_laurent()) continue;
    const Poly g = poly::gcd(lcm, x.denominator());
    lcm = poly::mul(poly::divmod(lcm, g).first, x.denominator());
  }
  std::vector<LaurentQ> out;
  out.reserve(v.size());
  Poly content;
  for (const auto& x : v) {
    if (x.is_zero()) {
      out.emplace_back();
      continue;
    }
    Poly p = poly::mul(x.numerator(), poly::divmod(lcm, x.denominator()).first);
    content = content.empty() ? p : poly::gcd(content, p);
    out.push_back(LaurentQ::from_dense(x.shift(), std::move(p)));
  }
  if (content.size() > 1) {
    for (auto& x : out) {
      if (x.is_zero()) continue;
      const int low = x.low_degree();
      auto [quot, rem] = poly::divmod(x.dense(), content);
      if (!rem.empty()) fail(ErrorCode::Internal, "content does not divide kernel entry");
      x = LaurentQ::from_dense(low, std::move(quot));
    }
  }
  for (const auto& x : out) {
    if (x.is_zero()) continue;
    const LaurentQ unit = LaurentQ::monomial(x.coeff(x.low_degree()), x.low_degree());
    const LaurentQ inv = unit.unit_inverse();
    for (auto& y : out) y *= inv;
    break;
  }
  return out;
}

}  // namespace

std::vector<std::vector<LaurentQ>> solve_kernel(const LaurentMatrix& matrix) {
  auto m = to_ratfun(matrix);
  const auto pivots = rref(m, matrix.cols);
  std::vector<bool> is_pivot(matrix.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<LaurentQ>> basis;
  for (std::size_t f = 0; f < matrix.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<RatFun> v(matrix.cols);
    v[f] = RatFun(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(primitive_laurent(v));
  }
  return basis;
}

std::size_t rank(const LaurentMatrix& matrix) {
  auto m = to_ratfun(matrix);
  return rref(m, matrix.cols).size();
}

std::size_t rank_rational(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  auto m = rows;
  return rref(m, cols).size();
}

namespace {

LaurentMatrix rows_matrix(const std::vector<std::vector<LaurentQ>>& vectors, std::size_t dim) {
  LaurentMatrix m(0, dim);
  for (const auto& v : vectors) {
    if (v.size() != dim) fail(ErrorCode::InvalidArgument, "vector has wrong length");
    m.rows.push_back(v);
  }
  return m;
}

}  // namespace

std::vector<std::vector<LaurentQ>> span_basis(const std::vector<std::vector<LaurentQ>>& vectors,
                                              std::size_t dim) {
  auto m = to_ratfun(rows_matrix(vectors, dim));
  const auto pivots = rref(m, dim);
  std::vector<std::vector<LaurentQ>> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) out.push_back(primitive_laurent(m[r]));
  return out;
}

std::vector<std::vector<LaurentQ>> intersect_spans(const std::vector<std::vector<LaurentQ>>& u,
                                                   const std::vector<std::vector<LaurentQ>>& v,
                                                   std::size_t dim) {
  const auto bu = span_basis(u, dim);
  const auto bv = span_basis(v, dim);
  if (bu.empty() || bv.empty()) return {};
  // Columns [bu | -bv]; a kernel vector (a, b) gives sum a_i bu_i in both spans.
  LaurentMatrix m(dim, bu.size() + bv.size());
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < bu.size(); ++j) m.rows[i][j] = bu[j][i];
    for (std::size_t j = 0; j < bv.size(); ++j) m.rows[i][bu.size() + j] = -bv[j][i];
  }
  std::vector<std::vector<LaurentQ>> common;
  for (const auto& k : solve_kernel(m)) {
    std::vector<LaurentQ> w(dim);
    for (std::size_t j = 0; j < bu.size(); ++j) {
      if (k[j].is_zero()) continue;
      for (std::size_t i = 0; i < dim; ++i)
        if (!bu[j][i].is_zero()) w[i] += k[j] * bu[j][i];
    }
    common.push_back(std::move(w));
  }
  return span_basis(common, dim);
}

std::size_t span_rank(const std::vector<std::vector<LaurentQ>>& vectors, std::size_t dim) {
  return rank(rows_matrix(vectors, dim));
}

std::vector<LaurentQ> multiply(const LaurentMatrix& matrix, const std::vector<LaurentQ>& x) {
  if (x.size() != matrix.cols) fail(ErrorCode::InvalidArgument, "dimension mismatch in multiply");
  std::vector<LaurentQ> out(matrix.rows.size());
  for (std::size_t i = 0; i < matrix.rows.size(); ++i)
    for (std::size_t j = 0; j < matrix.cols; ++j)
      if (!matrix.rows[i][j].is_zero() && !x[j].is_zero()) out[i] += matrix.rows[i][j] * x[j];
  return out;
}

ColumnSolver::ColumnSolver(LaurentMatrix a) : a_(std::move(a)) {
  const std::size_t c = a_.cols;
  auto work = to_ratfun(a_);
  std::vector<bool> used(work.size(), false);
  for (std::size_t col = 0; col < c; ++col) {
    std::size_t best = work.size();
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (used[i] || work[i][col].is_zero()) continue;
      const std::size_t cost = pivot_cost(work[i][col]);
      if (cost < best_cost) {
        best = i;
        best_cost = cost;
        if (cost == 0) break;
      }
    }
    if (best == work.size()) continue;
    used[best] = true;
    pivot_rows_.push_back(best);
    const RatFun inv = work[best][col].inverse();
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (used[i] || work[i][col].is_zero()) continue;
      const RatFun factor = work[i][col] * inv;
      for (std::size_t j = col; j < c; ++j)
        if (!work[best][j].is_zero()) work[i][j] -= factor * work[best][j];
    }
  }
  if (!full_column_rank()) return;

  // Gauss-Jordan inverse of the selected square block.
  std::vector<std::vector<RatFun>> block(c, std::vector<RatFun>(2 * c));
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < c; ++j) block[i][j] = RatFun(a_.rows[pivot_rows_[i]][j]);
    block[i][c + i] = RatFun(1);
  }
  const auto piv = rref(block, c);
  if (piv.size() != c) fail(ErrorCode::Internal, "selected block is singular");
  inverse_.assign(c, std::vector<RatFun>(c));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) inverse_[i][j] = block[i][c + j];
}

std::optional<std::vector<LaurentQ>> ColumnSolver::solve(const std::vector<LaurentQ>& b) const {
  if (!full_column_rank()) fail(ErrorCode::Internal, "ColumnSolver requires full column rank");
  if (b.size() != a_.rows.size()) fail(ErrorCode::InvalidArgument, "right-hand side has wrong length");
  const std::size_t c = a_.cols;
  std::vector<LaurentQ> x(c);
  for (std::size_t i = 0; i < c; ++i) {
    RatFun acc;
    for (std::size_t j = 0; j < c; ++j) {
      const LaurentQ& bj = b[pivot_rows_[j]];
      if (inverse_[i][j].is_zero() || bj.is_zero()) continue;
      acc += inverse_[i][j] * RatFun(bj);
    }
    if (!acc.is_laurent()) return std::nullopt;
    x[i] = acc.to_laurent();
  }
  if (multiply(a_, x) != b) return std::nullopt;
  return x;
}

}  // namespace qschubert
