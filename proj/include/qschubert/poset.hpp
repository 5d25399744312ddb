#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "qschubert/minors.hpp"

namespace qschubert {

/// Componentwise order on index sets of equal size.
bool leq_st(const IndexSet& a, const IndexSet& b);
/// (I,J) <= (K,L) iff |I| >= |K| and i_s <= k_s, j_s <= l_s for s <= |K|.
bool leq_st(const IndexPair& a, const IndexPair& b);

enum class PosetKind { Grassmannian, Matrix };

/// A finite poset of minor labels under <=_st, materialized with its full
/// comparability table. T is IndexSet (Pi_{m,n}) or IndexPair (Delta_{m,n}).
template <typename T>
class MinorPoset {
 public:
  MinorPoset(PosetKind kind, Shape shape, std::vector<T> elements);

  PosetKind kind() const noexcept { return kind_; }
  const Shape& shape() const noexcept { return shape_; }
  const std::vector<T>& elements() const& noexcept { return elements_; }
  std::vector<T> elements() && { return std::move(elements_); }
  std::size_t size() const noexcept { return elements_.size(); }

  std::optional<std::size_t> index_of(const T& x) const;
  bool contains(const T& x) const { return index_of(x).has_value(); }
  bool leq(std::size_t a, std::size_t b) const { return table_[a * elements_.size() + b]; }
  bool leq(const T& a, const T& b) const { return leq_st(a, b); }

  /// Elements x with x >= g, in universe order.
  std::vector<T> upper_set(const T& g) const;
  /// Elements x with x not >= g.
  std::vector<T> ideal_complement(const T& g) const;
  /// Covers of g.
  std::vector<T> upper_neighbours(const T& g) const;
  /// The subposet {x : x >= g}.
  MinorPoset restrict_upper(const T& g) const;

  /// Minimal elements.
  std::vector<T> minimal_elements() const;
  /// Number of elements of a longest chain (0 for the empty poset).
  int rank() const;
  /// Number of multichains x_1 <= ... <= x_d for d = 0..max_degree.
  std::vector<mpz_class> multichain_counts(int max_degree) const;

 private:
  std::size_t require(const T& x) const;

  PosetKind kind_;
  Shape shape_;
  std::vector<T> elements_;
  std::vector<bool> table_;
};

using GrassmannPoset = MinorPoset<IndexSet>;
using MatrixPoset = MinorPoset<IndexPair>;

/// Pi_{m,n}: all m-subsets of {1..n}.
GrassmannPoset grassmann_poset(int m, int n);
/// Delta_{m,n}: all index pairs of every size 1..min(m,n).
MatrixPoset matrix_poset(const Shape& s);

/// Pi^g (elements not >= g).
std::vector<IndexSet> pi_ideal_complement(const IndexSet& g, int m, int n);
/// Delta^d (elements not >= d).
std::vector<IndexPair> delta_ideal_complement(const IndexPair& d, const Shape& s);
std::vector<IndexSet> upper_neighbours(const IndexSet& g, int m, int n);

struct GkDimension {
  /// Longest chain of the residual poset, minimal element counted as rank 1.
  int rank = 0;
  /// The closed form.
  int formula = 0;
  bool agrees() const noexcept { return rank == formula; }
};

/// Residual poset {x >= g} of Pi_{m,n}; closed form
/// m(n-m) + m(m+1)/2 - sum(g) + 1.
GkDimension rank_and_gkdim(const IndexSet& g, int m, int n);
/// Residual poset {x >= d} of Delta_{m,n}; closed form
/// (m+n)r - sum(i_s + j_s) + r with r = |d|.
GkDimension rank_and_gkdim(const IndexPair& d, const Shape& s);

struct LadderEntry {
  int i = 0;
  int j = 0;
  /// m_ij = (g minus g_{m+1-i}) plus j.
  IndexSet label;
};

/// Ladder positions (i,j) with j > g_{m+1-i} and j not in g, ordered by
/// (i, j), each with its label.
std::vector<LadderEntry> ladder(const IndexSet& g, int m, int n);

/// K_{(I,J)} = ({j_1..j_t} u {n+1..n+m}) minus {n+m+1-i_1, ..}, an element of
/// Pi_{m,m+n}.
IndexSet delta_map(const IndexPair& p, const Shape& s);
/// M = {n+1, .., n+m}, the one element of Pi_{m,m+n} missed by delta_map.
IndexSet delta_map_missing(const Shape& s);

struct BlockGapDecomposition {
  std::vector<std::vector<int>> blocks;
  std::vector<std::vector<int>> gaps;
  bool last_gap_empty = false;
  /// Number of conditions |chi_{i-1}| = |beta_i| checked: s, or s-1 when the
  /// last gap is empty.
  int t = 0;
  bool gorenstein = false;
};

/// Blocks are maximal runs of consecutive integers in g, read from g_1; the
/// gap after each block is the run of non-members up to the next block (or to
/// n). Integers below g_1 belong to no gap.
BlockGapDecomposition gorenstein(const IndexSet& g, int n);

/// h-vector of the Hilbert series sum_d H(d) t^d = h(t) / (1-t)^rank, where
/// H(d) counts multichains of the poset; trailing zeros trimmed.
template <typename T>
std::vector<mpz_class> h_vector(const MinorPoset<T>& poset);

bool is_palindromic(const std::vector<mpz_class>& h);

}  // namespace qschubert
