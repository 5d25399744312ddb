#include "qschubert/poset.hpp"

#include <algorithm>
#include <numeric>

#include "qschubert/error.hpp"

namespace qschubert {

namespace {

bool componentwise_leq(const std::vector<int>& a, const std::vector<int>& b, std::size_t len) {
  for (std::size_t s = 0; s < len; ++s)
    if (a[s] > b[s]) return false;
  return true;
}

std::vector<std::vector<int>> subsets(int k, int n) {
  std::vector<std::vector<int>> out;
  for (const auto& s : IndexSet::all(k, n)) out.push_back(s.cols);
  return out;
}

}  // namespace

bool leq_st(const IndexSet& a, const IndexSet& b) {
  if (a.size() != b.size()) fail(ErrorCode::InvalidArgument, "index sets of different sizes are not comparable");
  return componentwise_leq(a.cols, b.cols, a.size());
}

bool leq_st(const IndexPair& a, const IndexPair& b) {
  if (a.size() < b.size()) return false;
  return componentwise_leq(a.rows, b.rows, b.size()) && componentwise_leq(a.cols, b.cols, b.size());
}

// --- MinorPoset ---------------------------------------------------------------

template <typename T>
MinorPoset<T>::MinorPoset(PosetKind kind, Shape shape, std::vector<T> elements)
    : kind_(kind), shape_(shape), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  const std::size_t n = elements_.size();
  table_.assign(n * n, false);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = leq_st(elements_[a], elements_[b]);
}

template <typename T>
std::optional<std::size_t> MinorPoset<T>::index_of(const T& x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || !(*it == x)) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

template <typename T>
std::size_t MinorPoset<T>::require(const T& x) const {
  const auto idx = index_of(x);
  if (!idx) fail(ErrorCode::InvalidArgument, x.to_string() + " is not an element of the poset");
  return *idx;
}

template <typename T>
std::vector<T> MinorPoset<T>::upper_set(const T& g) const {
  const std::size_t gi = require(g);
  std::vector<T> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (leq(gi, x)) out.push_back(elements_[x]);
  return out;
}

template <typename T>
std::vector<T> MinorPoset<T>::ideal_complement(const T& g) const {
  const std::size_t gi = require(g);
  std::vector<T> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (!leq(gi, x)) out.push_back(elements_[x]);
  return out;
}

template <typename T>
std::vector<T> MinorPoset<T>::upper_neighbours(const T& g) const {
  const std::size_t gi = require(g);
  std::vector<T> out;
  for (std::size_t x = 0; x < size(); ++x) {
    if (x == gi || !leq(gi, x)) continue;
    bool cover = true;
    for (std::size_t y = 0; y < size() && cover; ++y)
      if (y != gi && y != x && leq(gi, y) && leq(y, x)) cover = false;
    if (cover) out.push_back(elements_[x]);
  }
  return out;
}

template <typename T>
MinorPoset<T> MinorPoset<T>::restrict_upper(const T& g) const {
  return MinorPoset(kind_, shape_, upper_set(g));
}

template <typename T>
std::vector<T> MinorPoset<T>::minimal_elements() const {
  std::vector<T> out;
  for (std::size_t x = 0; x < size(); ++x) {
    bool minimal = true;
    for (std::size_t y = 0; y < size() && minimal; ++y)
      if (y != x && leq(y, x)) minimal = false;
    if (minimal) out.push_back(elements_[x]);
  }
  return out;
}

template <typename T>
int MinorPoset<T>::rank() const {
  // Longest chain ending at each element, processed in an order where every
  // element comes after all elements strictly below it.
  const std::size_t n = size();
  std::vector<std::size_t> below(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (y != x && leq(y, x)) ++below[x];
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return below[a] < below[b]; });
  std::vector<int> longest(n, 1);
  int best = 0;
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t x = order[a];
    for (std::size_t b = 0; b < a; ++b) {
      const std::size_t y = order[b];
      if (leq(y, x) && y != x) longest[x] = std::max(longest[x], longest[y] + 1);
    }
    best = std::max(best, longest[x]);
  }
  return best;
}

template <typename T>
std::vector<mpz_class> MinorPoset<T>::multichain_counts(int max_degree) const {
  std::vector<mpz_class> out;
  if (max_degree < 0) return out;
  out.emplace_back(1);
  const std::size_t n = size();
  // ending[x] = number of multichains of the current length whose top is x.
  std::vector<mpz_class> ending(n, mpz_class(1));
  for (int d = 1; d <= max_degree; ++d) {
    if (d > 1) {
      std::vector<mpz_class> next(n, mpz_class(0));
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (leq(y, x)) next[x] += ending[y];
      ending = std::move(next);
    }
    mpz_class total = 0;
    for (const auto& c : ending) total += c;
    out.push_back(total);
  }
  return out;
}

template class MinorPoset<IndexSet>;
template class MinorPoset<IndexPair>;

GrassmannPoset grassmann_poset(int m, int n) {
  if (m < 1 || n < m) fail(ErrorCode::InvalidArgument, "grassmannian needs 1 <= m <= n");
  return GrassmannPoset(PosetKind::Grassmannian, Shape{m, n}, IndexSet::all(m, n));
}

MatrixPoset matrix_poset(const Shape& s) {
  if (s.m < 1 || s.n < 1) fail(ErrorCode::InvalidArgument, "shape must be at least 1x1");
  std::vector<IndexPair> elems;
  for (int t = 1; t <= std::min(s.m, s.n); ++t)
    for (const auto& r : subsets(t, s.m))
      for (const auto& c : subsets(t, s.n)) elems.emplace_back(r, c);
  return MatrixPoset(PosetKind::Matrix, s, std::move(elems));
}

std::vector<IndexSet> pi_ideal_complement(const IndexSet& g, int m, int n) {
  return grassmann_poset(m, n).ideal_complement(g);
}

std::vector<IndexPair> delta_ideal_complement(const IndexPair& d, const Shape& s) {
  return matrix_poset(s).ideal_complement(d);
}

std::vector<IndexSet> upper_neighbours(const IndexSet& g, int m, int n) {
  return grassmann_poset(m, n).upper_neighbours(g);
}

GkDimension rank_and_gkdim(const IndexSet& g, int m, int n) {
  GkDimension out;
  out.rank = grassmann_poset(m, n).restrict_upper(g).rank();
  const int sum = std::accumulate(g.cols.begin(), g.cols.end(), 0);
  out.formula = m * (n - m) + m * (m + 1) / 2 - sum + 1;
  return out;
}

GkDimension rank_and_gkdim(const IndexPair& d, const Shape& s) {
  GkDimension out;
  out.rank = matrix_poset(s).restrict_upper(d).rank();
  const int r = static_cast<int>(d.size());
  int sum = 0;
  for (std::size_t k = 0; k < d.size(); ++k) sum += d.rows[k] + d.cols[k];
  out.formula = (s.m + s.n) * r - sum + r;
  return out;
}

std::vector<LadderEntry> ladder(const IndexSet& g, int m, int n) {
  if (!g.fits(m, n)) fail(ErrorCode::InvalidArgument, g.to_string() + " is not in Pi_{" + std::to_string(m) + "," + std::to_string(n) + "}");
  std::vector<LadderEntry> out;
  for (int i = 1; i <= m; ++i) {
    const int removed = g.cols[static_cast<std::size_t>(m - i)];
    for (int j = removed + 1; j <= n; ++j) {
      if (std::find(g.cols.begin(), g.cols.end(), j) != g.cols.end()) continue;
      std::vector<int> label;
      for (int c : g.cols)
        if (c != removed) label.push_back(c);
      label.push_back(j);
      std::sort(label.begin(), label.end());
      out.push_back({i, j, IndexSet(std::move(label))});
    }
  }
  return out;
}

IndexSet delta_map(const IndexPair& p, const Shape& s) {
  if (!p.fits(s)) fail(ErrorCode::InvalidArgument, p.to_string() + " outside shape " + s.to_string());
  std::vector<int> k = p.cols;
  for (int c = s.n + 1; c <= s.n + s.m; ++c) {
    const bool removed = std::any_of(p.rows.begin(), p.rows.end(), [&](int i) { return c == s.n + s.m + 1 - i; });
    if (!removed) k.push_back(c);
  }
  return IndexSet(std::move(k));
}

IndexSet delta_map_missing(const Shape& s) {
  std::vector<int> k(static_cast<std::size_t>(s.m));
  std::iota(k.begin(), k.end(), s.n + 1);
  return IndexSet(std::move(k));
}

BlockGapDecomposition gorenstein(const IndexSet& g, int n) {
  const int m = static_cast<int>(g.size());
  if (!g.fits(m, n)) fail(ErrorCode::InvalidArgument, g.to_string() + " exceeds n = " + std::to_string(n));
  BlockGapDecomposition out;
  std::size_t k = 0;
  while (k < g.cols.size()) {
    std::vector<int> block{g.cols[k]};
    while (k + 1 < g.cols.size() && g.cols[k + 1] == g.cols[k] + 1) block.push_back(g.cols[++k]);
    ++k;
    const int gap_end = k < g.cols.size() ? g.cols[k] - 1 : n;
    std::vector<int> gap;
    for (int x = block.back() + 1; x <= gap_end; ++x) gap.push_back(x);
    out.blocks.push_back(std::move(block));
    out.gaps.push_back(std::move(gap));
  }
  const int s = static_cast<int>(out.blocks.size()) - 1;
  out.last_gap_empty = out.gaps.back().empty();
  out.t = out.last_gap_empty ? s - 1 : s;
  out.gorenstein = true;
  for (int i = 1; i <= out.t; ++i)
    if (out.gaps[static_cast<std::size_t>(i - 1)].size() != out.blocks[static_cast<std::size_t>(i)].size())
      out.gorenstein = false;
  return out;
}

template <typename T>
std::vector<mpz_class> h_vector(const MinorPoset<T>& poset) {
  const int dim = poset.rank();
  const auto counts = poset.multichain_counts(dim);
  // h = H(t) * (1-t)^dim truncated at degree dim.
  std::vector<mpz_class> h(static_cast<std::size_t>(dim) + 1, mpz_class(0));
  mpz_class binom = 1;
  for (int k = 0; k <= dim; ++k) {
    const mpz_class sign_binom = (k % 2 == 0) ? binom : mpz_class(-binom);
    for (int d = 0; d + k <= dim; ++d) h[static_cast<std::size_t>(d + k)] += sign_binom * counts[static_cast<std::size_t>(d)];
    binom = binom * (dim - k) / (k + 1);
  }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

template std::vector<mpz_class> h_vector(const MinorPoset<IndexSet>&);
template std::vector<mpz_class> h_vector(const MinorPoset<IndexPair>&);

bool is_palindromic(const std::vector<mpz_class>& h) {
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] != h[h.size() - 1 - i]) return false;
  return true;
}

}  // namespace qschubert
