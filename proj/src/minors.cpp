#include "qschubert/minors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "qschubert/error.hpp"
#include "qschubert/linalg.hpp"

namespace qschubert {

namespace {

bool strictly_increasing(const std::vector<int>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<int>()) == v.end();
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}


// Splits "[..][..]" into bracket contents.
std::vector<std::string> split_brackets(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*') {
      ++i;
      continue;
    }
    if (text[i] != '[') fail(ErrorCode::Parse, "expected '[' in '" + std::string(text) + "'");
    const std::size_t close = text.find(']', i);
    if (close == std::string_view::npos) fail(ErrorCode::Parse, "unbalanced '[' in '" + std::string(text) + "'");
    out.emplace_back(text.substr(i + 1, close - i - 1));
    i = close + 1;
  }
  if (out.empty()) fail(ErrorCode::Parse, "empty minor product");
  return out;
}

int inversions(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inv;
  return inv;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') text = text.substr(1, text.size() - 2);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) return out;
  while (true) {
    skip_ws();
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail(ErrorCode::Parse, "expected integer in '" + std::string(text) + "'");
    out.push_back(std::stoi(std::string(text.substr(start, i - start))));
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != ',') fail(ErrorCode::Parse, "expected ',' in '" + std::string(text) + "'");
    ++i;
  }
  return out;
}

// --- index types --------------------------------------------------------------

IndexPair::IndexPair(std::vector<int> r, std::vector<int> c) : rows(std::move(r)), cols(std::move(c)) {
  if (rows.empty() || rows.size() != cols.size())
    fail(ErrorCode::InvalidArgument, "index pair needs equal nonempty row and column sets");
  if (!strictly_increasing(rows) || !strictly_increasing(cols))
    fail(ErrorCode::InvalidArgument, "index pair sets must be strictly increasing");
}

bool IndexPair::fits(const Shape& s) const {
  return !rows.empty() && rows.front() >= 1 && rows.back() <= s.m && cols.front() >= 1 &&
         cols.back() <= s.n;
}

std::string IndexPair::to_string() const { return "[" + join(rows) + "|" + join(cols) + "]"; }

IndexPair IndexPair::parse(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  if (t.size() >= 2 && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
  const auto bar = t.find('|');
  if (bar == std::string_view::npos) fail(ErrorCode::Parse, "index pair needs '|': '" + std::string(text) + "'");
  try {
    return IndexPair(parse_int_list(t.substr(0, bar)), parse_int_list(t.substr(bar + 1)));
  } catch (const Error& e) {
    fail(ErrorCode::Parse, std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

IndexSet::IndexSet(std::vector<int> c) : cols(std::move(c)) {
  if (cols.empty() || !strictly_increasing(cols))
    fail(ErrorCode::InvalidArgument, "index set must be nonempty and strictly increasing");
}

bool IndexSet::fits(int m, int n) const {
  return static_cast<int>(cols.size()) == m && cols.front() >= 1 && cols.back() <= n;
}

IndexPair IndexSet::as_pair() const {
  std::vector<int> r(cols.size());
  std::iota(r.begin(), r.end(), 1);
  return IndexPair(std::move(r), cols);
}

std::string IndexSet::to_string() const { return "[" + join(cols) + "]"; }

IndexSet IndexSet::parse(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  if (t.size() >= 2 && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
  try {
    return IndexSet(parse_int_list(t));
  } catch (const Error& e) {
    fail(ErrorCode::Parse, std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

std::vector<IndexSet> IndexSet::all(int m, int n) {
  std::vector<IndexSet> out;
  if (m < 1 || m > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(m));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.emplace_back(cur);
    int k = m - 1;
    while (k >= 0 && cur[static_cast<std::size_t>(k)] == n - (m - 1 - k)) --k;
    if (k < 0) break;
    ++cur[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < m; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<IndexSet> parse_index_set_product(std::string_view text) {
  std::vector<IndexSet> out;
  for (const auto& part : split_brackets(text)) out.push_back(IndexSet::parse(part));
  return out;
}

std::vector<IndexPair> parse_index_pair_product(std::string_view text) {
  std::vector<IndexPair> out;
  for (const auto& part : split_brackets(text)) out.push_back(IndexPair::parse(part));
  return out;
}

Multidegree product_multidegree(const Shape& s, const std::vector<IndexPair>& factors) {
  Multidegree md{std::vector<int>(static_cast<std::size_t>(s.m), 0),
                 std::vector<int>(static_cast<std::size_t>(s.n), 0)};
  for (const auto& f : factors) {
    if (!f.fits(s)) fail(ErrorCode::InvalidArgument, "minor " + f.to_string() + " outside shape " + s.to_string());
    for (int r : f.rows) ++md.rows[static_cast<std::size_t>(r - 1)];
    for (int c : f.cols) ++md.cols[static_cast<std::size_t>(c - 1)];
  }
  return md;
}

std::string MinorRelation::to_string() const {
  std::string out;
  for (const auto& t : terms) {
    std::string prod;
    for (const auto& f : t.factors) prod += f.to_string();
    append_term(out, t.coeff, prod);
  }
  return (out.empty() ? "0" : out) + " = 0";
}

// --- minors ------------------------------------------------------------------

NcPoly quantum_minor(const QuantumMatrixAlgebra& alg, const IndexPair& p) {
  const Shape& s = alg.shape();
  if (!p.fits(s)) fail(ErrorCode::InvalidArgument, "minor " + p.to_string() + " outside shape " + s.to_string());
  std::vector<int> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  NcPoly out(s);
  do {
    std::vector<Generator> gens;
    gens.reserve(perm.size());
    for (std::size_t a = 0; a < perm.size(); ++a)
      gens.push_back({p.rows[static_cast<std::size_t>(perm[a])], p.cols[a]});
    const int ell = inversions(perm);
    const LaurentQ coeff = LaurentQ::monomial(Rational(ell % 2 == 0 ? 1 : -1), ell);
    out += alg.normal_form(Word::from_generators(s, gens)) * coeff;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

NcPoly quantum_minor(const IndexPair& p, const Shape& s) {
  QuantumMatrixAlgebra alg(s);
  return quantum_minor(alg, p);
}

NcPoly minor_product(const QuantumMatrixAlgebra& alg, const std::vector<IndexPair>& factors) {
  NcPoly acc = alg.one();
  for (const auto& f : factors) acc = alg.multiply(acc, quantum_minor(alg, f));
  return acc;
}

NcPoly relation_value(const QuantumMatrixAlgebra& alg, const MinorRelation& r) {
  NcPoly acc(alg.shape());
  for (const auto& t : r.terms) acc += minor_product(alg, t.factors) * t.coeff;
  return acc;
}

std::vector<MinorRelation> find_relations(const QuantumMatrixAlgebra& alg,
                                          const std::vector<std::vector<IndexPair>>& products) {
  const Shape& s = alg.shape();
  std::vector<MinorRelation> out;
  if (products.empty()) return out;
  const Multidegree md = product_multidegree(s, products.front());
  for (const auto& prod : products)
    if (!(product_multidegree(s, prod) == md))
      fail(ErrorCode::InhomogeneousInput, "products do not share a multidegree");

  std::vector<NcPoly> values;
  values.reserve(products.size());
  std::map<Word, std::size_t> row_of;
  for (const auto& prod : products) {
    values.push_back(minor_product(alg, prod));
    for (const auto& [w, c] : values.back().terms()) row_of.try_emplace(w, 0);
  }
  std::size_t idx = 0;
  for (auto& [w, r] : row_of) r = idx++;
  LaurentMatrix mat(row_of.size(), products.size());
  for (std::size_t j = 0; j < values.size(); ++j)
    for (const auto& [w, c] : values[j].terms()) mat.rows[row_of.at(w)][j] = c;

  for (const auto& v : solve_kernel(mat)) {
    MinorRelation rel;
    rel.shape = s;
    NcPoly check(s);
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j].is_zero()) continue;
      rel.terms.push_back({v[j], products[j]});
      check += values[j] * v[j];
    }
    if (!check.is_zero()) fail(ErrorCode::VerificationFailed, "kernel vector does not vanish: " + rel.to_string());
    rel.verified = true;
    out.push_back(std::move(rel));
  }
  return out;
}

MinorRelation muir_extend(const QuantumMatrixAlgebra& alg, const MinorRelation& r,
                          const std::vector<int>& p_set, const std::vector<int>& q_set) {
  const Shape& s = alg.shape();
  if (s.m != s.n) fail(ErrorCode::PreconditionViolated, "Muir extension lives in a square algebra");
  if (!(r.shape == s)) fail(ErrorCode::ShapeMismatch, "relation shape differs from algebra shape");
  const int n = s.n;
  if (p_set.size() != q_set.size())
    fail(ErrorCode::PreconditionViolated, "P and Q must have the same cardinality");
  const std::set<int> p(p_set.begin(), p_set.end()), q(q_set.begin(), q_set.end());
  if (p.size() != p_set.size() || q.size() != q_set.size())
    fail(ErrorCode::PreconditionViolated, "P and Q must not repeat elements");
  for (int x : p)
    if (x < 1 || x > n) fail(ErrorCode::PreconditionViolated, "P outside {1..n}");
  for (int x : q)
    if (x < 1 || x > n) fail(ErrorCode::PreconditionViolated, "Q outside {1..n}");
  for (const auto& t : r.terms)
    for (const auto& f : t.factors) {
      for (int i : f.rows)
        if (!p.count(i)) fail(ErrorCode::PreconditionViolated, "row set of " + f.to_string() + " not inside P");
      for (int j : f.cols)
        if (!q.count(j)) fail(ErrorCode::PreconditionViolated, "column set of " + f.to_string() + " not inside Q");
    }
  if (!relation_value(alg, r).is_zero())
    fail(ErrorCode::PreconditionViolated, "input relation does not vanish: " + r.to_string());

  std::vector<int> p_bar, q_bar;
  for (int x = 1; x <= n; ++x) {
    if (!p.count(x)) p_bar.push_back(x);
    if (!q.count(x)) q_bar.push_back(x);
  }
  auto extend = [](std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
  };
  MinorRelation out;
  out.shape = s;
  for (const auto& t : r.terms) {
    MinorRelation::Term nt{t.coeff, {}};
    for (const auto& f : t.factors) nt.factors.emplace_back(extend(f.rows, p_bar), extend(f.cols, q_bar));
    out.terms.push_back(std::move(nt));
  }
  if (!relation_value(alg, out).is_zero())
    fail(ErrorCode::VerificationFailed, "extended relation does not vanish: " + out.to_string());
  out.verified = true;
  return out;
}

NcPoly scale_by_q(const NcPoly& p) {
  NcPoly out(p.shape());
  for (const auto& [w, c] : p.terms()) out.add_term(w, c.shifted(static_cast<int>(w.size())));
  return out;
}

}  // namespace qschubert
