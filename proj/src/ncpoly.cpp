#include "qschubert/ncpoly.hpp"

#include <algorithm>
#include <memory>

#include "qschubert/error.hpp"

namespace qschubert {

Word Word::from_generators(const Shape& s, const std::vector<Generator>& gens) {
  Word w;
  for (const auto& g : gens) {
    if (g.row < 1 || g.row > s.m || g.col < 1 || g.col > s.n)
      fail(ErrorCode::InvalidArgument, "generator X(" + std::to_string(g.row) + "," +
                                           std::to_string(g.col) + ") outside shape " +
                                           s.to_string());
    w.push_back(letter_of(s, g));
  }
  return w;
}

bool Word::is_normal() const noexcept {
  return std::is_sorted(letters_.begin(), letters_.end(),
                        [](char a, char b) { return static_cast<Letter>(a) < static_cast<Letter>(b); });
}

std::vector<Generator> Word::generators(const Shape& s) const {
  std::vector<Generator> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(generator_of(s, (*this)[i]));
  return out;
}

Multidegree word_multidegree(const Shape& s, const Word& w) {
  Multidegree md{std::vector<int>(static_cast<std::size_t>(s.m), 0),
                 std::vector<int>(static_cast<std::size_t>(s.n), 0)};
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Generator g = generator_of(s, w[i]);
    ++md.rows[static_cast<std::size_t>(g.row - 1)];
    ++md.cols[static_cast<std::size_t>(g.col - 1)];
  }
  return md;
}

// --- NcPoly -----------------------------------------------------------------

NcPoly NcPoly::constant(Shape s, const LaurentQ& c) {
  NcPoly p(s);
  if (!c.is_zero()) p.terms_.emplace(Word(), c);
  return p;
}

NcPoly NcPoly::term(Shape s, const Word& w, const LaurentQ& c) {
  if (!w.is_normal()) fail(ErrorCode::InvalidArgument, "NcPoly::term requires a normal word");
  NcPoly p(s);
  p.add_term(w, c);
  return p;
}

LaurentQ NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentQ() : it->second;
}

void NcPoly::add_term(const Word& w, const LaurentQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NcPoly& NcPoly::operator+=(const NcPoly& rhs) {
  if (!(shape_ == rhs.shape_)) fail(ErrorCode::ShapeMismatch, "adding polynomials of different shapes");
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& rhs) { return *this += -rhs; }

NcPoly& NcPoly::operator*=(const LaurentQ& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

NcPoly NcPoly::operator-() const {
  NcPoly r = *this;
  for (auto& [w, x] : r.terms_) x = -x;
  return r;
}

std::map<Word, Rational> NcPoly::eval(const Rational& q0) const {
  std::map<Word, Rational> out;
  for (const auto& [w, c] : terms_) {
    Rational v = c.eval(q0);
    if (sgn(v) != 0) out.emplace(w, v);
  }
  return out;
}

std::string generator_name(const Shape& s, Generator g) {
  if (s.m < 10 && s.n < 10) return "X" + std::to_string(g.row) + std::to_string(g.col);
  return "X" + std::to_string(g.row) + "_" + std::to_string(g.col);
}

std::string word_to_string(const Shape& s, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += "*";
    out += generator_name(s, generator_of(s, w[i]));
  }
  return out;
}

std::string NcPoly::to_string() const {
  std::string out;
  for (const auto& [w, c] : terms_) append_term(out, c, w.empty() ? "" : word_to_string(shape_, w));
  return out.empty() ? "0" : out;
}

std::optional<Multidegree> multidegree(const NcPoly& p) {
  std::optional<Multidegree> common;
  for (const auto& [w, c] : p.terms()) {
    Multidegree md = word_multidegree(p.shape(), w);
    if (!common) {
      common = std::move(md);
    } else if (!(*common == md)) {
      return std::nullopt;
    }
  }
  return common;
}

// --- graded bases -------------------------------------------------------------

namespace {

void sorted_words(int letters, int degree, Letter from, Word& cur, std::vector<Word>& out) {
  if (static_cast<int>(cur.size()) == degree) {
    out.push_back(cur);
    return;
  }
  for (int x = from; x < letters; ++x) {
    cur.push_back(static_cast<Letter>(x));
    sorted_words(letters, degree, static_cast<Letter>(x), cur, out);
    cur.pop_back();
  }
}

void sorted_words_md(const Shape& s, std::vector<int>& rows, std::vector<int>& cols, int remaining,
                     Letter from, Word& cur, std::vector<Word>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int x = from; x < s.generator_count(); ++x) {
    const Generator g = generator_of(s, static_cast<Letter>(x));
    auto& r = rows[static_cast<std::size_t>(g.row - 1)];
    auto& c = cols[static_cast<std::size_t>(g.col - 1)];
    if (r == 0 || c == 0) continue;
    --r;
    --c;
    cur.push_back(static_cast<Letter>(x));
    sorted_words_md(s, rows, cols, remaining - 1, static_cast<Letter>(x), cur, out);
    cur.pop_back();
    ++r;
    ++c;
  }
}

}  // namespace

std::vector<Word> graded_basis(const Shape& s, int degree) {
  if (degree < 0) fail(ErrorCode::InvalidArgument, "negative degree");
  std::vector<Word> out;
  Word cur;
  sorted_words(s.generator_count(), degree, 0, cur, out);
  return out;
}

std::vector<Word> graded_basis(const Shape& s, const Multidegree& md) {
  if (md.rows.size() != static_cast<std::size_t>(s.m) || md.cols.size() != static_cast<std::size_t>(s.n))
    fail(ErrorCode::ShapeMismatch, "multidegree does not match shape " + s.to_string());
  int total_r = 0, total_c = 0;
  for (int r : md.rows) total_r += r;
  for (int c : md.cols) total_c += c;
  std::vector<Word> out;
  if (total_r != total_c) return out;
  auto rows = md.rows;
  auto cols = md.cols;
  Word cur;
  sorted_words_md(s, rows, cols, total_r, 0, cur, out);
  return out;
}

// --- rewriting ------------------------------------------------------------------

std::vector<PairRewrite> rewrite_pair(const Shape& s, Letter a, Letter b) {
  if (a <= b) return {{LaurentQ(1), a, b}};
  const Generator ga = generator_of(s, a);  // X_{ij}
  const Generator gb = generator_of(s, b);  // X_{kl}, (k,l) < (i,j)
  const int i = ga.row, j = ga.col, k = gb.row, l = gb.col;
  if (i == k || j == l) {
    // X_{il}X_{ij} = q X_{ij}X_{il} (l < j), and likewise down a column.
    return {{LaurentQ::q_power(-1), b, a}};
  }
  if (j < l) {
    // k < i, j < l: X_{ij} and X_{kl} commute.
    return {{LaurentQ(1), b, a}};
  }
  // k < i, l < j: X_{ij}X_{kl} = X_{kl}X_{ij} - (q - q^{-1}) X_{kj}X_{il}.
  return {{LaurentQ(1), b, a},
          {-LaurentQ::q_minus_qinv(), letter_of(s, {k, j}), letter_of(s, {i, l})}};
}

QuantumMatrixAlgebra::QuantumMatrixAlgebra(Shape s, int degree_budget)
    : shape_(s), budget_(degree_budget) {
  if (s.m < 1 || s.n < 1) fail(ErrorCode::InvalidArgument, "shape must be at least 1x1");
  if (s.generator_count() > 255) fail(ErrorCode::InvalidArgument, "shape too large");
}

void QuantumMatrixAlgebra::check_budget(std::size_t length) const {
  if (static_cast<int>(length) > budget_)
    fail(ErrorCode::BudgetExceeded, "word of length " + std::to_string(length) +
                                        " exceeds degree budget " + std::to_string(budget_));
}

void QuantumMatrixAlgebra::check_shape(const NcPoly& p) const {
  if (!(p.shape() == shape_))
    fail(ErrorCode::ShapeMismatch,
         "polynomial of shape " + p.shape().to_string() + " used in O_q(M_" + shape_.to_string() + ")");
}

NcPoly QuantumMatrixAlgebra::generator(int row, int col) const {
  const Word w = Word::from_generators(shape_, {{row, col}});
  return NcPoly::term(shape_, w, LaurentQ(1));
}

const QuantumMatrixAlgebra::TermList& QuantumMatrixAlgebra::right_multiply(const Word& normal,
                                                                            Letter x) const {
  std::string key = normal.bytes();
  key.push_back(static_cast<char>(x));
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  std::map<Word, LaurentQ> acc;
  if (normal.empty() || normal.back() <= x) {
    acc.emplace(Word(key), LaurentQ(1));
  } else {
    Word prefix = normal;
    const Letter a = prefix.back();
    prefix.pop_back();
    for (const auto& rw : rewrite_pair(shape_, a, x)) {
      // prefix * first * second, folded one letter at a time.
      for (const auto& [w1, c1] : right_multiply(prefix, rw.first)) {
        for (const auto& [w2, c2] : right_multiply(w1, rw.second)) {
          LaurentQ c = rw.coeff * c1 * c2;
          auto [it, inserted] = acc.try_emplace(w2, c);
          if (!inserted) it->second += c;
        }
      }
    }
  }
  TermList list;
  for (auto& [w, c] : acc)
    if (!c.is_zero()) list.emplace_back(w, std::move(c));
  return cache_.emplace(std::move(key), std::move(list)).first->second;
}

NcPoly QuantumMatrixAlgebra::normal_form(const Word& w) const {
  check_budget(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] >= shape_.generator_count()) fail(ErrorCode::InvalidArgument, "letter outside shape");
  std::lock_guard lock(mutex_);
  std::map<Word, LaurentQ> cur{{Word(), LaurentQ(1)}};
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::map<Word, LaurentQ> next;
    for (const auto& [u, c] : cur) {
      for (const auto& [v, d] : right_multiply(u, w[i])) {
        auto [it, inserted] = next.try_emplace(v, c * d);
        if (!inserted) it->second += c * d;
      }
    }
    cur = std::move(next);
  }
  NcPoly p(shape_);
  for (const auto& [u, c] : cur) p.add_term(u, c);
  return p;
}

NcPoly QuantumMatrixAlgebra::multiply(const NcPoly& a, const NcPoly& b) const {
  check_shape(a);
  check_shape(b);
  NcPoly out(shape_);
  if (a.is_zero() || b.is_zero()) return out;
  std::lock_guard lock(mutex_);
  for (const auto& [wb, cb] : b.terms()) {
    std::map<Word, LaurentQ> cur;
    for (const auto& [wa, ca] : a.terms()) {
      check_budget(wa.size() + wb.size());
      cur.emplace(wa, ca * cb);
    }
    for (std::size_t i = 0; i < wb.size(); ++i) {
      std::map<Word, LaurentQ> next;
      for (const auto& [u, c] : cur) {
        for (const auto& [v, d] : right_multiply(u, wb[i])) {
          auto [it, inserted] = next.try_emplace(v, c * d);
          if (!inserted) it->second += c * d;
        }
      }
      cur = std::move(next);
    }
    for (const auto& [u, c] : cur) out.add_term(u, c);
  }
  return out;
}

NcPoly QuantumMatrixAlgebra::product(const std::vector<NcPoly>& factors) const {
  NcPoly acc = one();
  for (const auto& f : factors) acc = multiply(acc, f);
  return acc;
}

std::map<Word, LaurentQ> QuantumMatrixAlgebra::rewrite_at(const Word& w, std::size_t pos) const {
  if (pos + 1 >= w.size() || w[pos] <= w[pos + 1])
    fail(ErrorCode::InvalidArgument, "no descending pair at the requested position");
  std::map<Word, LaurentQ> out;
  const std::string& bytes = w.bytes();
  for (const auto& rw : rewrite_pair(shape_, w[pos], w[pos + 1])) {
    std::string next = bytes.substr(0, pos);
    next.push_back(static_cast<char>(rw.first));
    next.push_back(static_cast<char>(rw.second));
    next += bytes.substr(pos + 2);
    auto [it, inserted] = out.try_emplace(Word(std::move(next)), rw.coeff);
    if (!inserted) it->second += rw.coeff;
  }
  return out;
}

NcPoly QuantumMatrixAlgebra::reduce_leftmost(std::map<Word, LaurentQ> terms) const {
  NcPoly out(shape_);
  while (!terms.empty()) {
    auto node = terms.extract(terms.begin());
    const Word& w = node.key();
    const LaurentQ& c = node.mapped();
    if (c.is_zero()) continue;
    std::size_t pos = 0;
    while (pos + 1 < w.size() && w[pos] <= w[pos + 1]) ++pos;
    if (pos + 1 >= w.size()) {
      out.add_term(w, c);
      continue;
    }
    for (const auto& [v, d] : rewrite_at(w, pos)) {
      auto [it, inserted] = terms.try_emplace(v, c * d);
      if (!inserted) {
        it->second += c * d;
        if (it->second.is_zero()) terms.erase(it);
      }
    }
  }
  return out;
}

std::size_t QuantumMatrixAlgebra::cache_size() const {
  std::lock_guard lock(mutex_);
  return cache_.size();
}

namespace {

const QuantumMatrixAlgebra& shared_algebra(const Shape& s) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<QuantumMatrixAlgebra>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[{s.m, s.n}];
  if (!slot) slot = std::make_unique<QuantumMatrixAlgebra>(s);
  return *slot;
}

}  // namespace

NcPoly normal_form(const Word& w, const Shape& s) { return shared_algebra(s).normal_form(w); }

NcPoly nc_mul(const NcPoly& a, const NcPoly& b) {
  if (!(a.shape() == b.shape())) fail(ErrorCode::ShapeMismatch, "nc_mul of different shapes");
  return shared_algebra(a.shape()).multiply(a, b);
}

ConfluenceReport confluence_check(const Shape& s) {
  QuantumMatrixAlgebra alg(s);
  ConfluenceReport report;
  report.shape = s;
  const int letters = s.generator_count();
  for (int a = 0; a < letters; ++a) {
    for (int b = 0; b <= a; ++b) {
      for (int c = 0; c <= b; ++c) {
        if (a == b && b == c) continue;
        Word w;
        w.push_back(static_cast<Letter>(a));
        w.push_back(static_cast<Letter>(b));
        w.push_back(static_cast<Letter>(c));
        // Strategy 1 rewrites the left pair first, strategy 2 the right pair.
        NcPoly left = a > b ? alg.reduce_leftmost(alg.rewrite_at(w, 0))
                            : alg.reduce_leftmost({{w, LaurentQ(1)}});
        NcPoly right = b > c ? alg.reduce_leftmost(alg.rewrite_at(w, 1))
                             : alg.reduce_leftmost({{w, LaurentQ(1)}});
        ++report.triples_checked;
        if (!(left == right) || !(left == alg.normal_form(w)))
          report.failures.push_back({w, std::move(left), std::move(right)});
      }
    }
  }
  return report;
}

}  // namespace qschubert
