#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qschubert/laurent.hpp"

namespace qschubert {

struct Shape {
  int m = 0;
  int n = 0;

  int generator_count() const noexcept { return m * n; }
  friend bool operator==(const Shape&, const Shape&) = default;
  std::string to_string() const { return std::to_string(m) + "x" + std::to_string(n); }
};

/// Generator X_{row,col}, 1-based.
struct Generator {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Letter index of X_{row,col}: (row-1)*n + (col-1). Letter order is the
/// row-major generator order used for normal words.
using Letter = std::uint8_t;

inline Letter letter_of(const Shape& s, Generator g) {
  return static_cast<Letter>((g.row - 1) * s.n + (g.col - 1));
}
inline Generator generator_of(const Shape& s, Letter x) {
  return {x / s.n + 1, x % s.n + 1};
}

/// A word in the generators, stored as a byte string of letters. Ordering is
/// lexicographic on letters.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters) : letters_(std::move(letters)) {}
  static Word from_generators(const Shape& s, const std::vector<Generator>& gens);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }
  Letter back() const { return static_cast<Letter>(letters_.back()); }

  void push_back(Letter x) { letters_.push_back(static_cast<char>(x)); }
  void pop_back() { letters_.pop_back(); }
  Word operator+(const Word& rhs) const { return Word(letters_ + rhs.letters_); }

  /// Letters nondecreasing.
  bool is_normal() const noexcept;
  const std::string& bytes() const noexcept { return letters_; }
  std::vector<Generator> generators(const Shape& s) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend bool operator<(const Word& a, const Word& b) { return a.letters_ < b.letters_; }

 private:
  std::string letters_;
};

/// Row and column multidegree: counts of each row index and each column index.
struct Multidegree {
  std::vector<int> rows;
  std::vector<int> cols;
  friend auto operator<=>(const Multidegree&, const Multidegree&) = default;
};

Multidegree word_multidegree(const Shape& s, const Word& w);

/// Element of O_q(M_{m,n}) in normal form: a sparse map from normal words to
/// nonzero Laurent coefficients.
class NcPoly {
 public:
  using Terms = std::map<Word, LaurentQ>;

  NcPoly() = default;
  explicit NcPoly(Shape s) : shape_(s) {}
  static NcPoly constant(Shape s, const LaurentQ& c);
  /// Single normal word with coefficient c; throws if w is not normal.
  static NcPoly term(Shape s, const Word& w, const LaurentQ& c);

  const Shape& shape() const noexcept { return shape_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  LaurentQ coeff(const Word& w) const;

  /// Adds c*w for a normal word w.
  void add_term(const Word& w, const LaurentQ& c);

  NcPoly& operator+=(const NcPoly& rhs);
  NcPoly& operator-=(const NcPoly& rhs);
  NcPoly& operator*=(const LaurentQ& c);
  NcPoly operator-() const;
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(NcPoly a, const LaurentQ& c) { return a *= c; }
  friend NcPoly operator*(const LaurentQ& c, NcPoly a) { return a *= c; }
  friend bool operator==(const NcPoly& a, const NcPoly& b) {
    return a.shape_ == b.shape_ && a.terms_ == b.terms_;
  }

  /// Coefficientwise specialization at q = q0.
  std::map<Word, Rational> eval(const Rational& q0) const;

  std::string to_string() const;

 private:
  Shape shape_;
  Terms terms_;
};

std::string generator_name(const Shape& s, Generator g);
std::string word_to_string(const Shape& s, const Word& w);

/// The common multidegree of all terms, or nullopt when p is zero or not
/// multihomogeneous.
std::optional<Multidegree> multidegree(const NcPoly& p);

/// All normal words of total degree d, lexicographically ordered.
std::vector<Word> graded_basis(const Shape& s, int degree);
/// All normal words of the given multidegree, lexicographically ordered.
std::vector<Word> graded_basis(const Shape& s, const Multidegree& md);

/// One rewriting alternative for a descending adjacent pair.
struct PairRewrite {
  LaurentQ coeff;
  Letter first;
  Letter second;
};

/// The oriented defining relations: for letters a > b, the expansion of the
/// product a*b as a combination of ascending pairs.
std::vector<PairRewrite> rewrite_pair(const Shape& s, Letter a, Letter b);

struct ConfluenceFailure {
  Word triple;
  NcPoly left_first;
  NcPoly right_first;
};

struct ConfluenceReport {
  Shape shape;
  std::size_t triples_checked = 0;
  std::vector<ConfluenceFailure> failures;
  bool passed() const noexcept { return failures.empty(); }
};

/// The quantum matrix algebra O_q(M_{m,n}) with a memoized normal-form kernel.
///
/// Normal forms are computed by folding letters onto a normal word from the
/// right; each (normal word, letter) product is cached. The cache is filled
/// once per key and guarded by a mutex, so an instance may be shared.
class QuantumMatrixAlgebra {
 public:
  explicit QuantumMatrixAlgebra(Shape s, int degree_budget = 24);

  const Shape& shape() const noexcept { return shape_; }
  int degree_budget() const noexcept { return budget_; }

  NcPoly one() const { return NcPoly::constant(shape_, LaurentQ(1)); }
  NcPoly generator(int row, int col) const;

  NcPoly normal_form(const Word& w) const;
  NcPoly multiply(const NcPoly& a, const NcPoly& b) const;
  /// Product of a sequence of factors, left to right.
  NcPoly product(const std::vector<NcPoly>& factors) const;

  /// Fully reduces an arbitrary linear combination of (not necessarily
  /// normal) words by repeatedly rewriting the leftmost descending pair.
  /// Independent of the memoized path; used to certify confluence.
  NcPoly reduce_leftmost(std::map<Word, LaurentQ> terms) const;

  /// Rewrites the descending pair at positions (pos, pos+1) of w once.
  std::map<Word, LaurentQ> rewrite_at(const Word& w, std::size_t pos) const;

  std::size_t cache_size() const;

 private:
  using TermList = std::vector<std::pair<Word, LaurentQ>>;
  const TermList& right_multiply(const Word& normal, Letter x) const;
  void check_budget(std::size_t length) const;
  void check_shape(const NcPoly& p) const;

  Shape shape_;
  int budget_;
  mutable std::recursive_mutex mutex_;
  mutable std::unordered_map<std::string, TermList> cache_;
};

NcPoly normal_form(const Word& w, const Shape& s);
NcPoly nc_mul(const NcPoly& a, const NcPoly& b);

/// Diamond-lemma certificate: every overlap a*b*c with a >= b >= c (and at
/// least one strict descent) reduces to the same normal form whichever pair
/// is rewritten first.
ConfluenceReport confluence_check(const Shape& s);

}  // namespace qschubert
