#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qschubert/linalg.hpp"
#include "qschubert/poset.hpp"

namespace qschubert {

/// Product of quantum minors along a multichain of Delta_{m,n}. Its degree
/// is the total minor size.
struct DetMonomial {
  std::vector<IndexPair> factors;

  int degree() const noexcept;
  bool is_standard() const;
  /// "[1|1][2|2]", or "1" for the empty product.
  std::string to_string() const;

  friend auto operator<=>(const DetMonomial&, const DetMonomial&) = default;
};

/// Element of O_q(M_{m,n}) or of its quotient by <Delta^delta>, on the
/// standard monomial basis.
struct DetAlgElement {
  Shape shape;
  std::optional<IndexPair> delta;
  std::map<DetMonomial, LaurentQ> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  LaurentQ coeff(const DetMonomial& s) const;
  void add_term(const DetMonomial& s, const LaurentQ& c);

  DetAlgElement& operator+=(const DetAlgElement& rhs);
  DetAlgElement& operator-=(const DetAlgElement& rhs);
  DetAlgElement& operator*=(const LaurentQ& c);
  friend DetAlgElement operator+(DetAlgElement a, const DetAlgElement& b) { return a += b; }
  friend DetAlgElement operator-(DetAlgElement a, const DetAlgElement& b) { return a -= b; }
  friend DetAlgElement operator*(DetAlgElement a, const LaurentQ& c) { return a *= c; }
  friend bool operator==(const DetAlgElement& a, const DetAlgElement& b) {
    return a.shape == b.shape && a.delta == b.delta && a.terms == b.terms;
  }

  std::string to_string() const;
};

/// O_q(M_{m,n}) as a quantum graded A.S.L. on Delta_{m,n}, with cached
/// minors, standard monomial expansions and per-multidegree solvers.
class QuantumMatrixMinors {
 public:
  /// A zero budget follows the global component_budget().
  explicit QuantumMatrixMinors(Shape s, std::size_t component_budget = 0);

  const Shape& shape() const noexcept { return alg_.shape(); }
  const QuantumMatrixAlgebra& algebra() const noexcept { return alg_; }
  const MatrixPoset& poset() const noexcept { return poset_; }

  const NcPoly& minor(const IndexPair& p) const;
  NcPoly product(const std::vector<IndexPair>& factors) const;
  NcPoly expand(const DetMonomial& s) const;
  NcPoly expand(const DetAlgElement& e) const;

  /// All multichains of Delta_{m,n} of total degree d.
  const std::vector<DetMonomial>& standard_monomials(int d) const;

  DetAlgElement straighten(const std::vector<IndexPair>& factors) const;
  DetAlgElement multiply(const std::vector<IndexPair>& factors, const std::optional<IndexPair>& delta) const;

 private:
  struct Component {
    std::vector<DetMonomial> basis;
    std::map<Word, std::size_t> row_of;
    std::unique_ptr<ColumnSolver> solver;
  };
  const Component& component(const Multidegree& md) const;

  std::size_t budget_;
  QuantumMatrixAlgebra alg_;
  MatrixPoset poset_;
  mutable std::mutex mutex_;
  mutable std::map<IndexPair, std::unique_ptr<NcPoly>> minors_;
  mutable std::map<DetMonomial, std::unique_ptr<NcPoly>> expansions_;
  mutable std::map<Multidegree, std::unique_ptr<Component>> components_;
  mutable std::map<int, std::unique_ptr<std::vector<DetMonomial>>> monomials_;
};

/// Shared instance per shape.
const QuantumMatrixMinors& matrix_minors(const Shape& s);

/// Multichains of Delta minus Delta^delta of total degree d.
std::vector<DetMonomial> det_standard_monomials(const Shape& s, const std::optional<IndexPair>& delta, int d);

/// Drops every monomial whose first factor is not >= delta.
DetAlgElement project(const DetAlgElement& e, const IndexPair& delta);

/// Standard expansion of a product of minors, projected when delta is given.
DetAlgElement straighten_det(const std::vector<IndexPair>& factors, const Shape& s,
                             const std::optional<IndexPair>& delta);

/// Expansion of the t x t minor [rows|cols] along its last row:
/// [rows|cols] - sum_c a_c X_{i_t,c} [rows - i_t | cols - c] = 0, discovered
/// by kernel computation, certified, normalized so the minor has
/// coefficient 1. The shape defaults to the smallest one containing the minor.
MinorRelation laplace_last_row(int t, const std::vector<int>& rows, const std::vector<int>& cols,
                               const std::optional<Shape>& shape = std::nullopt);

/// "[1,2|1,2] = X22*[1|1] - q^-1*X21*[1|2]" for a relation whose first term
/// is a single minor with coefficient 1.
std::string expansion_to_string(const MinorRelation& r);

struct DeltaMapReport {
  Shape shape;
  std::size_t size = 0;
  bool injective = false;
  bool order_preserving = false;
  bool order_reflecting = false;
  bool misses_m = false;
  bool onto_complement = false;
  bool passed() const noexcept {
    return injective && order_preserving && order_reflecting && misses_m && onto_complement;
  }
};

/// Exhaustive check that delta_map is a poset isomorphism of Delta_{m,n}
/// onto Pi_{m,m+n} minus {M}.
DeltaMapReport delta_map_check(const Shape& s);

struct DehomCorrespondenceReport {
  IndexPair delta;
  IndexSet gamma;
  bool ideal_matches = false;
  /// e_K with [M][K] = q^e_K [K][M], for every K in Pi_{m,m+n}.
  std::map<IndexSet, int> m_exponents;
  std::size_t products_checked = 0;
  std::vector<std::string> failures;
  bool passed() const noexcept { return failures.empty() && ideal_matches; }
};

/// For gamma = delta_map(delta): checks delta_map(Delta^delta) = Pi^gamma and
/// that [I|J] -> [K_(I,J)][M]^-1 carries the straightening of every product
/// of at most max_factors generators of the Delta-side quotient to an
/// identity in O_q(G_{m,m+n})_gamma, compared after clearing powers of [M].
DehomCorrespondenceReport dehom_correspondence_check(const IndexPair& delta, const Shape& s, int max_factors);

struct NormalityReport {
  int t = 0;
  Shape shape;
  /// Generators X_ij of A_t (i <= t-1 or j <= t-1) with e such that
  /// delta X_ij = q^e X_ij delta.
  std::vector<std::pair<Generator, int>> exponents;
  std::size_t generator_count = 0;
  /// mn - (m-t+1)(n-t+1).
  std::size_t expected_count = 0;
  /// Rank of the residual poset of (1..t-1 | 1..t-1).
  int quotient_rank = 0;
  std::vector<std::string> failures;
  bool passed() const noexcept {
    return failures.empty() && generator_count == expected_count &&
           quotient_rank == static_cast<int>(expected_count);
  }
};

/// delta = [1..t-1|1..t-1] q-commutes with each generator of A_t; counts the
/// generators against mn - (m-t+1)(n-t+1) and the rank of the quotient poset.
NormalityReport normality_check(int t, const Shape& s);

}  // namespace qschubert
