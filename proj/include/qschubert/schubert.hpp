#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qschubert/linalg.hpp"
#include "qschubert/poset.hpp"

namespace qschubert {

/// Product of maximal minors along a multichain; the empty product is 1.
struct StdMonomial {
  std::vector<IndexSet> factors;

  std::size_t degree() const noexcept { return factors.size(); }
  bool is_standard() const;
  /// "[1,3][2,4]", or "1" for the empty product.
  std::string to_string() const;

  friend auto operator<=>(const StdMonomial&, const StdMonomial&) = default;
};

/// Element of O_q(G_{m,n}) or of its quotient by <Pi^gamma>, written on the
/// standard monomial basis.
struct AlgElement {
  int m = 0;
  int n = 0;
  std::optional<IndexSet> gamma;
  std::map<StdMonomial, LaurentQ> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  LaurentQ coeff(const StdMonomial& s) const;
  void add_term(const StdMonomial& s, const LaurentQ& c);

  AlgElement& operator+=(const AlgElement& rhs);
  AlgElement& operator-=(const AlgElement& rhs);
  AlgElement& operator*=(const LaurentQ& c);
  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  friend AlgElement operator*(AlgElement a, const LaurentQ& c) { return a *= c; }
  friend bool operator==(const AlgElement& a, const AlgElement& b) {
    return a.m == b.m && a.n == b.n && a.gamma == b.gamma && a.terms == b.terms;
  }

  /// "[1,3][2,4] - (q - q^-1)*[1,4][2,3]"
  std::string to_string() const;
};

/// Multichains of length d in Pi_{m,n} (with first factor >= gamma when
/// given), ordered lexicographically by factor sequence.
std::vector<StdMonomial> standard_monomials(int m, int n, const std::optional<IndexSet>& gamma, int d);

/// Drops every monomial whose first factor is not >= gamma.
AlgElement project(const AlgElement& e, const IndexSet& gamma);

/// O_q(G_{m,n}) with cached minors, cached standard monomial expansions, and a
/// cached linear solver per multigraded component. Caches are filled once per
/// key; an instance may be shared between threads.
class QuantumGrassmannian {
 public:
  /// A zero budget follows the global component_budget().
  QuantumGrassmannian(int m, int n, std::size_t component_budget = 0);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  const QuantumMatrixAlgebra& algebra() const noexcept { return alg_; }
  const GrassmannPoset& poset() const noexcept { return poset_; }

  const NcPoly& minor(const IndexSet& x) const;
  /// Normal form of a product of maximal minors.
  NcPoly product(const std::vector<IndexSet>& factors) const;
  NcPoly expand(const StdMonomial& s) const;
  NcPoly expand(const AlgElement& e) const;

  /// Unique standard expansion of a product, certified by re-expansion.
  AlgElement straighten(const std::vector<IndexSet>& factors) const;
  /// Straighten then project when gamma is given.
  AlgElement multiply(const std::vector<IndexSet>& factors, const std::optional<IndexSet>& gamma) const;
  /// Product in the ambient algebra or, when both carry gamma, the quotient.
  AlgElement multiply(const AlgElement& a, const AlgElement& b) const;
  AlgElement element(const StdMonomial& s, const std::optional<IndexSet>& gamma) const;

  /// Whether the standard monomials of a component have independent normal
  /// forms.
  bool component_independent(const std::vector<int>& content) const;
  /// Column content (count of each column) of a product of maximal minors.
  std::vector<int> content(const std::vector<IndexSet>& factors) const;

  const std::vector<StdMonomial>& standard_monomials(int d) const;

 private:
  struct Component {
    std::vector<StdMonomial> basis;
    std::map<Word, std::size_t> row_of;
    std::unique_ptr<ColumnSolver> solver;
  };
  const Component& component(const std::vector<int>& content) const;
  void check_factors(const std::vector<IndexSet>& factors) const;

  int m_;
  int n_;
  std::size_t budget_;
  QuantumMatrixAlgebra alg_;
  GrassmannPoset poset_;
  mutable std::mutex mutex_;
  mutable std::map<IndexSet, std::unique_ptr<NcPoly>> minors_;
  mutable std::map<StdMonomial, std::unique_ptr<NcPoly>> expansions_;
  mutable std::map<std::vector<int>, std::unique_ptr<Component>> components_;
  mutable std::map<int, std::unique_ptr<std::vector<StdMonomial>>> monomials_;
};

/// Shared instance per (m, n).
const QuantumGrassmannian& grassmannian(int m, int n);

AlgElement straighten(const std::vector<IndexSet>& factors, int m, int n);

// --- A.S.L. axioms --------------------------------------------------------------

struct CommutationScalar {
  IndexSet alpha;
  IndexSet beta;
  LaurentQ c;
  /// Both products straighten entirely below alpha and beta, so any c works;
  /// c is then the proportionality factor when one exists, else 1.
  bool unconstrained = false;
};

struct AslReport {
  int m = 0;
  int n = 0;
  std::optional<IndexSet> gamma;
  std::size_t components_checked = 0;
  std::size_t incomparable_pairs = 0;
  std::vector<CommutationScalar> scalars;
  std::vector<std::string> failures;
  bool passed() const noexcept { return failures.empty(); }
};

/// Checks, over the (residual) poset: independence of standard monomials in
/// every degree-2 component; that products of incomparable elements
/// straighten below both; and that for every pair alpha != beta some unit c
/// makes alpha*beta - c*beta*alpha a combination of lambda*mu with lambda
/// below both. Each c must be a pure power of q.
AslReport asl_check(int m, int n, const std::optional<IndexSet>& gamma);

// --- <gamma> = intersection of I_tau -------------------------------------------

struct PieriDegree {
  int degree = 0;
  std::size_t ideal_dim = 0;
  std::size_t intersection_dim = 0;
  /// Number of standard monomials with first factor gamma.
  std::size_t standard_dim = 0;
  bool ideal_in_intersection = false;
  bool intersection_in_ideal = false;
  bool matches_standard = false;
  bool ok() const noexcept {
    return ideal_dim == intersection_dim && ideal_in_intersection && intersection_in_ideal && matches_standard;
  }
};

struct PieriReport {
  IndexSet gamma;
  std::vector<IndexSet> upper_neighbours;
  std::vector<PieriDegree> degrees;
  bool passed() const;
};

/// In O_q(G_{m,n})_gamma, compares the degree-d part of the ideal generated
/// by gamma with the intersection of the ideals I_tau over upper neighbours
/// tau, both computed as spans of straightened products, for d = 1..max_degree.
PieriReport pieri_check(const IndexSet& gamma, int m, int n, int max_degree);

// --- dehomogenisation ---------------------------------------------------------

struct LadderTerm {
  /// Indices into the ladder, as an ordered product.
  std::vector<std::size_t> labels;
  /// Exponent of gamma on the right; always 1 - labels.size().
  int gamma_power = 0;
  LaurentQ coeff;
};

struct LadderExpression {
  IndexSet x;
  IndexSet gamma;
  int m = 0;
  int n = 0;
  std::vector<LadderEntry> ladder;
  std::vector<LadderTerm> terms;
  bool certified = false;
  /// "q^-1*m17*m24*g^-1"
  std::string to_string() const;
};

std::string ladder_label_name(const LadderEntry& e, int m, int n);

/// Writes x-bar in O_q(G_{m,n})_gamma[gamma^-1] as a Laurent combination of
/// ordered products of ladder labels times powers of gamma, by induction on
/// the number of columns of x outside gamma; each step uses a Plucker-type
/// relation found by kernel computation. Certified by comparing x*gamma^t
/// with the cleared expression in the quotient.
LadderExpression express_in_ladder(const IndexSet& x, const IndexSet& gamma, int m, int n);

/// Straightened, projected value of sum coeff * labels * gamma^(gamma_power+t).
AlgElement cleared_value(const LadderExpression& e, int t);

struct LadderRelationCheck {
  std::string kind;  // "i".."v"
  std::string relation;
  bool holds = false;
};

/// The relations among ladder labels in O_q(G_{m,n})_gamma:
/// (i) same row, (ii) same column: m_ij m_kl = q m_kl m_ij;
/// (iii) i<k, j>l: commute; (iv) i<k, j<l: m_ij m_kl - m_kl m_ij =
/// (q - q^-1) m_il m_kj; (v) gamma m_ij = q m_ij gamma.
std::vector<LadderRelationCheck> ladder_relations(const IndexSet& gamma, int m, int n);

struct DehomReport {
  IndexSet gamma;
  std::vector<LadderRelationCheck> relations;
  std::size_t expressed = 0;
  std::vector<std::pair<int, std::size_t>> injective_degrees;  // (degree, monomials)
  std::vector<std::string> failures;
  bool passed() const noexcept { return failures.empty(); }
};

/// Relations (i)-(v), surjectivity (every x >= gamma expressed and
/// certified), and injectivity of the ladder algebra map degree by degree up
/// to max_degree.
DehomReport dehom_check(const IndexSet& gamma, int m, int n, int max_degree);

/// Whether left multiplication by gamma is injective on each graded component
/// of degree <= max_degree of the quotient.
bool gamma_regular(const IndexSet& gamma, int m, int n, int max_degree);

// --- Hilbert series -----------------------------------------------------------

struct HilbertCrossCheck {
  int degree = 0;
  std::size_t generic_rank = 0;
  std::size_t rank_at_2 = 0;
  std::size_t rank_at_third = 0;
};

struct HilbertReport {
  std::vector<mpz_class> dims;
  std::vector<HilbertCrossCheck> checks;
  bool consistent() const;
};

/// Graded dimensions for degrees 0..max_degree by counting multichains, with
/// degrees <= min(max_degree, cross_check_cap) recomputed as ranks of the
/// normal forms of all products of generators (modulo those involving
/// Pi^gamma) at generic q and at q = 2, 1/3.
HilbertReport hilbert(const std::optional<IndexSet>& gamma, int m, int n, int max_degree,
                      int cross_check_cap = 3);

}  // namespace qschubert
