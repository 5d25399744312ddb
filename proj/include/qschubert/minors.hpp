#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qschubert/ncpoly.hpp"

namespace qschubert {

/// Row set I and column set J of a quantum minor [I|J]; both strictly
/// increasing, 1-based, of equal size >= 1.
struct IndexPair {
  std::vector<int> rows;
  std::vector<int> cols;

  IndexPair() = default;
  IndexPair(std::vector<int> r, std::vector<int> c);

  std::size_t size() const noexcept { return rows.size(); }
  bool fits(const Shape& s) const;
  /// "[1,2|1,3]"
  std::string to_string() const;
  static IndexPair parse(std::string_view text);

  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

/// Column set of a maximal minor [{1..m}|I]; strictly increasing, 1-based.
struct IndexSet {
  std::vector<int> cols;

  IndexSet() = default;
  explicit IndexSet(std::vector<int> c);

  std::size_t size() const noexcept { return cols.size(); }
  bool fits(int m, int n) const;
  IndexPair as_pair() const;
  /// "[1,3,6]"
  std::string to_string() const;
  /// Accepts "[1,3,6]" or "1,3,6".
  static IndexSet parse(std::string_view text);
  /// All m-subsets of {1..n}, lexicographically.
  static std::vector<IndexSet> all(int m, int n);

  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;
};

/// "1,3,6" or "[1,3,6]"; empty text gives an empty list.
std::vector<int> parse_int_list(std::string_view text);

/// Parses a product such as "[2,4][1,3]" into index sets.
std::vector<IndexSet> parse_index_set_product(std::string_view text);
/// Parses a product such as "[1|2][1,2|1,3]" into index pairs.
std::vector<IndexPair> parse_index_pair_product(std::string_view text);

/// Multidegree of a product of minors.
Multidegree product_multidegree(const Shape& s, const std::vector<IndexPair>& factors);

/// A linear relation sum_s c_s * (product of minors)_s = 0.
struct MinorRelation {
  struct Term {
    LaurentQ coeff;
    std::vector<IndexPair> factors;
  };
  Shape shape;
  std::vector<Term> terms;
  /// Set only after the relation was reduced to zero by normal form.
  bool verified = false;

  std::string to_string() const;
};

/// The quantum minor [I|J]: sum over permutations s of (-q)^inv(s)
/// X_{i_s(1) j_1} ... X_{i_s(t) j_t}, reduced to normal form.
NcPoly quantum_minor(const QuantumMatrixAlgebra& alg, const IndexPair& p);
NcPoly quantum_minor(const IndexPair& p, const Shape& s);

/// Product of minors in normal form.
NcPoly minor_product(const QuantumMatrixAlgebra& alg, const std::vector<IndexPair>& factors);

/// Value of sum_s c_s * product_s in O_q(M_{m,n}).
NcPoly relation_value(const QuantumMatrixAlgebra& alg, const MinorRelation& r);

/// A basis of all linear dependencies among the normal forms of the given
/// products. Every returned relation is certified to reduce to zero. All
/// products must share one multidegree (else InhomogeneousInput).
std::vector<MinorRelation> find_relations(const QuantumMatrixAlgebra& alg,
                                          const std::vector<std::vector<IndexPair>>& products);

/// Extends each [I|J] in a relation of O_q(M_n) to [I u P'|J u Q'] where
/// P', Q' are the complements of P, Q in {1..n}. Both the input and the
/// extended relation are checked to vanish.
MinorRelation muir_extend(const QuantumMatrixAlgebra& alg, const MinorRelation& r,
                          const std::vector<int>& p_set, const std::vector<int>& q_set);

/// The automorphism X_{ij} -> q X_{ij}: a term of degree d gains q^d.
NcPoly scale_by_q(const NcPoly& p);

}  // namespace qschubert
