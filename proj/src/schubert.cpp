#include "qschubert/schubert.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "cache.hpp"
#include "qschubert/config.hpp"
#include "qschubert/error.hpp"

namespace qschubert {

namespace {

using detail::cached;

std::vector<IndexPair> as_pairs(const std::vector<IndexSet>& factors) {
  std::vector<IndexPair> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.as_pair());
  return out;
}

std::vector<IndexSet> concat(std::vector<IndexSet> a, const std::vector<IndexSet>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<IndexSet> repeat(const IndexSet& x, int times) {
  return std::vector<IndexSet>(static_cast<std::size_t>(std::max(times, 0)), x);
}

// Coordinates of e on an ordered basis; fails if e leaves the basis.
std::vector<LaurentQ> coordinates(const AlgElement& e, const std::map<StdMonomial, std::size_t>& index) {
  std::vector<LaurentQ> v(index.size());
  for (const auto& [s, c] : e.terms) {
    auto it = index.find(s);
    if (it == index.end()) fail(ErrorCode::Internal, "monomial " + s.to_string() + " outside the expected basis");
    v[it->second] = c;
  }
  return v;
}

std::map<StdMonomial, std::size_t> index_basis(const std::vector<StdMonomial>& basis) {
  std::map<StdMonomial, std::size_t> out;
  for (std::size_t i = 0; i < basis.size(); ++i) out.emplace(basis[i], i);
  return out;
}

// c with a == c*b, when it exists and is Laurent.
std::optional<LaurentQ> ratio(const AlgElement& a, const AlgElement& b) {
  if (b.is_zero()) return std::nullopt;
  const auto& [mono, bc] = *b.terms.begin();
  const RatFun c = RatFun(a.coeff(mono)) / RatFun(bc);
  if (!c.is_laurent()) return std::nullopt;
  const LaurentQ cl = c.to_laurent();
  if (!(b * cl == a)) return std::nullopt;
  return cl;
}

// All sequences of length d over the given elements.
std::vector<std::vector<IndexSet>> sequences(const std::vector<IndexSet>& elems, int d, std::size_t limit) {
  double count = std::pow(static_cast<double>(elems.size()), d);
  if (count > static_cast<double>(limit))
    fail(ErrorCode::BudgetExceeded, "too many products of degree " + std::to_string(d));
  std::vector<std::vector<IndexSet>> out{{}};
  for (int k = 0; k < d; ++k) {
    std::vector<std::vector<IndexSet>> next;
    next.reserve(out.size() * elems.size());
    for (const auto& s : out)
      for (const auto& e : elems) {
        next.push_back(s);
        next.back().push_back(e);
      }
    out = std::move(next);
  }
  return out;
}

constexpr std::size_t kProductLimit = 200000;

}  // namespace

// --- StdMonomial / AlgElement ---------------------------------------------------

bool StdMonomial::is_standard() const {
  for (std::size_t k = 1; k < factors.size(); ++k)
    if (!leq_st(factors[k - 1], factors[k])) return false;
  return true;
}

std::string StdMonomial::to_string() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& f : factors) out += f.to_string();
  return out;
}

LaurentQ AlgElement::coeff(const StdMonomial& s) const {
  auto it = terms.find(s);
  return it == terms.end() ? LaurentQ() : it->second;
}

void AlgElement::add_term(const StdMonomial& s, const LaurentQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(s, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

AlgElement& AlgElement::operator+=(const AlgElement& rhs) {
  if (m != rhs.m || n != rhs.n || gamma != rhs.gamma)
    fail(ErrorCode::ShapeMismatch, "elements live in different algebras");
  for (const auto& [s, c] : rhs.terms) add_term(s, c);
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& rhs) {
  if (m != rhs.m || n != rhs.n || gamma != rhs.gamma)
    fail(ErrorCode::ShapeMismatch, "elements live in different algebras");
  for (const auto& [s, c] : rhs.terms) add_term(s, -c);
  return *this;
}

AlgElement& AlgElement::operator*=(const LaurentQ& c) {
  if (c.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto& [s, x] : terms) x *= c;
  return *this;
}

std::string AlgElement::to_string() const {
  std::string out;
  for (const auto& [s, c] : terms) append_term(out, c, s.factors.empty() ? "" : s.to_string());
  return out.empty() ? "0" : out;
}

std::vector<StdMonomial> standard_monomials(int m, int n, const std::optional<IndexSet>& gamma, int d) {
  if (d < 0) fail(ErrorCode::InvalidArgument, "degree must be nonnegative");
  const auto& all = grassmannian(m, n).standard_monomials(d);
  if (!gamma) return all;
  if (!gamma->fits(m, n)) fail(ErrorCode::InvalidArgument, gamma->to_string() + " is not in the grassmannian poset");
  std::vector<StdMonomial> out;
  for (const auto& s : all)
    if (s.factors.empty() || leq_st(*gamma, s.factors.front())) out.push_back(s);
  return out;
}

AlgElement project(const AlgElement& e, const IndexSet& gamma) {
  if (e.gamma && !leq_st(*e.gamma, gamma))
    fail(ErrorCode::InvalidArgument, "cannot project from a smaller quotient");
  AlgElement out;
  out.m = e.m;
  out.n = e.n;
  out.gamma = gamma;
  for (const auto& [s, c] : e.terms)
    if (s.factors.empty() || leq_st(gamma, s.factors.front())) out.terms.emplace(s, c);
  return out;
}

// --- QuantumGrassmannian --------------------------------------------------------

QuantumGrassmannian::QuantumGrassmannian(int m, int n, std::size_t component_budget)
    : m_(m), n_(n), budget_(component_budget), alg_(Shape{m, n}), poset_(grassmann_poset(m, n)) {}

void QuantumGrassmannian::check_factors(const std::vector<IndexSet>& factors) const {
  for (const auto& f : factors)
    if (!f.fits(m_, n_))
      fail(ErrorCode::InvalidArgument, f.to_string() + " is not a maximal minor of shape " + alg_.shape().to_string());
}

const NcPoly& QuantumGrassmannian::minor(const IndexSet& x) const {
  check_factors({x});
  return cached(mutex_, minors_, x, [&] { return std::make_unique<NcPoly>(quantum_minor(alg_, x.as_pair())); });
}

NcPoly QuantumGrassmannian::product(const std::vector<IndexSet>& factors) const {
  check_factors(factors);
  NcPoly acc = alg_.one();
  for (const auto& f : factors) acc = alg_.multiply(acc, minor(f));
  return acc;
}

NcPoly QuantumGrassmannian::expand(const StdMonomial& s) const {
  return cached(mutex_, expansions_, s, [&] { return std::make_unique<NcPoly>(product(s.factors)); });
}

NcPoly QuantumGrassmannian::expand(const AlgElement& e) const {
  NcPoly out(alg_.shape());
  for (const auto& [s, c] : e.terms) out += expand(s) * c;
  return out;
}

std::vector<int> QuantumGrassmannian::content(const std::vector<IndexSet>& factors) const {
  std::vector<int> c(static_cast<std::size_t>(n_), 0);
  for (const auto& f : factors)
    for (int col : f.cols) ++c[static_cast<std::size_t>(col - 1)];
  return c;
}

const std::vector<StdMonomial>& QuantumGrassmannian::standard_monomials(int d) const {
  return cached(mutex_, monomials_, d, [&] {
    auto out = std::make_unique<std::vector<StdMonomial>>();
    const auto& elems = poset_.elements();
    std::vector<std::size_t> chain;
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
      if (static_cast<int>(chain.size()) == d) {
        StdMonomial s;
        for (auto i : chain) s.factors.push_back(elems[i]);
        out->push_back(std::move(s));
        return;
      }
      for (std::size_t y = from; y < elems.size(); ++y) {
        if (!chain.empty() && !poset_.leq(chain.back(), y)) continue;
        chain.push_back(y);
        extend(y);
        chain.pop_back();
      }
    };
    extend(0);
    return out;
  });
}

const QuantumGrassmannian::Component& QuantumGrassmannian::component(const std::vector<int>& key) const {
  return cached(mutex_, components_, key, [&] {
    const int total = std::accumulate(key.begin(), key.end(), 0);
    auto comp = std::make_unique<Component>();
    for (const auto& s : standard_monomials(total / m_))
      if (content(s.factors) == key) comp->basis.push_back(s);
    std::vector<NcPoly> values;
    for (const auto& s : comp->basis) {
      values.push_back(expand(s));
      for (const auto& [w, c] : values.back().terms()) comp->row_of.try_emplace(w, 0);
    }
    const std::size_t limit = budget_ ? budget_ : component_budget();
    if (comp->row_of.size() > limit)
      fail(ErrorCode::BudgetExceeded, "graded component has " + std::to_string(comp->row_of.size()) +
                                          " words, budget " + std::to_string(limit));
    std::size_t idx = 0;
    for (auto& [w, r] : comp->row_of) r = idx++;
    LaurentMatrix mat(comp->row_of.size(), comp->basis.size());
    for (std::size_t j = 0; j < values.size(); ++j)
      for (const auto& [w, c] : values[j].terms()) mat.rows[comp->row_of.at(w)][j] = c;
    comp->solver = std::make_unique<ColumnSolver>(std::move(mat));
    return comp;
  });
}

bool QuantumGrassmannian::component_independent(const std::vector<int>& key) const {
  return component(key).solver->full_column_rank();
}

AlgElement QuantumGrassmannian::straighten(const std::vector<IndexSet>& factors) const {
  check_factors(factors);
  AlgElement out;
  out.m = m_;
  out.n = n_;
  StdMonomial as_is{factors};
  if (as_is.is_standard()) {
    out.terms.emplace(std::move(as_is), LaurentQ(1));
    return out;
  }
  const Component& comp = component(content(factors));
  if (!comp.solver->full_column_rank())
    fail(ErrorCode::VerificationFailed, "standard monomials of " + as_is.to_string() + "'s component are dependent");
  const NcPoly value = product(factors);
  std::vector<LaurentQ> b(comp.row_of.size());
  for (const auto& [w, c] : value.terms()) {
    auto it = comp.row_of.find(w);
    if (it == comp.row_of.end())
      fail(ErrorCode::VerificationFailed, as_is.to_string() + " leaves the span of standard monomials");
    b[it->second] = c;
  }
  const auto x = comp.solver->solve(b);
  if (!x) fail(ErrorCode::VerificationFailed, as_is.to_string() + " has no Laurent standard expansion");
  for (std::size_t j = 0; j < x->size(); ++j)
    if (!(*x)[j].is_zero()) out.terms.emplace(comp.basis[j], (*x)[j]);
  return out;
}

AlgElement QuantumGrassmannian::multiply(const std::vector<IndexSet>& factors,
                                         const std::optional<IndexSet>& gamma) const {
  AlgElement e = straighten(factors);
  return gamma ? project(e, *gamma) : e;
}

AlgElement QuantumGrassmannian::multiply(const AlgElement& a, const AlgElement& b) const {
  if (a.m != m_ || a.n != n_ || b.m != m_ || b.n != n_ || a.gamma != b.gamma)
    fail(ErrorCode::ShapeMismatch, "factors live in different algebras");
  AlgElement out;
  out.m = m_;
  out.n = n_;
  out.gamma = a.gamma;
  for (const auto& [sa, ca] : a.terms)
    for (const auto& [sb, cb] : b.terms) out += multiply(concat(sa.factors, sb.factors), a.gamma) * (ca * cb);
  return out;
}

AlgElement QuantumGrassmannian::element(const StdMonomial& s, const std::optional<IndexSet>& gamma) const {
  return multiply(s.factors, gamma);
}

const QuantumGrassmannian& grassmannian(int m, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<QuantumGrassmannian>> registry;
  if (m < 1 || n < m) fail(ErrorCode::InvalidArgument, "grassmannian needs 1 <= m <= n");
  std::lock_guard lock(mu);
  auto& slot = registry[{m, n}];
  if (!slot) slot = std::make_unique<QuantumGrassmannian>(m, n);
  return *slot;
}

AlgElement straighten(const std::vector<IndexSet>& factors, int m, int n) {
  return grassmannian(m, n).straighten(factors);
}

// --- A.S.L. axioms ------------------------------------------------------------------

AslReport asl_check(int m, int n, const std::optional<IndexSet>& gamma) {
  const auto& g = grassmannian(m, n);
  AslReport rep;
  rep.m = m;
  rep.n = n;
  rep.gamma = gamma;
  const auto elems = gamma ? g.poset().upper_set(*gamma) : g.poset().elements();

  std::set<std::vector<int>> contents;
  for (const auto& s : standard_monomials(m, n, gamma, 2)) contents.insert(g.content(s.factors));
  for (const auto& c : contents) {
    ++rep.components_checked;
    if (!g.component_independent(c)) rep.failures.push_back("(3) dependent standard monomials in a degree-2 component");
  }

  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = a + 1; b < elems.size(); ++b) {
      const IndexSet& alpha = elems[a];
      const IndexSet& beta = elems[b];
      const std::string pair = alpha.to_string() + beta.to_string();
      const AlgElement s1 = g.multiply({alpha, beta}, gamma);
      const AlgElement s2 = g.multiply({beta, alpha}, gamma);
      auto below = [&](const StdMonomial& s) {
        const IndexSet& l = s.factors.front();
        return l != alpha && l != beta && leq_st(l, alpha) && leq_st(l, beta);
      };
      auto bad_part = [&](const AlgElement& e) {
        AlgElement out = e;
        std::erase_if(out.terms, [&](const auto& kv) { return below(kv.first); });
        return out;
      };
      const AlgElement b1 = bad_part(s1);
      const AlgElement b2 = bad_part(s2);
      if (!leq_st(alpha, beta) && !leq_st(beta, alpha)) {
        ++rep.incomparable_pairs;
        if (!b1.is_zero() || !b2.is_zero())
          rep.failures.push_back("(4) " + pair + " does not straighten below both factors");
      }
      CommutationScalar cs{alpha, beta, LaurentQ(1), false};
      if (b1.is_zero() && b2.is_zero()) {
        cs.unconstrained = true;
        if (auto c = ratio(s1, s2); c && c->is_monomial()) cs.c = *c;
      } else if (auto c = ratio(b1, b2)) {
        cs.c = *c;
      } else {
        rep.failures.push_back("(5) no commutation scalar for " + pair);
        continue;
      }
      if (!cs.c.is_monomial() || cs.c.coeff(cs.c.low_degree()) != 1)
        rep.failures.push_back("(5) scalar for " + pair + " is not a power of q: " + cs.c.to_string());
      rep.scalars.push_back(std::move(cs));
    }
  }
  return rep;
}

// --- <gamma> = intersection of I_tau -----------------------------------------------

bool PieriReport::passed() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const PieriDegree& d) { return d.ok(); });
}

PieriReport pieri_check(const IndexSet& gamma, int m, int n, int max_degree) {
  const auto& g = grassmannian(m, n);
  PieriReport rep;
  rep.gamma = gamma;
  const auto elems = g.poset().upper_set(gamma);
  if (elems.size() <= 1) fail(ErrorCode::HypothesisViolated, gamma.to_string() + " is the only element of its residual poset");
  rep.upper_neighbours = g.poset().upper_neighbours(gamma);

  for (int d = 1; d <= max_degree; ++d) {
    const auto basis = standard_monomials(m, n, gamma, d);
    const auto index = index_basis(basis);
    const std::size_t dim = basis.size();
    std::vector<std::vector<LaurentQ>> ideal_gens;
    std::vector<std::vector<std::vector<LaurentQ>>> tau_gens(rep.upper_neighbours.size());
    for (const auto& seq : sequences(elems, d, kProductLimit)) {
      const auto v = coordinates(g.multiply(seq, gamma), index);
      if (std::find(seq.begin(), seq.end(), gamma) != seq.end()) ideal_gens.push_back(v);
      for (std::size_t t = 0; t < rep.upper_neighbours.size(); ++t) {
        const bool hits = std::any_of(seq.begin(), seq.end(),
                                      [&](const IndexSet& x) { return !leq_st(rep.upper_neighbours[t], x); });
        if (hits) tau_gens[t].push_back(v);
      }
    }
    PieriDegree pd;
    pd.degree = d;
    const auto ideal = span_basis(ideal_gens, dim);
    auto inter = span_basis(tau_gens.front(), dim);
    for (std::size_t t = 1; t < tau_gens.size(); ++t) inter = intersect_spans(inter, tau_gens[t], dim);
    pd.ideal_dim = ideal.size();
    pd.intersection_dim = inter.size();
    auto both = ideal;
    both.insert(both.end(), inter.begin(), inter.end());
    const std::size_t joint = span_rank(both, dim);
    pd.ideal_in_intersection = joint == inter.size();
    pd.intersection_in_ideal = joint == ideal.size();
    std::vector<std::vector<LaurentQ>> standard;
    for (std::size_t i = 0; i < dim; ++i) {
      if (basis[i].factors.front() != gamma) continue;
      standard.emplace_back(dim);
      standard.back()[i] = LaurentQ(1);
    }
    pd.standard_dim = standard.size();
    auto with_std = ideal;
    with_std.insert(with_std.end(), standard.begin(), standard.end());
    pd.matches_standard = ideal.size() == standard.size() && span_rank(with_std, dim) == standard.size();
    rep.degrees.push_back(pd);
  }
  return rep;
}

// --- dehomogenisation ------------------------------------------------------------

std::string ladder_label_name(const LadderEntry& e, int m, int n) {
  if (m >= 10 || n >= 10) return "m" + std::to_string(e.i) + "_" + std::to_string(e.j);
  return "m" + std::to_string(e.i) + std::to_string(e.j);
}

std::string LadderExpression::to_string() const {
  std::string out;
  for (const auto& t : terms) {
    std::string name;
    for (auto idx : t.labels) name += (name.empty() ? "" : "*") + ladder_label_name(ladder[idx], m, n);
    if (t.gamma_power != 0) {
      name += name.empty() ? "" : "*";
      name += t.gamma_power == 1 ? "g" : "g^" + std::to_string(t.gamma_power);
    }
    append_term(out, t.coeff, name);
  }
  return out.empty() ? "0" : out;
}

namespace {

int outside_count(const IndexSet& x, const IndexSet& gamma) {
  int k = 0;
  for (int c : x.cols)
    if (!std::binary_search(gamma.cols.begin(), gamma.cols.end(), c)) ++k;
  return k;
}

using LadderTerms = std::map<std::vector<std::size_t>, LaurentQ>;

class LadderExpander {
 public:
  LadderExpander(const IndexSet& gamma, int m, int n)
      : gamma_(gamma), m_(m), n_(n), ladder_(ladder(gamma, m, n)), g_(grassmannian(m, n)) {}

  const std::vector<LadderEntry>& entries() const { return ladder_; }

  const LadderTerms& expand(const IndexSet& x) {
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;
    LadderTerms out;
    const int k = outside_count(x, gamma_);
    if (k == 0) {
      out.emplace(std::vector<std::size_t>{}, LaurentQ(1));
    } else if (k == 1) {
      out.emplace(std::vector<std::size_t>{label_index(x)}, LaurentQ(1));
    } else {
      out = step(x);
    }
    return memo_.emplace(x, std::move(out)).first->second;
  }

 private:
  std::size_t label_index(const IndexSet& x) const {
    for (std::size_t i = 0; i < ladder_.size(); ++i)
      if (ladder_[i].label == x) return i;
    fail(ErrorCode::Internal, x.to_string() + " is not a ladder label");
  }

  // gamma*x = sum c * y*z from a relation among [K - k][J2 + k], then
  // x = gamma^-1 * sum c * y*z.
  LadderTerms step(const IndexSet& x) {
    int jl = 0;
    for (int c : x.cols)
      if (!std::binary_search(gamma_.cols.begin(), gamma_.cols.end(), c)) {
        jl = c;
        break;
      }
    std::vector<int> big = gamma_.cols;
    big.push_back(jl);
    std::sort(big.begin(), big.end());
    std::vector<int> rest;
    for (int c : x.cols)
      if (c != jl) rest.push_back(c);

    std::vector<std::pair<IndexSet, IndexSet>> yz;
    std::vector<std::vector<IndexPair>> products;
    std::size_t lead = 0;
    for (int kk : big) {
      if (std::find(rest.begin(), rest.end(), kk) != rest.end()) continue;
      std::vector<int> y, z = rest;
      for (int c : big)
        if (c != kk) y.push_back(c);
      z.push_back(kk);
      std::sort(z.begin(), z.end());
      if (kk == jl) lead = yz.size();
      yz.emplace_back(IndexSet(y), IndexSet(z));
      products.push_back(as_pairs({yz.back().first, yz.back().second}));
    }
    const auto rels = find_relations(g_.algebra(), products);
    for (const auto& rel : rels) {
      // Map the relation back onto positions in products.
      std::vector<LaurentQ> coeff(products.size());
      for (const auto& t : rel.terms)
        for (std::size_t p = 0; p < products.size(); ++p)
          if (t.factors == products[p]) coeff[p] = t.coeff;
      if (coeff[lead].is_zero()) continue;
      LadderTerms out;
      for (std::size_t p = 0; p < products.size(); ++p) {
        if (p == lead || coeff[p].is_zero()) continue;
        const auto& [y, z] = yz[p];
        if (!leq_st(gamma_, y) || !leq_st(gamma_, z)) continue;
        const RatFun c = -RatFun(coeff[p]) / RatFun(coeff[lead]);
        if (!c.is_laurent()) fail(ErrorCode::NoRelationFound, "relation for " + x.to_string() + " has a non-unit leading coefficient");
        const std::size_t yi = label_index(y);
        const LadderTerms zt = expand(z);
        for (const auto& [w, e] : zt) {
          std::vector<std::size_t> word{yi};
          word.insert(word.end(), w.begin(), w.end());
          const int len = static_cast<int>(word.size());
          LaurentQ term = c.to_laurent() * e * LaurentQ::q_power(-len);
          auto [it, inserted] = out.try_emplace(std::move(word), term);
          if (!inserted) {
            it->second += term;
            if (it->second.is_zero()) out.erase(it);
          }
        }
      }
      return out;
    }
    fail(ErrorCode::NoRelationFound, "no relation expresses gamma*" + x.to_string());
  }

  IndexSet gamma_;
  int m_;
  int n_;
  std::vector<LadderEntry> ladder_;
  const QuantumGrassmannian& g_;
  std::map<IndexSet, LadderTerms> memo_;
};

}  // namespace

AlgElement cleared_value(const LadderExpression& e, int t) {
  const auto& g = grassmannian(e.m, e.n);
  AlgElement out;
  out.m = e.m;
  out.n = e.n;
  out.gamma = e.gamma;
  for (const auto& term : e.terms) {
    const int power = term.gamma_power + t;
    if (power < 0) fail(ErrorCode::InvalidArgument, "clearing exponent too small");
    std::vector<IndexSet> factors;
    for (auto idx : term.labels) factors.push_back(e.ladder[idx].label);
    out += g.multiply(concat(factors, repeat(e.gamma, power)), e.gamma) * term.coeff;
  }
  return out;
}

LadderExpression express_in_ladder(const IndexSet& x, const IndexSet& gamma, int m, int n) {
  if (!x.fits(m, n) || !gamma.fits(m, n))
    fail(ErrorCode::InvalidArgument, "index sets must be m-subsets of {1..n}");
  if (!leq_st(gamma, x)) fail(ErrorCode::NotInResidualPoset, x.to_string() + " is not >= " + gamma.to_string());
  LadderExpander ex(gamma, m, n);
  LadderExpression out;
  out.x = x;
  out.gamma = gamma;
  out.m = m;
  out.n = n;
  out.ladder = ex.entries();
  int t = 0;
  for (const auto& [w, c] : ex.expand(x)) {
    const int len = static_cast<int>(w.size());
    out.terms.push_back({w, 1 - len, c});
    t = std::max(t, len - 1);
  }
  const auto& g = grassmannian(m, n);
  const AlgElement lhs = g.multiply(concat({x}, repeat(gamma, t)), gamma);
  if (!(lhs == cleared_value(out, t)))
    fail(ErrorCode::VerificationFailed, "ladder expression of " + x.to_string() + " does not re-expand");
  out.certified = true;
  return out;
}

std::vector<LadderRelationCheck> ladder_relations(const IndexSet& gamma, int m, int n) {
  const auto& g = grassmannian(m, n);
  const auto lad = ladder(gamma, m, n);
  auto find = [&](int i, int j) -> const LadderEntry& {
    for (const auto& e : lad)
      if (e.i == i && e.j == j) return e;
    fail(ErrorCode::Internal, "ladder position missing");
  };
  auto name = [&](const LadderEntry& e) { return ladder_label_name(e, m, n); };
  auto prod = [&](const IndexSet& a, const IndexSet& b) { return g.multiply({a, b}, gamma); };
  const LaurentQ q = LaurentQ::q_power(1);
  std::vector<LadderRelationCheck> out;
  for (std::size_t a = 0; a < lad.size(); ++a) {
    for (std::size_t b = a + 1; b < lad.size(); ++b) {
      const auto& u = lad[a];
      const auto& v = lad[b];
      const AlgElement uv = prod(u.label, v.label);
      const AlgElement vu = prod(v.label, u.label);
      LadderRelationCheck c;
      const std::string p = name(u) + "*" + name(v), r = name(v) + "*" + name(u);
      if (u.i == v.i || u.j == v.j) {
        c.kind = u.i == v.i ? "i" : "ii";
        c.relation = p + " = q*" + r;
        c.holds = (uv - vu * q).is_zero();
      } else if (u.j > v.j) {
        c.kind = "iii";
        c.relation = p + " = " + r;
        c.holds = (uv - vu).is_zero();
      } else {
        c.kind = "iv";
        const auto& il = find(u.i, v.j);
        const auto& kj = find(v.i, u.j);
        c.relation = p + " - " + r + " = (q - q^-1)*" + name(il) + "*" + name(kj);
        c.holds = (uv - vu - prod(il.label, kj.label) * LaurentQ::q_minus_qinv()).is_zero();
      }
      out.push_back(std::move(c));
    }
  }
  for (const auto& e : lad) {
    LadderRelationCheck c;
    c.kind = "v";
    c.relation = "g*" + name(e) + " = q*" + name(e) + "*g";
    c.holds = (prod(gamma, e.label) - prod(e.label, gamma) * q).is_zero();
    out.push_back(std::move(c));
  }
  return out;
}

DehomReport dehom_check(const IndexSet& gamma, int m, int n, int max_degree) {
  DehomReport rep;
  rep.gamma = gamma;
  rep.relations = ladder_relations(gamma, m, n);
  for (const auto& r : rep.relations)
    if (!r.holds) rep.failures.push_back("relation (" + r.kind + ") fails: " + r.relation);

  const auto& g = grassmannian(m, n);
  for (const auto& x : g.poset().upper_set(gamma)) {
    try {
      express_in_ladder(x, gamma, m, n);
      ++rep.expressed;
    } catch (const Error& e) {
      rep.failures.push_back("cannot express " + x.to_string() + ": " + e.what());
    }
  }

  // Ordered ladder monomials w of degree <= d map to w * gamma^(d - |w|) in
  // degree d of the quotient; injectivity means these are independent.
  const auto lad = ladder(gamma, m, n);
  for (int d = 0; d <= max_degree; ++d) {
    const auto basis = standard_monomials(m, n, gamma, d);
    const auto index = index_basis(basis);
    std::vector<std::vector<LaurentQ>> images;
    std::vector<std::size_t> word;
    std::function<void(std::size_t)> gen = [&](std::size_t from) {
      std::vector<IndexSet> factors;
      for (auto i : word) factors.push_back(lad[i].label);
      images.push_back(coordinates(
          g.multiply(concat(factors, repeat(gamma, d - static_cast<int>(word.size()))), gamma), index));
      if (static_cast<int>(word.size()) == d) return;
      for (std::size_t i = from; i < lad.size(); ++i) {
        word.push_back(i);
        gen(i);
        word.pop_back();
      }
    };
    gen(0);
    const std::size_t r = span_rank(images, basis.size());
    rep.injective_degrees.emplace_back(d, images.size());
    if (r != images.size())
      rep.failures.push_back("ladder monomials of degree <= " + std::to_string(d) + " are dependent (rank " +
                             std::to_string(r) + " of " + std::to_string(images.size()) + ")");
  }
  return rep;
}

bool gamma_regular(const IndexSet& gamma, int m, int n, int max_degree) {
  const auto& g = grassmannian(m, n);
  for (int d = 0; d < max_degree; ++d) {
    const auto target = index_basis(standard_monomials(m, n, gamma, d + 1));
    std::vector<std::vector<LaurentQ>> images;
    for (const auto& s : standard_monomials(m, n, gamma, d))
      images.push_back(coordinates(g.multiply(concat({gamma}, s.factors), gamma), target));
    if (span_rank(images, target.size()) != images.size()) return false;
  }
  return true;
}

// --- Hilbert series ----------------------------------------------------------------

bool HilbertReport::consistent() const {
  for (const auto& c : checks) {
    const mpz_class& expect = dims[static_cast<std::size_t>(c.degree)];
    if (expect != c.generic_rank || expect != c.rank_at_2 || expect != c.rank_at_third) return false;
  }
  return true;
}

HilbertReport hilbert(const std::optional<IndexSet>& gamma, int m, int n, int max_degree, int cross_check_cap) {
  if (max_degree < 0) fail(ErrorCode::InvalidArgument, "degree must be nonnegative");
  const auto& g = grassmannian(m, n);
  HilbertReport rep;
  rep.dims = (gamma ? g.poset().restrict_upper(*gamma) : g.poset()).multichain_counts(max_degree);

  const Rational two(2), third(1, 3);
  for (int d = 0; d <= std::min(max_degree, cross_check_cap); ++d) {
    HilbertCrossCheck hc;
    hc.degree = d;
    // Group products by column content; ranks add over components.
    std::map<std::vector<int>, std::vector<std::pair<NcPoly, bool>>> groups;
    for (const auto& seq : sequences(g.poset().elements(), d, kProductLimit)) {
      const bool in_ideal = gamma && std::any_of(seq.begin(), seq.end(),
                                                 [&](const IndexSet& x) { return !leq_st(*gamma, x); });
      groups[g.content(seq)].emplace_back(g.product(seq), in_ideal);
    }
    for (const auto& [key, items] : groups) {
      std::map<Word, std::size_t> row_of;
      for (const auto& [p, ideal] : items)
        for (const auto& [w, c] : p.terms()) row_of.try_emplace(w, 0);
      std::size_t idx = 0;
      for (auto& [w, r] : row_of) r = idx++;
      auto ranks = [&](bool ideal_only) {
        std::vector<std::vector<LaurentQ>> vecs;
        for (const auto& [p, ideal] : items) {
          if (ideal_only && !ideal) continue;
          std::vector<LaurentQ> v(row_of.size());
          for (const auto& [w, c] : p.terms()) v[row_of.at(w)] = c;
          vecs.push_back(std::move(v));
        }
        std::array<std::size_t, 3> out{span_rank(vecs, row_of.size()), 0, 0};
        for (int k = 0; k < 2; ++k) {
          const Rational& q0 = k == 0 ? two : third;
          std::vector<std::vector<Rational>> rows;
          for (const auto& v : vecs) {
            rows.emplace_back();
            for (const auto& x : v) rows.back().push_back(x.eval(q0));
          }
          out[static_cast<std::size_t>(k) + 1] = rank_rational(rows, row_of.size());
        }
        return out;
      };
      const auto all = ranks(false);
      const auto ideal = ranks(true);
      hc.generic_rank += all[0] - ideal[0];
      hc.rank_at_2 += all[1] - ideal[1];
      hc.rank_at_third += all[2] - ideal[2];
    }
    rep.checks.push_back(hc);
  }
  return rep;
}

}  // namespace qschubert
