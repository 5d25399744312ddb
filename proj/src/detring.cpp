#include "qschubert/detring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "cache.hpp"
#include "qschubert/config.hpp"
#include "qschubert/error.hpp"
#include "qschubert/schubert.hpp"

namespace qschubert {

namespace {

using detail::cached;

std::vector<IndexPair> concat(std::vector<IndexPair> a, const std::vector<IndexPair>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

// --- DetMonomial / DetAlgElement -------------------------------------------------

int DetMonomial::degree() const noexcept {
  int d = 0;
  for (const auto& f : factors) d += static_cast<int>(f.size());
  return d;
}

bool DetMonomial::is_standard() const {
  for (std::size_t k = 1; k < factors.size(); ++k)
    if (!leq_st(factors[k - 1], factors[k])) return false;
  return true;
}

std::string DetMonomial::to_string() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& f : factors) out += f.to_string();
  return out;
}

LaurentQ DetAlgElement::coeff(const DetMonomial& s) const {
  auto it = terms.find(s);
  return it == terms.end() ? LaurentQ() : it->second;
}

void DetAlgElement::add_term(const DetMonomial& s, const LaurentQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(s, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

DetAlgElement& DetAlgElement::operator+=(const DetAlgElement& rhs) {
  if (!(shape == rhs.shape) || delta != rhs.delta) fail(ErrorCode::ShapeMismatch, "elements live in different algebras");
  for (const auto& [s, c] : rhs.terms) add_term(s, c);
  return *this;
}

DetAlgElement& DetAlgElement::operator-=(const DetAlgElement& rhs) {
  if (!(shape == rhs.shape) || delta != rhs.delta) fail(ErrorCode::ShapeMismatch, "elements live in different algebras");
  for (const auto& [s, c] : rhs.terms) add_term(s, -c);
  return *this;
}

DetAlgElement& DetAlgElement::operator*=(const LaurentQ& c) {
  if (c.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto& [s, x] : terms) x *= c;
  return *this;
}

std::string DetAlgElement::to_string() const {
  std::string out;
  for (const auto& [s, c] : terms) append_term(out, c, s.factors.empty() ? "" : s.to_string());
  return out.empty() ? "0" : out;
}

// --- QuantumMatrixMinors ------------------------------------------------------------

QuantumMatrixMinors::QuantumMatrixMinors(Shape s, std::size_t component_budget)
    : budget_(component_budget), alg_(s), poset_(matrix_poset(s)) {}

const NcPoly& QuantumMatrixMinors::minor(const IndexPair& p) const {
  if (!p.fits(shape())) fail(ErrorCode::InvalidArgument, "minor " + p.to_string() + " outside shape " + shape().to_string());
  return cached(mutex_, minors_, p, [&] { return std::make_unique<NcPoly>(quantum_minor(alg_, p)); });
}

NcPoly QuantumMatrixMinors::product(const std::vector<IndexPair>& factors) const {
  NcPoly acc = alg_.one();
  for (const auto& f : factors) acc = alg_.multiply(acc, minor(f));
  return acc;
}

NcPoly QuantumMatrixMinors::expand(const DetMonomial& s) const {
  return cached(mutex_, expansions_, s, [&] { return std::make_unique<NcPoly>(product(s.factors)); });
}

NcPoly QuantumMatrixMinors::expand(const DetAlgElement& e) const {
  NcPoly out(shape());
  for (const auto& [s, c] : e.terms) out += expand(s) * c;
  return out;
}

const std::vector<DetMonomial>& QuantumMatrixMinors::standard_monomials(int d) const {
  return cached(mutex_, monomials_, d, [&] {
    auto out = std::make_unique<std::vector<DetMonomial>>();
    const auto& elems = poset_.elements();
    std::vector<std::size_t> chain;
    std::function<void(int)> extend = [&](int remaining) {
      if (remaining == 0) {
        DetMonomial s;
        for (auto i : chain) s.factors.push_back(elems[i]);
        out->push_back(std::move(s));
        return;
      }
      for (std::size_t y = 0; y < elems.size(); ++y) {
        const int size = static_cast<int>(elems[y].size());
        if (size > remaining || (!chain.empty() && !poset_.leq(chain.back(), y))) continue;
        chain.push_back(y);
        extend(remaining - size);
        chain.pop_back();
      }
    };
    extend(d);
    std::sort(out->begin(), out->end());
    return out;
  });
}

const QuantumMatrixMinors::Component& QuantumMatrixMinors::component(const Multidegree& md) const {
  return cached(mutex_, components_, md, [&] {
    const int total = std::accumulate(md.rows.begin(), md.rows.end(), 0);
    auto comp = std::make_unique<Component>();
    for (const auto& s : standard_monomials(total))
      if (product_multidegree(shape(), s.factors) == md) comp->basis.push_back(s);
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

DetAlgElement QuantumMatrixMinors::straighten(const std::vector<IndexPair>& factors) const {
  for (const auto& f : factors)
    if (!f.fits(shape())) fail(ErrorCode::InvalidArgument, "minor " + f.to_string() + " outside shape " + shape().to_string());
  DetAlgElement out;
  out.shape = shape();
  DetMonomial as_is{factors};
  if (as_is.is_standard()) {
    out.terms.emplace(std::move(as_is), LaurentQ(1));
    return out;
  }
  const Component& comp = component(product_multidegree(shape(), factors));
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

DetAlgElement QuantumMatrixMinors::multiply(const std::vector<IndexPair>& factors,
                                            const std::optional<IndexPair>& delta) const {
  DetAlgElement e = straighten(factors);
  return delta ? project(e, *delta) : e;
}

const QuantumMatrixMinors& matrix_minors(const Shape& s) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<QuantumMatrixMinors>> registry;
  if (s.m < 1 || s.n < 1) fail(ErrorCode::InvalidArgument, "shape must be at least 1x1");
  std::lock_guard lock(mu);
  auto& slot = registry[{s.m, s.n}];
  if (!slot) slot = std::make_unique<QuantumMatrixMinors>(s);
  return *slot;
}

std::vector<DetMonomial> det_standard_monomials(const Shape& s, const std::optional<IndexPair>& delta, int d) {
  if (d < 0) fail(ErrorCode::InvalidArgument, "degree must be nonnegative");
  const auto& all = matrix_minors(s).standard_monomials(d);
  if (!delta) return all;
  if (!delta->fits(s)) fail(ErrorCode::InvalidArgument, delta->to_string() + " outside shape " + s.to_string());
  std::vector<DetMonomial> out;
  for (const auto& x : all)
    if (x.factors.empty() || leq_st(*delta, x.factors.front())) out.push_back(x);
  return out;
}

DetAlgElement project(const DetAlgElement& e, const IndexPair& delta) {
  if (e.delta && !leq_st(*e.delta, delta)) fail(ErrorCode::InvalidArgument, "cannot project from a smaller quotient");
  DetAlgElement out;
  out.shape = e.shape;
  out.delta = delta;
  for (const auto& [s, c] : e.terms)
    if (s.factors.empty() || leq_st(delta, s.factors.front())) out.terms.emplace(s, c);
  return out;
}

DetAlgElement straighten_det(const std::vector<IndexPair>& factors, const Shape& s,
                             const std::optional<IndexPair>& delta) {
  return matrix_minors(s).multiply(factors, delta);
}

// --- Laplace expansion ----------------------------------------------------------------

MinorRelation laplace_last_row(int t, const std::vector<int>& rows, const std::vector<int>& cols,
                               const std::optional<Shape>& shape) {
  if (t < 2) fail(ErrorCode::PreconditionViolated, "last-row expansion needs t >= 2");
  if (static_cast<int>(rows.size()) != t || static_cast<int>(cols.size()) != t)
    fail(ErrorCode::PreconditionViolated, "rows and cols must have t elements");
  const IndexPair whole(rows, cols);
  const Shape s = shape ? *shape : Shape{rows.back(), cols.back()};
  if (!whole.fits(s)) fail(ErrorCode::InvalidArgument, "minor " + whole.to_string() + " outside shape " + s.to_string());

  const int last = rows.back();
  const std::vector<int> upper(rows.begin(), rows.end() - 1);
  std::vector<std::vector<IndexPair>> products{{whole}};
  for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
    const int c = *it;
    std::vector<int> rest;
    for (int x : cols)
      if (x != c) rest.push_back(x);
    products.push_back({IndexPair({last}, {c}), IndexPair(upper, rest)});
  }
  QuantumMatrixAlgebra alg(s);
  for (const auto& rel : find_relations(alg, products)) {
    const auto& lead = rel.terms.front();
    if (lead.factors != products.front() || lead.coeff.is_zero()) continue;
    if (!lead.coeff.is_monomial()) continue;
    const LaurentQ inv = lead.coeff.unit_inverse();
    MinorRelation out;
    out.shape = s;
    for (const auto& term : rel.terms) out.terms.push_back({term.coeff * inv, term.factors});
    if (!relation_value(alg, out).is_zero())
      fail(ErrorCode::VerificationFailed, "normalized expansion does not vanish: " + out.to_string());
    out.verified = true;
    return out;
  }
  fail(ErrorCode::NoRelationFound, "no last-row expansion found for " + whole.to_string());
}

std::string expansion_to_string(const MinorRelation& r) {
  if (r.terms.empty()) return "0 = 0";
  auto product_name = [&](const std::vector<IndexPair>& factors) {
    std::string out;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      const IndexPair& p = factors[k];
      const bool generator = k == 0 && factors.size() > 1 && p.size() == 1;
      if (!out.empty()) out += "*";
      out += generator ? generator_name(r.shape, Generator{p.rows[0], p.cols[0]}) : p.to_string();
    }
    return out;
  };
  std::string lhs, rhs;
  append_term(lhs, r.terms.front().coeff, product_name(r.terms.front().factors));
  for (std::size_t k = 1; k < r.terms.size(); ++k) append_term(rhs, -r.terms[k].coeff, product_name(r.terms[k].factors));
  return lhs + " = " + (rhs.empty() ? "0" : rhs);
}

// --- delta map and dehomogenisation -------------------------------------------------

DeltaMapReport delta_map_check(const Shape& s) {
  DeltaMapReport rep;
  rep.shape = s;
  const MatrixPoset poset = matrix_poset(s);
  const auto& elems = poset.elements();
  rep.size = elems.size();
  std::vector<IndexSet> images;
  for (const auto& p : elems) images.push_back(delta_map(p, s));
  const std::set<IndexSet> distinct(images.begin(), images.end());
  rep.injective = distinct.size() == images.size();
  rep.misses_m = !distinct.count(delta_map_missing(s));
  rep.onto_complement = rep.misses_m && distinct.size() + 1 == IndexSet::all(s.m, s.m + s.n).size();
  rep.order_preserving = rep.order_reflecting = true;
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) {
      const bool left = leq_st(elems[a], elems[b]);
      const bool right = leq_st(images[a], images[b]);
      if (left && !right) rep.order_preserving = false;
      if (right && !left) rep.order_reflecting = false;
    }
  return rep;
}

DehomCorrespondenceReport dehom_correspondence_check(const IndexPair& delta, const Shape& s, int max_factors) {
  if (!delta.fits(s)) fail(ErrorCode::InvalidArgument, delta.to_string() + " outside shape " + s.to_string());
  DehomCorrespondenceReport rep;
  rep.delta = delta;
  rep.gamma = delta_map(delta, s);
  const int m = s.m;
  const int big_n = s.m + s.n;
  const IndexSet big_m = delta_map_missing(s);
  const auto& g = grassmannian(m, big_n);

  std::set<IndexSet> mapped;
  for (const auto& p : delta_ideal_complement(delta, s)) mapped.insert(delta_map(p, s));
  const auto pi = pi_ideal_complement(rep.gamma, m, big_n);
  rep.ideal_matches = mapped == std::set<IndexSet>(pi.begin(), pi.end());
  if (!rep.ideal_matches) rep.failures.push_back("delta_map(Delta^delta) differs from Pi^gamma");

  // [M] is normal: [M][K] = q^e [K][M].
  for (const auto& k : g.poset().elements()) {
    const AlgElement mk = g.straighten({big_m, k});
    const StdMonomial km{k == big_m ? std::vector<IndexSet>{k, k} : std::vector<IndexSet>{k, big_m}};
    const LaurentQ c = mk.coeff(km);
    if (mk.terms.size() != 1 || !c.is_monomial() || c.coeff(c.low_degree()) != 1) {
      rep.failures.push_back("[M] does not q-commute with " + k.to_string());
      continue;
    }
    rep.m_exponents[k] = c.low_degree();
  }
  if (!rep.failures.empty()) return rep;

  // K_1 M^-1 ... K_k M^-1 = q^-(sum_{i>=2} (i-1) e_{K_i}) K_1 ... K_k M^-k; the
  // value cleared by M^power, in the quotient by Pi^gamma.
  auto image = [&](const std::vector<IndexPair>& factors, int power) {
    std::vector<IndexSet> ks;
    int shift = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      ks.push_back(delta_map(factors[i], s));
      shift -= static_cast<int>(i) * rep.m_exponents.at(ks.back());
    }
    for (int k = static_cast<int>(factors.size()); k < power; ++k) ks.push_back(big_m);
    return g.multiply(ks, rep.gamma) * LaurentQ::q_power(shift);
  };

  const auto residual = matrix_poset(s).upper_set(delta);
  std::vector<std::vector<IndexPair>> seqs{{}};
  for (int k = 1; k <= max_factors; ++k) {
    std::vector<std::vector<IndexPair>> next;
    for (const auto& sq : seqs)
      for (const auto& x : residual) next.push_back(concat(sq, {x}));
    seqs = std::move(next);
    for (const auto& sq : seqs) {
      const DetAlgElement st = straighten_det(sq, s, delta);
      int power = k;
      for (const auto& [mono, c] : st.terms) power = std::max(power, static_cast<int>(mono.factors.size()));
      AlgElement rhs;
      rhs.m = m;
      rhs.n = big_n;
      rhs.gamma = rep.gamma;
      for (const auto& [mono, c] : st.terms) rhs += image(mono.factors, power) * c;
      ++rep.products_checked;
      if (!(image(sq, power) == rhs)) {
        std::string name;
        for (const auto& f : sq) name += f.to_string();
        rep.failures.push_back("image of " + name + " = " + st.to_string() + " fails");
      }
    }
  }
  return rep;
}

NormalityReport normality_check(int t, const Shape& s) {
  if (t < 2 || t > s.m) fail(ErrorCode::PreconditionViolated, "need 2 <= t <= m");
  NormalityReport rep;
  rep.t = t;
  rep.shape = s;
  std::vector<int> idx(static_cast<std::size_t>(t - 1));
  std::iota(idx.begin(), idx.end(), 1);
  const IndexPair delta(idx, idx);
  const auto& mm = matrix_minors(s);
  const QuantumMatrixAlgebra& alg = mm.algebra();
  const NcPoly& d = mm.minor(delta);
  for (int i = 1; i <= s.m; ++i)
    for (int j = 1; j <= s.n; ++j) {
      if (i > t - 1 && j > t - 1) continue;
      ++rep.generator_count;
      const NcPoly x = alg.generator(i, j);
      const NcPoly dx = alg.multiply(d, x);
      const NcPoly xd = alg.multiply(x, d);
      const auto& [w, c0] = *xd.terms().begin();
      const RatFun ratio = RatFun(dx.coeff(w)) / RatFun(c0);
      bool ok = ratio.is_laurent();
      LaurentQ c;
      if (ok) {
        c = ratio.to_laurent();
        ok = c.is_monomial() && c.coeff(c.low_degree()) == 1 && dx == xd * c;
      }
      if (!ok) {
        rep.failures.push_back("delta does not q-commute with " + generator_name(s, {i, j}));
        continue;
      }
      rep.exponents.push_back({Generator{i, j}, c.low_degree()});
    }
  rep.expected_count = static_cast<std::size_t>(s.m * s.n - (s.m - t + 1) * (s.n - t + 1));
  rep.quotient_rank = rank_and_gkdim(delta, s).rank;
  return rep;
}

}  // namespace qschubert
