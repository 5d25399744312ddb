// Runs the twelve acceptance criteria and prints one PASS/FAIL line each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "qschubert/detring.hpp"
#include "qschubert/error.hpp"
#include "qschubert/minors.hpp"
#include "qschubert/schubert.hpp"
#include "qschubert/serialize.hpp"

using namespace qschubert;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int number, const char* name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (out.ok && limit_seconds > 0 && secs > limit_seconds) {
    out.ok = false;
    out.detail = "over time limit of " + std::to_string(limit_seconds) + "s";
  }
  if (!out.ok) ++failures;
  std::printf("%s  %2d %-28s %8.3fs%s%s\n", out.ok ? "PASS" : "FAIL", number, name, secs, out.detail.empty() ? "" : "  ",
              out.detail.c_str());
  std::fflush(stdout);
}

std::vector<IndexPair> maximal(const char* product) {
  std::vector<IndexPair> out;
  for (const auto& x : parse_index_set_product(product)) out.push_back(x.as_pair());
  return out;
}

bool pure_q_power(const LaurentQ& c) { return c.is_monomial() && c.coeff(c.low_degree()) == 1; }

}  // namespace

int main() {
  criterion(1, "confluence", 40, [] {
    Outcome o;
    for (const Shape s : {Shape{2, 2}, Shape{2, 3}, Shape{2, 4}, Shape{3, 3}}) {
      const auto start = std::chrono::steady_clock::now();
      const auto r = confluence_check(s);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      o.require(r.passed(), "confluence fails for " + s.to_string());
      o.require(secs < 10, s.to_string() + " took over 10s");
    }
    return o;
  });

  criterion(2, "three-term minor identity", 0, [] {
    Outcome o;
    const QuantumMatrixAlgebra alg(Shape{2, 4});
    MinorRelation r;
    r.shape = Shape{2, 4};
    r.terms = {{LaurentQ(1), maximal("[1,3][2,4]")},
               {LaurentQ(-1), maximal("[2,4][1,3]")},
               {-LaurentQ::q_minus_qinv(), maximal("[1,4][2,3]")}};
    o.require(relation_value(alg, r).is_zero(), "relation does not reduce to zero");
    const auto found = find_relations(alg, {maximal("[1,3][2,4]"), maximal("[2,4][1,3]"), maximal("[1,4][2,3]")});
    o.require(found.size() == 1 && found[0].to_string() == r.to_string(), "kernel discovery disagrees");
    return o;
  });

  criterion(3, "ladder relations", 300, [] {
    Outcome o;
    std::vector<IndexSet> gammas = IndexSet::all(2, 4);
    for (const auto& g : gammas)
      for (const auto& rel : ladder_relations(g, 2, 4)) o.require(rel.holds, rel.relation);
    const auto big = ladder_relations(IndexSet({1, 3, 6}), 3, 7);
    o.require(big.size() == 8 * 7 / 2 + 8, "unexpected relation count for (1,3,6)");
    for (const auto& rel : big) o.require(rel.holds, rel.relation);
    return o;
  });

  criterion(4, "Muir extension", 0, [] {
    Outcome o;
    const char* input = "[1|1][2|2] - [2|2][1|1] - (q - q^-1)*[1|2][2|1] = 0";
    for (int n : {3, 4}) {
      const QuantumMatrixAlgebra alg(Shape{n, n});
      const auto ext = muir_extend(alg, parse_minor_relation(input, Shape{n, n}), {1, 2}, {1, 2});
      o.require(ext.verified && relation_value(alg, ext).is_zero(), "extension fails for n=" + std::to_string(n));
    }
    return o;
  });

  criterion(5, "ladder example", 0, [] {
    Outcome o;
    const auto lad = ladder(IndexSet({1, 3, 6}), 3, 7);
    std::vector<std::pair<int, int>> pos;
    for (const auto& e : lad) pos.push_back({e.i, e.j});
    o.require(pos == std::vector<std::pair<int, int>>{{1, 7}, {2, 4}, {2, 5}, {2, 7}, {3, 2}, {3, 4}, {3, 5}, {3, 7}},
              "ladder positions differ");
    const auto gk = rank_and_gkdim(IndexSet({1, 3, 6}), 3, 7);
    o.require(gk.rank == 9 && gk.formula == 9 && static_cast<int>(lad.size()) + 1 == 9, "GK dimension is not 9");
    return o;
  });

  criterion(6, "A.S.L. axioms", 600, [] {
    Outcome o;
    std::vector<AslReport> reports{asl_check(2, 4, std::nullopt), asl_check(2, 5, std::nullopt)};
    for (const auto& g : IndexSet::all(2, 4)) reports.push_back(asl_check(2, 4, g));
    for (const auto& r : reports) {
      const std::string where = "G(" + std::to_string(r.m) + "," + std::to_string(r.n) + ")" +
                                (r.gamma ? " gamma=" + r.gamma->to_string() : "");
      o.require(r.passed(), where + ": " + (r.failures.empty() ? "" : r.failures.front()));
      for (const auto& s : r.scalars) o.require(pure_q_power(s.c), where + ": scalar " + s.c.to_string());
    }
    o.require(reports[0].scalars.size() == 15, "expected 15 scalars in G(2,4)");
    return o;
  });

  criterion(7, "Pieri intersection", 0, [] {
    Outcome o;
    for (const auto& g : IndexSet::all(2, 4)) {
      if (g == IndexSet({3, 4})) continue;
      o.require(pieri_check(g, 2, 4, 2).passed(), "fails at " + g.to_string());
    }
    return o;
  });

  criterion(8, "Hilbert series", 0, [] {
    Outcome o;
    const auto h = hilbert(std::nullopt, 2, 4, 2, 2);
    o.require(h.dims == std::vector<mpz_class>{1, 6, 20}, "dimensions differ from 1 6 20");
    o.require(h.checks.size() == 3, "normal-form ranks not computed for degrees 0-2");
    for (const auto& c : h.checks)
      o.require(mpz_class(c.generic_rank) == h.dims[c.degree] && c.rank_at_2 == c.generic_rank &&
                    c.rank_at_third == c.generic_rank,
                "rank mismatch in degree " + std::to_string(c.degree));
    return o;
  });

  criterion(9, "Gorenstein classifier", 0, [] {
    Outcome o;
    for (const auto [m, n] : {std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 6}}) {
      const auto pi = grassmann_poset(m, n);
      for (const auto& g : IndexSet::all(m, n))
        o.require(gorenstein(g, n).gorenstein == is_palindromic(h_vector(pi.restrict_upper(g))),
                  "disagreement at " + g.to_string() + " in n=" + std::to_string(n));
    }
    return o;
  });

  criterion(10, "dehomogenisation", 0, [] {
    Outcome o;
    for (const auto& d : matrix_poset(Shape{2, 2}).elements()) {
      const auto r = dehom_correspondence_check(d, Shape{2, 2}, 2);
      o.require(r.passed(), "correspondence fails at " + d.to_string() +
                                (r.failures.empty() ? "" : ": " + r.failures.front()));
    }
    for (const Shape s : {Shape{1, 2}, Shape{2, 2}, Shape{2, 3}})
      o.require(delta_map_check(s).passed(), "delta map is not an isomorphism for " + s.to_string());
    return o;
  });

  criterion(11, "Laplace expansion", 0, [] {
    Outcome o;
    const auto r = laplace_last_row(2, {1, 2}, {1, 2});
    o.require(r.verified, "expansion not certified");
    o.require(expansion_to_string(r) == "[1,2|1,2] = X22*[1|1] - q^-1*X21*[1|2]", expansion_to_string(r));
    return o;
  });

  criterion(12, "round-trip straightening", 0, [] {
    Outcome o;
    const auto& g24 = grassmannian(2, 4);
    const auto all = IndexSet::all(2, 4);
    std::mt19937_64 rng(20240607);
    std::uniform_int_distribution<int> count(1, 3), pick(0, static_cast<int>(all.size()) - 1);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<IndexSet> f;
      for (int k = count(rng); k > 0; --k) f.push_back(all[pick(rng)]);
      if (!(g24.expand(g24.straighten(f)) == g24.product(f))) {
        std::ostringstream w;
        for (const auto& x : f) w << x.to_string();
        o.require(false, "mismatch for " + w.str());
      }
    }
    return o;
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
