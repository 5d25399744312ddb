#include <doctest.h>

#include <set>

#include "qschubert/poset.hpp"
#include "support.hpp"

using namespace qschubert;

namespace {

IndexSet S(std::vector<int> c) { return IndexSet(std::move(c)); }

std::vector<oracle::Set> cols_of(const std::vector<IndexSet>& v) {
  std::vector<oracle::Set> out;
  for (const auto& x : v) out.push_back(x.cols);
  return out;
}

}  // namespace

TEST_CASE("order examples") {
  CHECK(leq_st(S({1, 3}), S({2, 3})));
  CHECK(!leq_st(S({1, 4}), S({2, 3})));
  CHECK(!leq_st(S({2, 3}), S({1, 4})));
  CHECK(leq_st(IndexPair({1, 2}, {1, 2}), IndexPair({1}, {2})));
  CHECK(!leq_st(IndexPair({1}, {2}), IndexPair({1, 2}, {1, 2})));
}

TEST_CASE("order agrees with the componentwise oracle and is a partial order") {
  const auto pi = grassmann_poset(2, 5);
  for (const auto& a : pi.elements())
    for (const auto& b : pi.elements()) {
      CHECK(leq_st(a, b) == oracle::set_leq(a.cols, b.cols));
      if (leq_st(a, b) && leq_st(b, a)) CHECK(a == b);
      for (const auto& c : pi.elements())
        if (leq_st(a, b) && leq_st(b, c)) CHECK(leq_st(a, c));
    }
  const auto delta = matrix_poset(Shape{2, 3});
  CHECK(delta.size() == 6 + 3);
  for (const auto& a : delta.elements()) {
    CHECK(leq_st(a, a));
    for (const auto& b : delta.elements()) {
      CHECK(leq_st(a, b) == oracle::pair_leq({a.rows, a.cols}, {b.rows, b.cols}));
      if (leq_st(a, b) && leq_st(b, a)) CHECK(a == b);
      for (const auto& c : delta.elements())
        if (leq_st(a, b) && leq_st(b, c)) CHECK(leq_st(a, c));
    }
  }
  CHECK(pi.minimal_elements() == std::vector<IndexSet>{S({1, 2})});
  CHECK(delta.minimal_elements() == std::vector<IndexPair>{IndexPair({1, 2}, {1, 2})});
}

TEST_CASE("ideal complements") {
  CHECK(pi_ideal_complement(S({1, 2}), 2, 4).empty());
  CHECK(pi_ideal_complement(S({2, 3}), 2, 4) == std::vector<IndexSet>{S({1, 2}), S({1, 3}), S({1, 4})});
  CHECK(pi_ideal_complement(S({3, 4}), 2, 4).size() == 5);
  for (const auto& g : IndexSet::all(2, 5)) {
    const auto comp = pi_ideal_complement(g, 2, 5);
    for (const auto& x : comp) CHECK(!oracle::set_leq(g.cols, x.cols));
    CHECK(comp.size() + grassmann_poset(2, 5).upper_set(g).size() == 10);
  }
  CHECK(delta_ideal_complement(IndexPair({1}, {1}), Shape{2, 2}) ==
        std::vector<IndexPair>{IndexPair({1, 2}, {1, 2})});
}

TEST_CASE("upper neighbours") {
  CHECK(upper_neighbours(S({1, 2}), 2, 4) == std::vector<IndexSet>{S({1, 3})});
  CHECK(upper_neighbours(S({3, 4}), 2, 4).empty());
  CHECK(upper_neighbours(S({1, 3}), 2, 4) == std::vector<IndexSet>{S({1, 4}), S({2, 3})});
  // brute-force cover search
  const auto all = IndexSet::all(3, 6);
  for (const auto& g : all) {
    std::vector<IndexSet> covers;
    for (const auto& x : all) {
      if (x == g || !oracle::set_leq(g.cols, x.cols)) continue;
      bool cover = true;
      for (const auto& y : all)
        if (y != g && y != x && oracle::set_leq(g.cols, y.cols) && oracle::set_leq(y.cols, x.cols)) cover = false;
      if (cover) covers.push_back(x);
    }
    CHECK(upper_neighbours(g, 3, 6) == covers);
  }
}

TEST_CASE("GK dimension examples") {
  const auto a = rank_and_gkdim(S({1, 3, 6}), 3, 7);
  CHECK(a.rank == 9);
  CHECK(a.formula == 9);
  const auto b = rank_and_gkdim(S({1, 2}), 2, 4);
  CHECK(b.rank == 5);
  CHECK(b.formula == 5);
  for (const Shape s : {Shape{2, 2}, Shape{2, 3}, Shape{3, 4}}) {
    const auto c = rank_and_gkdim(IndexPair({1}, {1}), s);
    CHECK(c.rank == s.m + s.n - 1);
    CHECK(c.agrees());
  }
}

TEST_CASE("rank equals closed form and brute-force longest chain") {
  for (const auto [m, n] : {std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 6}}) {
    const auto all = oracle::subsets(m, n);
    for (const auto& g : IndexSet::all(m, n)) {
      const auto gk = rank_and_gkdim(g, m, n);
      CHECK(gk.agrees());
      CHECK(gk.rank == oracle::longest_chain(oracle::upper(all, g.cols, oracle::set_leq), oracle::set_leq));
    }
  }
  for (const Shape s : {Shape{2, 2}, Shape{2, 3}}) {
    const auto all = oracle::pairs(s.m, s.n);
    const auto delta = matrix_poset(s);
    for (const auto& d : delta.elements()) {
      const auto gk = rank_and_gkdim(d, s);
      CHECK(gk.agrees());
      CHECK(gk.rank ==
            oracle::longest_chain(oracle::upper(all, oracle::Pair{d.rows, d.cols}, oracle::pair_leq), oracle::pair_leq));
    }
  }
}

TEST_CASE("ladder") {
  const auto lad = ladder(S({1, 3, 6}), 3, 7);
  std::vector<std::pair<int, int>> pos;
  for (const auto& e : lad) pos.push_back({e.i, e.j});
  CHECK(pos == std::vector<std::pair<int, int>>{{1, 7}, {2, 4}, {2, 5}, {2, 7}, {3, 2}, {3, 4}, {3, 5}, {3, 7}});
  CHECK(lad[1].label == S({1, 4, 6}));
  CHECK(ladder(S({3, 4}), 2, 4).empty());

  for (const auto [m, n] : {std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 6}, std::pair{3, 7}}) {
    for (const auto& g : IndexSet::all(m, n)) {
      const auto l = ladder(g, m, n);
      CHECK(static_cast<int>(l.size()) + 1 == rank_and_gkdim(g, m, n).rank);
      // labels are exactly the elements above gamma differing in one column
      std::vector<oracle::Set> expected;
      for (const auto& x : oracle::subsets(m, n)) {
        if (x == g.cols || !oracle::set_leq(g.cols, x)) continue;
        int shared = 0;
        for (int c : x) shared += std::count(g.cols.begin(), g.cols.end(), c);
        if (shared == m - 1) expected.push_back(x);
      }
      std::vector<oracle::Set> labels;
      for (const auto& e : l) {
        CHECK(leq_st(g, e.label));
        CHECK(e.label != g);
        labels.push_back(e.label.cols);
      }
      std::sort(labels.begin(), labels.end());
      CHECK(labels == expected);
    }
  }
}

TEST_CASE("delta map") {
  CHECK(delta_map(IndexPair({1}, {1}), Shape{1, 1}) == S({1}));
  CHECK(delta_map(IndexPair({1}, {1}), Shape{2, 2}) == S({1, 3}));
  CHECK(delta_map(IndexPair({1, 2}, {1, 2}), Shape{2, 2}) == S({1, 2}));
  CHECK(delta_map_missing(Shape{2, 2}) == S({3, 4}));
  for (const Shape s : {Shape{1, 2}, Shape{2, 2}, Shape{2, 3}}) {
    const auto elems = matrix_poset(s).elements();
    std::set<IndexSet> image;
    for (const auto& a : elems) {
      const auto ka = delta_map(a, s);
      CHECK(ka != delta_map_missing(s));
      image.insert(ka);
      for (const auto& b : elems) CHECK(leq_st(a, b) == leq_st(ka, delta_map(b, s)));
    }
    CHECK(image.size() == elems.size());
    CHECK(image.size() + 1 == IndexSet::all(s.m, s.m + s.n).size());
  }
}

TEST_CASE("Gorenstein classifier examples") {
  CHECK(gorenstein(S({1, 2}), 4).gorenstein);
  const auto b = gorenstein(S({1, 3}), 4);
  CHECK(b.gorenstein);
  CHECK(b.blocks == std::vector<std::vector<int>>{{1}, {3}});
  CHECK(b.gaps == std::vector<std::vector<int>>{{2}, {4}});
  CHECK(b.t == 1);
  CHECK(!gorenstein(S({1, 4}), 5).gorenstein);
  const auto c = gorenstein(S({2, 4}), 4);
  CHECK(c.last_gap_empty);
}

TEST_CASE("Gorenstein classifier matches h-vector palindromicity") {
  for (const auto [m, n] : {std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 6}, std::pair{3, 7}, std::pair{2, 6}}) {
    const auto all = oracle::subsets(m, n);
    for (const auto& g : IndexSet::all(m, n)) {
      const auto up = oracle::upper(all, g.cols, oracle::set_leq);
      const int r = oracle::longest_chain(up, oracle::set_leq);
      const auto h = oracle::h_from_counts(oracle::multichains_dp(up, r, oracle::set_leq), r);
      const bool palindromic = std::equal(h.begin(), h.end(), h.rbegin());
      CHECK(gorenstein(g, n).gorenstein == palindromic);
      CHECK(oracle::gorenstein_blocks(g.cols, n) == palindromic);
      CHECK(h_vector(grassmann_poset(m, n).restrict_upper(g)) == h);
    }
  }
}

TEST_CASE("multichain counts") {
  for (const auto [m, n] : {std::pair{1, 2}, std::pair{2, 4}, std::pair{2, 5}}) {
    const auto pi = grassmann_poset(m, n);
    const auto counts = pi.multichain_counts(3);
    const auto brute = oracle::multichains_brute(cols_of(pi.elements()), 3, oracle::set_leq);
    for (int d = 0; d <= 3; ++d) CHECK(counts[d] == brute[d]);
  }
  const auto two = grassmann_poset(1, 2).multichain_counts(3);
  CHECK(two == std::vector<mpz_class>{1, 2, 3, 4});
}
