#pragma once

// Independent reference implementations used only by the tests. They share no
// code with the library beyond the Rational type.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using Gen = std::pair<int, int>;
using GenWord = std::vector<Gen>;
using SpecPoly = std::map<GenWord, Q>;

inline Q power(const Q& q0, int e) {
  Q out = 1;
  for (int i = 0; i < std::abs(e); ++i) out *= q0;
  return e >= 0 ? out : Q(1) / out;
}

/// Normal form at q = q0 by naive leftmost rewriting of descending adjacent
/// pairs with the four defining relation families solved for the descending
/// side.
inline SpecPoly reduce(const GenWord& word, const Q& q0) {
  const Q qinv = Q(1) / q0;
  SpecPoly pending{{word, Q(1)}}, done;
  while (!pending.empty()) {
    auto [w, c] = *pending.begin();
    pending.erase(pending.begin());
    if (c == 0) continue;
    std::size_t pos = 0;
    while (pos + 1 < w.size() && !(w[pos + 1] < w[pos])) ++pos;
    if (pos + 1 >= w.size()) {
      done[w] += c;
      if (done[w] == 0) done.erase(w);
      continue;
    }
    const Gen a = w[pos], b = w[pos + 1];  // a > b
    auto put = [&](Gen x, Gen y, const Q& k) {
      GenWord v = w;
      v[pos] = x;
      v[pos + 1] = y;
      pending[v] += c * k;
    };
    if (a.first == b.first || a.second == b.second) {
      put(b, a, qinv);
    } else if (a.second < b.second) {
      put(b, a, 1);
    } else {
      // a = (k,l), b = (i,j), i < k, j < l
      put(b, a, 1);
      put({b.first, a.second}, {a.first, b.second}, -(q0 - qinv));
    }
  }
  return done;
}

inline SpecPoly mul(const SpecPoly& a, const SpecPoly& b, const Q& q0) {
  SpecPoly out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      GenWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      for (const auto& [wr, cr] : reduce(w, q0)) out[wr] += ca * cb * cr;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline int inversions(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  return inv;
}

/// Sum over permutations s of (-q)^inv(s) X_{i_s(1) j_1} ... X_{i_s(t) j_t} at q0.
inline SpecPoly minor(const std::vector<int>& rows, const std::vector<int>& cols, const Q& q0) {
  std::vector<int> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  SpecPoly out;
  do {
    GenWord w;
    for (std::size_t k = 0; k < cols.size(); ++k) w.push_back({rows[perm[k]], cols[k]});
    const Q sign = power(-q0, inversions(perm));
    for (const auto& [wr, cr] : reduce(w, q0)) out[wr] += sign * cr;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// --- combinatorics ---------------------------------------------------------

using Set = std::vector<int>;
using Pair = std::pair<Set, Set>;

inline bool set_leq(const Set& a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool pair_leq(const Pair& a, const Pair& b) {
  if (a.first.size() < b.first.size()) return false;
  for (std::size_t s = 0; s < b.first.size(); ++s)
    if (a.first[s] > b.first[s] || a.second[s] > b.second[s]) return false;
  return true;
}

inline std::vector<Set> subsets(int k, int n) {
  std::vector<Set> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Set s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i + 1);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Pair> pairs(int m, int n) {
  std::vector<Pair> out;
  for (int t = 1; t <= std::min(m, n); ++t)
    for (const auto& r : subsets(t, m))
      for (const auto& c : subsets(t, n)) out.push_back({r, c});
  return out;
}

/// Elements x with leq(g, x).
template <typename T, typename Leq>
std::vector<T> upper(const std::vector<T>& all, const T& g, Leq leq) {
  std::vector<T> out;
  for (const auto& x : all)
    if (leq(g, x)) out.push_back(x);
  return out;
}

/// Number of elements in a longest chain, by depth-first search.
template <typename T, typename Leq>
int longest_chain(const std::vector<T>& elems, Leq leq) {
  std::vector<int> memo(elems.size(), 0);
  std::function<int(std::size_t)> from = [&](std::size_t i) {
    if (memo[i]) return memo[i];
    int best = 1;
    for (std::size_t j = 0; j < elems.size(); ++j)
      if (j != i && leq(elems[i], elems[j])) best = std::max(best, 1 + from(j));
    return memo[i] = best;
  };
  int best = 0;
  for (std::size_t i = 0; i < elems.size(); ++i) best = std::max(best, from(i));
  return best;
}

/// Multichain counts for degrees 0..D, by enumerating all D-tuples.
template <typename T, typename Leq>
std::vector<long> multichains_brute(const std::vector<T>& elems, int max_degree, Leq leq) {
  std::vector<long> out{1};
  for (int d = 1; d <= max_degree; ++d) {
    long count = 0;
    std::vector<std::size_t> idx(d, 0);
    while (true) {
      bool chain = true;
      for (int k = 0; k + 1 < d && chain; ++k) chain = leq(elems[idx[k]], elems[idx[k + 1]]);
      count += chain;
      int k = d - 1;
      while (k >= 0 && ++idx[k] == elems.size()) idx[k--] = 0;
      if (k < 0) break;
    }
    out.push_back(count);
  }
  return out;
}

/// Multichain counts by dynamic programming on the last element.
template <typename T, typename Leq>
std::vector<mpz_class> multichains_dp(const std::vector<T>& elems, int max_degree, Leq leq) {
  std::vector<mpz_class> out{1};
  std::vector<mpz_class> ending(elems.size(), 1);
  for (int d = 1; d <= max_degree; ++d) {
    if (d > 1) {
      std::vector<mpz_class> next(elems.size(), 0);
      for (std::size_t j = 0; j < elems.size(); ++j)
        for (std::size_t i = 0; i < elems.size(); ++i)
          if (leq(elems[i], elems[j])) next[j] += ending[i];
      ending = std::move(next);
    }
    mpz_class total = 0;
    for (const auto& e : ending) total += e;
    out.push_back(total);
  }
  return out;
}

/// Numerator of sum_d H(d) t^d = h(t)/(1-t)^r, trailing zeros trimmed.
inline std::vector<mpz_class> h_from_counts(const std::vector<mpz_class>& counts, int r) {
  std::vector<mpz_class> h(r + 1, 0);
  for (int k = 0; k <= r; ++k) {
    // coefficient of t^k in H(t) * (1-t)^r
    mpz_class binom = 1;
    for (int i = 0; i <= k; ++i) {
      if (i > 0) binom = binom * (r - i + 1) / i;
      const mpz_class term = binom * counts[k - i];
      h[k] += (i % 2 ? -term : term);
    }
  }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

/// |chi_{i-1}| = |beta_i| for 1 <= i <= t, blocks read from gamma_1.
inline bool gorenstein_blocks(const Set& g, int n) {
  std::vector<int> blocks, gaps;
  std::size_t i = 0;
  while (i < g.size()) {
    std::size_t j = i;
    while (j + 1 < g.size() && g[j + 1] == g[j] + 1) ++j;
    blocks.push_back(static_cast<int>(j - i + 1));
    const int next = j + 1 < g.size() ? g[j + 1] : n + 1;
    gaps.push_back(next - g[j] - 1);
    i = j + 1;
  }
  const int s = static_cast<int>(blocks.size()) - 1;
  const int t = gaps.back() == 0 ? s - 1 : s;
  for (int k = 1; k <= t; ++k)
    if (gaps[k - 1] != blocks[k]) return false;
  return true;
}

/// Hand-rolled deterministic generator (splitmix64).
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int below(int k) { return static_cast<int>(next() % static_cast<std::uint64_t>(k)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
};

}  // namespace oracle
