#pragma once

// Brute-force reference implementations used only by the tests.

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "greenseq/quiver.hpp"

namespace oracle {

using greenseq::Int;

// Arrow multiset over vertices 1..size, vertices above mutable_count frozen.
struct ArrowQuiver {
  int mutable_count = 0;
  int size = 0;
  std::map<std::pair<int, int>, Int> arrows;
};

inline ArrowQuiver from_ice(const greenseq::IceQuiver& q) {
  ArrowQuiver out{q.mutable_count(), q.size(), {}};
  for (int i = 1; i <= q.mutable_count(); ++i)
    for (int j = 1; j <= q.size(); ++j) {
      const Int b = q.entry(i, j);
      if (b > 0) out.arrows[{i, j}] += b;
      if (b < 0 && j > q.mutable_count()) out.arrows[{j, i}] += -b;
    }
  return out;
}

// The three-step textbook rule: compose paths through k, reverse arrows at k,
// cancel 2-cycles, drop arrows between frozen vertices.
inline ArrowQuiver mutate(const ArrowQuiver& q, int k) {
  std::map<std::pair<int, int>, Int> next;
  for (const auto& [ij, c] : q.arrows) {
    if (ij.second == k) {
      for (const auto& [kl, d] : q.arrows)
        if (kl.first == k) next[{ij.first, kl.second}] += c * d;
    }
  }
  for (const auto& [ij, c] : q.arrows) {
    if (ij.first == k || ij.second == k)
      next[{ij.second, ij.first}] += c;
    else
      next[ij] += c;
  }
  ArrowQuiver out{q.mutable_count, q.size, {}};
  for (const auto& [ij, c] : next) {
    const auto [i, j] = ij;
    if (i > q.mutable_count && j > q.mutable_count) continue;
    if (i == j) continue;
    const Int back = next.count({j, i}) ? next.at({j, i}) : 0;
    if (c > back) out.arrows[ij] = c - back;
  }
  return out;
}

inline greenseq::IntMatrix matrix(const ArrowQuiver& q) {
  greenseq::IntMatrix b(q.mutable_count, q.size);
  for (const auto& [ij, c] : q.arrows) {
    const auto [i, j] = ij;
    if (i <= q.mutable_count) b(i - 1, j - 1) += c;
    if (j <= q.mutable_count) b(j - 1, i - 1) -= c;
  }
  return b;
}

// Green: no arrow from a frozen vertex into v.
inline bool green(const ArrowQuiver& q, int v) {
  for (const auto& [ij, c] : q.arrows)
    if (ij.second == v && ij.first > q.mutable_count && c > 0) return false;
  return true;
}

inline bool all_red(const ArrowQuiver& q) {
  for (int v = 1; v <= q.mutable_count; ++v)
    if (green(q, v)) return false;
  return true;
}

inline ArrowQuiver framed_arrows(const greenseq::Quiver& q) { return from_ice(greenseq::framed(q)); }

// Every maximal green sequence of length at most max_length, by plain DFS on arrows.
inline std::vector<std::vector<int>> all_mgs(const greenseq::Quiver& q, int max_length) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  auto walk = [&](auto&& self, const ArrowQuiver& cur) -> void {
    if (all_red(cur)) {
      out.push_back(path);
      return;
    }
    if (static_cast<int>(path.size()) == max_length) return;
    for (int k = 1; k <= cur.mutable_count; ++k) {
      if (!green(cur, k)) continue;
      path.push_back(k);
      self(self, mutate(cur, k));
      path.pop_back();
    }
  };
  walk(walk, framed_arrows(q));
  return out;
}

inline int shortest_mgs_length(const greenseq::Quiver& q, int max_length) {
  int best = -1;
  for (const auto& s : all_mgs(q, max_length))
    if (best < 0 || static_cast<int>(s.size()) < best) best = static_cast<int>(s.size());
  return best;
}

// Canonical form up to vertex relabeling: minimal matrix over all permutations.
inline std::vector<Int> iso_key(const greenseq::Quiver& q) {
  const int n = q.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Int> best;
  do {
    std::vector<Int> key;
    key.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) key.push_back(q.exchange_matrix()(perm[i], perm[j]));
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Mutation class up to isomorphism, one representative per class member.
inline std::vector<greenseq::Quiver> mutation_class(const greenseq::Quiver& seed) {
  std::vector<greenseq::Quiver> out;
  std::set<std::vector<Int>> seen;
  std::queue<greenseq::Quiver> todo;
  seen.insert(iso_key(seed));
  todo.push(seed);
  while (!todo.empty()) {
    greenseq::Quiver q = todo.front();
    todo.pop();
    for (int k = 1; k <= q.size(); ++k) {
      greenseq::Quiver next = greenseq::mutate(q, k);
      if (seen.insert(iso_key(next)).second) todo.push(next);
    }
    out.push_back(std::move(q));
  }
  return out;
}

inline greenseq::Quiver linear_a(int n) {
  std::vector<greenseq::Arrow> arrows;
  for (int i = 1; i < n; ++i) arrows.push_back({i, i + 1, 1});
  return greenseq::Quiver::from_arrows(n, arrows);
}

// D_n with the fork at vertices 1, 2 both pointing into 3, then a path.
inline greenseq::Quiver linear_d(int n) {
  std::vector<greenseq::Arrow> arrows{{1, 3, 1}, {2, 3, 1}};
  for (int i = 3; i < n; ++i) arrows.push_back({i, i + 1, 1});
  return greenseq::Quiver::from_arrows(n, arrows);
}

inline bool acyclic(const greenseq::Quiver& q) {
  const int n = q.size();
  std::vector<int> indegree(n + 1, 0);
  for (const auto& a : q.arrows()) ++indegree[a.target];
  std::vector<int> ready;
  for (int v = 1; v <= n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  int removed = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++removed;
    for (int w = 1; w <= n; ++w)
      if (q.entry(v, w) > 0 && --indegree[w] == 0) ready.push_back(w);
  }
  return removed == n;
}

inline int count_three_cycles(const greenseq::Quiver& q) {
  int count = 0;
  const int n = q.size();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        const Int ab = q.entry(a, b), bc = q.entry(b, c), ca = q.entry(c, a);
        if ((ab == 1 && bc == 1 && ca == 1) || (ab == -1 && bc == -1 && ca == -1)) ++count;
      }
  return count;
}

inline greenseq::Quiver random_relabel(const greenseq::Quiver& q, std::mt19937& rng) {
  std::vector<int> image(q.size());
  std::iota(image.begin(), image.end(), 1);
  std::shuffle(image.begin(), image.end(), rng);
  return greenseq::relabel(q, image);
}

}  // namespace oracle
