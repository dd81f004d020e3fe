#pragma once

// Reference implementations for tests. Deliberately naive and independent of
// the library's field arithmetic, union-find and enumeration code.

#include "graphcode/multigraph.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;  // 1-indexed, (u, u) is a loop

/// Rank of the incidence matrix of (n, edges) over GF(p), plain Gaussian
/// elimination on long long.
inline int incidence_rank(int n, const EdgeList& edges, long long p) {
  std::vector<std::vector<long long>> rows;
  for (const auto& [u, v] : edges) {
    std::vector<long long> row(static_cast<std::size_t>(n), 0);
    row[static_cast<std::size_t>(u - 1)] = 1;
    row[static_cast<std::size_t>(v - 1)] = 1;
    rows.push_back(row);
  }
  auto power = [p](long long b, long long e) {
    long long r = 1;
    b %= p;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] % p != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
    auto& top = rows[static_cast<std::size_t>(rank)];
    const long long inv = power(top[static_cast<std::size_t>(col)], p - 2);
    for (auto& x : top) x = x * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank)) continue;
      const long long factor = rows[r][static_cast<std::size_t>(col)] % p;
      if (factor == 0) continue;
      for (int c = 0; c < n; ++c) {
        auto& x = rows[r][static_cast<std::size_t>(c)];
        x = ((x - factor * top[static_cast<std::size_t>(c)]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

inline bool decodable(int n, const EdgeList& edges, long long p) { return incidence_rank(n, edges, p) == n; }

inline EdgeList edge_list(const graphcode::MultiGraph& g) {
  EdgeList out;
  for (const auto& e : g.edges()) out.emplace_back(e.u.index, e.v.index);
  return out;
}

/// c_x by materializing every kept subset and ranking it over GF(p).
inline std::vector<long long> spectrum(const graphcode::MultiGraph& g, long long p) {
  const int n = g.vertex_count();
  const auto edges = edge_list(g);
  const int m = static_cast<int>(edges.size());
  std::vector<long long> c(static_cast<std::size_t>(m) + 1, 0);
  for (std::uint64_t kept = 0; kept < (std::uint64_t{1} << m); ++kept) {
    EdgeList sub;
    for (int i = 0; i < m; ++i) {
      if (kept >> i & 1) sub.push_back(edges[static_cast<std::size_t>(i)]);
    }
    if (decodable(n, sub, p)) ++c[static_cast<std::size_t>(m - static_cast<int>(sub.size()))];
  }
  return c;
}

/// n packets each sent r times uncoded: every packet needs one surviving copy.
inline double uncoded_probability(int n, int r, double p) { return std::pow(1.0 - std::pow(1.0 - p, r), n); }

inline long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Uniform endpoints; each edge is a loop with probability loop_share.
inline graphcode::MultiGraph random_graph(std::mt19937_64& rng, int n, int m, double loop_share = 0.25) {
  std::uniform_int_distribution<int> vertex(1, n);
  std::bernoulli_distribution loop(loop_share);
  EdgeList edges;
  for (int i = 0; i < m; ++i) {
    const int u = vertex(rng);
    if (n == 1 || loop(rng)) {
      edges.emplace_back(u, u);
    } else {
      int v = vertex(rng);
      while (v == u) v = vertex(rng);
      edges.emplace_back(u, v);
    }
  }
  return graphcode::build(n, std::span<const std::pair<int, int>>(edges));
}

/// Every labeled multigraph on n vertices with exactly m edges (loops and
/// parallel edges allowed), as multisets of vertex pairs.
template <typename Visit>
void for_each_multigraph(int n, int m, Visit&& visit) {
  EdgeList pairs;
  for (int u = 1; u <= n; ++u) {
    for (int v = u; v <= n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<int> pick(static_cast<std::size_t>(m), 0);
  while (true) {
    EdgeList edges;
    for (int i : pick) edges.push_back(pairs[static_cast<std::size_t>(i)]);
    visit(graphcode::build(n, std::span<const std::pair<int, int>>(edges)));
    // Next nondecreasing index sequence.
    int pos = m - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == static_cast<int>(pairs.size()) - 1) --pos;
    if (pos < 0) return;
    const int next = pick[static_cast<std::size_t>(pos)] + 1;
    for (int i = pos; i < m; ++i) pick[static_cast<std::size_t>(i)] = next;
  }
}

/// Every graph with n <= 5 vertices and m <= 6 edges.
template <typename Visit>
void for_each_small_graph(Visit&& visit) {
  for (int n = 1; n <= 5; ++n) {
    for (int m = 0; m <= 6; ++m) for_each_multigraph(n, m, visit);
  }
}

}  // namespace oracle
