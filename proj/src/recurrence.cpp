#include "graphcode/analysis.hpp"

#include "graphcode/errors.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

namespace graphcode {

namespace {

using CanonicalKey = std::vector<int>;

/// Relabels vertices by (d_I, d_L, sorted neighbour degrees), ties broken by
/// index, and returns n followed by the sorted relabeled edge list. Equal keys
/// imply isomorphic graphs; isomorphic graphs may still get distinct keys.
CanonicalKey canonical_key(const MultiGraph& g) {
  const int n = g.vertex_count();
  const auto profile = degree_profile(g);
  using Signature = std::tuple<int, int, std::vector<std::pair<int, int>>>;
  std::vector<Signature> sig(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::get<0>(sig[static_cast<std::size_t>(v)]) = profile.incidence_degree[static_cast<std::size_t>(v)];
    std::get<1>(sig[static_cast<std::size_t>(v)]) = profile.loop_degree[static_cast<std::size_t>(v)];
  }
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    const auto u = static_cast<std::size_t>(e.u.index - 1);
    const auto v = static_cast<std::size_t>(e.v.index - 1);
    std::get<2>(sig[u]).emplace_back(profile.incidence_degree[v], profile.loop_degree[v]);
    std::get<2>(sig[v]).emplace_back(profile.incidence_degree[u], profile.loop_degree[u]);
  }
  for (auto& s : sig) std::sort(std::get<2>(s).begin(), std::get<2>(s).end());

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return sig[static_cast<std::size_t>(a)] < sig[static_cast<std::size_t>(b)];
  });
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) label[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(g.edge_count()));
  for (const auto& e : g.edges()) {
    const int a = label[static_cast<std::size_t>(e.u.index - 1)];
    const int b = label[static_cast<std::size_t>(e.v.index - 1)];
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(pairs.begin(), pairs.end());
  CanonicalKey key;
  key.reserve(1 + 2 * pairs.size());
  key.push_back(n);
  for (const auto& [a, b] : pairs) {
    key.push_back(a);
    key.push_back(b);
  }
  return key;
}

class Recurrence {
 public:
  Recurrence(ParityClass parity, const EnumerationOptions& options)
      : parity_(parity), options_(options) {}

  std::vector<BigInt> counts(const MultiGraph& g) {
    const int m = g.edge_count();
    const auto profile = degree_profile(g);
    if (std::find(profile.incidence_degree.begin(), profile.incidence_degree.end(), 0) !=
        profile.incidence_degree.end()) {
      // An isolated vertex stays isolated under every deletion.
      return std::vector<BigInt>(static_cast<std::size_t>(m) + 1, 0);
    }
    auto key = canonical_key(g);
    if (auto hit = memo_.find(key); hit != memo_.end()) return hit->second;

    std::vector<BigInt> result;
    if (auto cls = reducible_class(g)) {
      const auto [u, v] = *cls;
      const int k = g.multiplicity(u, v);
      EdgeIdSet class_ids;
      for (const auto& e : g.edges()) {
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) class_ids.insert(e.id);
      }
      const auto contracted = counts(contract_parallel_class(g, u, v));
      const auto removed = counts(delete_edges(g, class_ids));
      // Deletions that keep at least one class edge biject with deletions of
      // the contraction; j counts the class edges deleted (j < k). Deletions
      // that remove the whole class are deletions of G - e^k.
      result.assign(static_cast<std::size_t>(m) + 1, 0);
      for (int x = 0; x <= m; ++x) {
        BigInt c = 0;
        for (int j = 0; j < k && j <= x; ++j) {
          if (x - j <= m - k) c += binomial(k, j) * contracted[static_cast<std::size_t>(x - j)];
        }
        if (x >= k) c += removed[static_cast<std::size_t>(x - k)];
        result[static_cast<std::size_t>(x)] = std::move(c);
      }
    } else {
      result = deletion_spectrum(g, parity_, options_).counts;
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  /// Lowest vertex pair whose parallel class satisfies the reduction condition.
  std::optional<std::pair<VertexId, VertexId>> reducible_class(const MultiGraph& g) const {
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> classes;
    for (const auto& e : g.edges()) {
      if (e.is_loop()) continue;
      classes[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(e.id);
    }
    for (const auto& [ends, ids] : classes) {
      if (parity_ == ParityClass::even) return ends;
      if (ids.size() == 1 && !edge_in_cycle(g, ids.front())) return ends;
    }
    return std::nullopt;
  }

  ParityClass parity_;
  EnumerationOptions options_;
  std::map<CanonicalKey, std::vector<BigInt>> memo_;
};

}  // namespace

DeletionSpectrum spectrum_by_recurrence(const MultiGraph& g, ParityClass parity,
                                        const EnumerationOptions& options) {
  Recurrence rec(parity, options);
  DeletionSpectrum s;
  s.m = g.edge_count();
  s.parity = parity;
  s.counts = rec.counts(g);
  return s;
}

}  // namespace graphcode
