#include "graphcode/multigraph.hpp"

#include "graphcode/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>

namespace graphcode {

namespace {

constexpr int kMaxBipartitionVertices = 30;

void check_vertex(int n, VertexId v) {
  if (v.index < 1 || v.index > n) {
    throw InputError("vertex " + std::to_string(v.index) + " out of range 1.." +
                     std::to_string(n));
  }
}

/// Minimal union-find over 0-based vertices.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

MultiGraph::MultiGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw InputError("vertex count must be nonnegative");
  std::set<EdgeId> seen;
  for (const auto& e : edges_) {
    check_vertex(n_, e.u);
    check_vertex(n_, e.v);
    if (!seen.insert(e.id).second) {
      throw InputError("duplicate edge id " + std::to_string(e.id.value));
    }
  }
}

const Edge& MultiGraph::edge(EdgeId id) const {
  for (const auto& e : edges_) {
    if (e.id == id) return e;
  }
  throw InputError("unknown edge id " + std::to_string(id.value));
}

bool MultiGraph::has_edge(EdgeId id) const noexcept {
  return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.id == id; });
}

int MultiGraph::multiplicity(VertexId u, VertexId v) const noexcept {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return (e.u == u && e.v == v) || (e.u == v && e.v == u);
  }));
}

int MultiGraph::loop_count() const noexcept {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); }));
}

MultiGraph build(int n, std::span<const std::pair<int, int>> edge_list) {
  if (n < 1) throw InputError("graph needs at least one vertex");
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  int next = 1;
  for (const auto& [a, b] : edge_list) {
    edges.push_back(Edge{EdgeId{next++}, VertexId{a}, VertexId{b}});
  }
  return MultiGraph(n, std::move(edges));
}

MultiGraph build(int n, std::initializer_list<std::pair<int, int>> edge_list) {
  return build(n, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size()));
}

DegreeProfile degree_profile(const MultiGraph& g) {
  const int n = g.vertex_count();
  DegreeProfile d;
  d.incidence_degree.assign(static_cast<std::size_t>(n), 0);
  d.loop_degree.assign(static_cast<std::size_t>(n), 0);
  std::vector<int> pair_count(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges()) {
    const auto u = static_cast<std::size_t>(e.u.index - 1);
    const auto v = static_cast<std::size_t>(e.v.index - 1);
    if (e.is_loop()) {
      ++d.incidence_degree[u];
      ++d.loop_degree[u];
      ++d.total_loops;
    } else {
      ++d.incidence_degree[u];
      ++d.incidence_degree[v];
      const auto lo = std::min(u, v);
      const auto hi = std::max(u, v);
      d.max_multiplicity =
          std::max(d.max_multiplicity, ++pair_count[lo * static_cast<std::size_t>(n) + hi]);
    }
  }
  if (n > 0) {
    d.min_incidence_degree = *std::min_element(d.incidence_degree.begin(), d.incidence_degree.end());
    d.max_loop_degree = *std::max_element(d.loop_degree.begin(), d.loop_degree.end());
  }
  for (int x : d.incidence_degree) d.incidence_sum += x;
  if (d.incidence_sum != 2 * g.edge_count() - d.total_loops) {
    throw InternalError("incidence degree sum differs from 2m - L");
  }
  return d;
}

ComponentSummary components(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  std::vector<int> loops(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges()) {
    const int u = e.u.index - 1;
    const int v = e.v.index - 1;
    if (u == v) {
      ++loops[static_cast<std::size_t>(u)];
    } else {
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
  }

  ComponentSummary out;
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (colour[static_cast<std::size_t>(start)] != -1) continue;
    Component c;
    int endpoint_sum = 0;
    std::queue<int> frontier;
    frontier.push(start);
    colour[static_cast<std::size_t>(start)] = 0;
    while (!frontier.empty()) {
      const int x = frontier.front();
      frontier.pop();
      c.vertices.push_back(VertexId{x + 1});
      const int lx = loops[static_cast<std::size_t>(x)];
      if (lx > 0) c.has_loop = c.has_odd_cycle = true;
      c.edge_count += lx;
      endpoint_sum += static_cast<int>(adj[static_cast<std::size_t>(x)].size());
      for (int y : adj[static_cast<std::size_t>(x)]) {
        auto& cy = colour[static_cast<std::size_t>(y)];
        if (cy == -1) {
          cy = 1 - colour[static_cast<std::size_t>(x)];
          frontier.push(y);
        } else if (cy == colour[static_cast<std::size_t>(x)]) {
          c.has_odd_cycle = true;
        }
      }
    }
    c.edge_count += endpoint_sum / 2;
    std::sort(c.vertices.begin(), c.vertices.end());
    if (c.is_isolated_vertex()) {
      ++out.isolated_count;
    } else if (!c.has_odd_cycle) {
      ++out.bipartite_count;
    }
    out.components.push_back(std::move(c));
  }
  return out;
}

bool is_connected(const MultiGraph& g) { return components(g).components.size() <= 1; }

MultiGraph delete_edges(const MultiGraph& g, const EdgeIdSet& ids) {
  for (auto id : ids) {
    if (!g.has_edge(id)) throw InputError("unknown edge id " + std::to_string(id.value));
  }
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if (!ids.contains(e.id)) kept.push_back(e);
  }
  return MultiGraph(g.vertex_count(), std::move(kept));
}

MultiGraph contract_parallel_class(const MultiGraph& g, VertexId u, VertexId v) {
  check_vertex(g.vertex_count(), u);
  check_vertex(g.vertex_count(), v);
  if (u == v) throw InputError("contraction needs two distinct vertices");
  if (g.multiplicity(u, v) == 0) throw InputError("no edge joins the contracted vertices");
  const VertexId keep = std::min(u, v);
  const VertexId gone = std::max(u, v);
  auto relabel = [&](VertexId x) {
    if (x == gone) return keep;
    if (x > gone) return VertexId{x.index - 1};
    return x;
  };
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    const bool in_class = (e.u == u && e.v == v) || (e.u == v && e.v == u);
    if (in_class) continue;
    edges.push_back(Edge{e.id, relabel(e.u), relabel(e.v)});
  }
  return MultiGraph(g.vertex_count() - 1, std::move(edges));
}

bool edge_in_cycle(const MultiGraph& g, EdgeId id) {
  const Edge& target = g.edge(id);
  if (target.is_loop()) throw InputError("cycle membership is undefined for loops");
  if (g.multiplicity(target.u, target.v) >= 2) return true;
  DisjointSets sets(g.vertex_count());
  for (const auto& e : g.edges()) {
    if (e.id != id) sets.unite(e.u.index - 1, e.v.index - 1);
  }
  return sets.find(target.u.index - 1) == sets.find(target.v.index - 1);
}

int edge_connectivity(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw InputError("edge connectivity needs at least two vertices");
  if (n > kMaxBipartitionVertices) throw SizeError("edge connectivity brute force capped at n = 30");
  if (!is_connected(g)) return 0;
  int best = std::numeric_limits<int>::max();
  // Vertex n is pinned to side 0; every other vertex ranges over both sides.
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t side = 1; side < limit; ++side) {
    int crossing = 0;
    for (const auto& e : g.edges()) {
      const bool su = e.u.index < n && ((side >> (e.u.index - 1)) & 1U);
      const bool sv = e.v.index < n && ((side >> (e.v.index - 1)) & 1U);
      crossing += su != sv;
    }
    best = std::min(best, crossing);
  }
  return best;
}

}  // namespace graphcode
