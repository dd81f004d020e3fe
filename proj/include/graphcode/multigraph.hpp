#pragma once

// Labeled undirected multigraph with loops. Vertex i stands for source
// packet p_i; a loop at j is the uncoded transmission of p_j and a non-loop
// edge (j, k) is the transmission of p_j + p_k.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace graphcode {

/// 1-based vertex index.
struct VertexId {
  int index = 1;
  constexpr auto operator<=>(const VertexId&) const = default;
};

/// Stable edge label; survives deletion so that deletion sets are canonical.
struct EdgeId {
  int value = 1;
  constexpr auto operator<=>(const EdgeId&) const = default;
};

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;

  [[nodiscard]] bool is_loop() const noexcept { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

using EdgeIdSet = std::set<EdgeId>;

/// Immutable once constructed; all operations below return new graphs.
class MultiGraph {
 public:
  MultiGraph() = default;

  /// Validates endpoints and id uniqueness. Edges keep the given order.
  MultiGraph(int n, std::vector<Edge> edges);

  [[nodiscard]] int vertex_count() const noexcept { return n_; }
  [[nodiscard]] int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
  [[nodiscard]] const Edge& edge(EdgeId id) const;
  [[nodiscard]] bool has_edge(EdgeId id) const noexcept;

  /// Number of edges joining u and v (loops at u when u == v).
  [[nodiscard]] int multiplicity(VertexId u, VertexId v) const noexcept;
  [[nodiscard]] int loop_count() const noexcept;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Builds a graph with edge ids 1..m in input order.
MultiGraph build(int n, std::span<const std::pair<int, int>> edge_list);
MultiGraph build(int n, std::initializer_list<std::pair<int, int>> edge_list);

struct DegreeProfile {
  std::vector<int> incidence_degree;  // d_I(v), loops counted once
  std::vector<int> loop_degree;       // d_L(v)
  int min_incidence_degree = 0;       // delta_I
  int max_loop_degree = 0;            // Delta_L
  int total_loops = 0;                // L_G
  int incidence_sum = 0;              // S_I = 2m - L_G
  int max_multiplicity = 0;           // Omega, non-loop classes only
};

DegreeProfile degree_profile(const MultiGraph& g);

struct Component {
  std::vector<VertexId> vertices;
  int edge_count = 0;
  bool has_loop = false;
  bool has_odd_cycle = false;  // a loop is a length-1 odd cycle
  [[nodiscard]] bool is_isolated_vertex() const noexcept { return edge_count == 0; }
};

struct ComponentSummary {
  std::vector<Component> components;
  int bipartite_count = 0;  // s: loop-free bipartite components with at least one edge
  int isolated_count = 0;   // t
};

/// Components by walk-connectivity; odd cycles by breadth-first 2-colouring.
ComponentSummary components(const MultiGraph& g);

[[nodiscard]] bool is_connected(const MultiGraph& g);

/// Keeps all n vertices and the surviving edge ids. Unknown id -> InputError.
MultiGraph delete_edges(const MultiGraph& g, const EdgeIdSet& ids);

/// Removes every (u, v) edge and identifies u with v. The merged vertex takes
/// the smaller index; later indices shift down by one.
MultiGraph contract_parallel_class(const MultiGraph& g, VertexId u, VertexId v);

/// True iff the non-loop edge lies on a cycle. A parallel class of
/// multiplicity >= 2 always counts (two parallel edges form a 2-cycle).
bool edge_in_cycle(const MultiGraph& g, EdgeId id);

/// Exact lambda(G) by scanning all bipartitions; 0 for disconnected graphs.
int edge_connectivity(const MultiGraph& g);

// Text format: header "n m", then one edge per line, "u v" or "u" for a loop.
MultiGraph read_graph(std::istream& in);
MultiGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const MultiGraph& g);

}  // namespace graphcode
