#pragma once

// Coding-scheme generators and the scheme <-> graph bijection.

#include "graphcode/multigraph.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace graphcode {

/// f = p_first (single) or f = p_first + p_second (pair, second != first).
struct Encoding {
  VertexId first;
  VertexId second;

  [[nodiscard]] static Encoding single(VertexId j) { return {j, j}; }
  /// Throws InputError when j == k.
  [[nodiscard]] static Encoding pair(VertexId j, VertexId k);

  [[nodiscard]] bool is_single() const noexcept { return first == second; }
  friend bool operator==(const Encoding&, const Encoding&) = default;
};

struct CodingScheme {
  int n = 0;
  std::vector<Encoding> encodings;  // f_1..f_m

  [[nodiscard]] int size() const noexcept { return static_cast<int>(encodings.size()); }
  [[nodiscard]] double redundancy() const noexcept {
    return n == 0 ? 0.0 : static_cast<double>(encodings.size()) / n;
  }
  friend bool operator==(const CodingScheme&, const CodingScheme&) = default;
};

/// Reduces a packet subscript into 1..n.
[[nodiscard]] constexpr int wrap_index(long long i, int n) noexcept {
  return static_cast<int>(((i - 1) % n + n) % n) + 1;
}

/// k x rs table over n = sk packets (s > 1), the first L cells in column-wise
/// order carrying uncoded packets and the rest ring / cross pairs.
CodingScheme algorithm1(int n, int r, int k, int loops);

/// f_i = p_i + p_{i + ceil(i/n)} for i = 1..nr. Requires n >= 3 and r < n.
CodingScheme algorithm2(int n, int r);

/// r copies of every packet, vertex-major.
CodingScheme uncoded(int n, int r);

/// Edge i is encoding i.
MultiGraph scheme_to_graph(const CodingScheme& c);
/// Encodings follow the edge order of g.
CodingScheme graph_to_scheme(const MultiGraph& g);

/// Messages for construction parameters outside the territory where the
/// optimality results for each algorithm are proved. Empty when all hold.
std::vector<std::string> algorithm1_warnings(int n, int r, int k, int loops);
std::vector<std::string> algorithm2_warnings(int n, int r);

struct LabeledGraph {
  std::string label;
  MultiGraph graph;
};

/// The twelve comparison graphs for n = 9, r = 2: G_0..G_9 from algorithm1
/// with k = 3 and L = 0..9, G' from algorithm2, and the uncoded baseline G.
std::vector<LabeledGraph> comparison_graphs();

// Scheme text format, identical to the graph format: "n m", then "j" or "j k".
void write_scheme(std::ostream& out, const CodingScheme& c);
CodingScheme read_scheme(std::istream& in);
CodingScheme read_scheme_file(const std::string& path);

}  // namespace graphcode
