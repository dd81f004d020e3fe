#include "graphcode/constructions.hpp"

#include "graphcode/errors.hpp"

#include <fstream>
#include <ostream>

namespace graphcode {

Encoding Encoding::pair(VertexId j, VertexId k) {
  if (j == k) throw InputError("pair encoding needs two distinct packets");
  return {j, k};
}

CodingScheme algorithm1(int n, int r, int k, int loops) {
  if (n < 2 || k < 1 || k >= n || n % k != 0) {
    throw InputError("algorithm1: k must be a proper divisor of n with n / k > 1");
  }
  if (r < 1) throw InputError("algorithm1: redundancy must be at least 1");
  if (loops < 0 || loops > n) throw InputError("algorithm1: loop count must lie in 0..n");
  const int s = n / k;
  const int cols = r * s;
  CodingScheme c;
  c.n = n;
  c.encodings.resize(static_cast<std::size_t>(r) * static_cast<std::size_t>(n));
  auto p = [n](long long i) { return VertexId{wrap_index(i, n)}; };
  for (int a = 1; a <= k; ++a) {
    for (int b = 1; b <= cols; ++b) {
      const int column_order = a + (b - 1) * k;
      const long long base = b + static_cast<long long>(a - 1) * s;
      Encoding f;
      if (column_order <= loops) {
        f = Encoding::single(p(base));
      } else if (b <= s - 1) {
        f = Encoding::pair(p(base), p(b + static_cast<long long>(a) * s));
      } else if (b <= cols - 1) {
        f = Encoding::pair(p(base), p(base + 1));
      } else {
        f = Encoding::pair(p(base), p(1 + static_cast<long long>(a - 1) * s));
      }
      c.encodings[static_cast<std::size_t>(b - 1 + (a - 1) * cols)] = f;
    }
  }
  return c;
}

CodingScheme algorithm2(int n, int r) {
  if (n < 3) throw InputError("algorithm2: needs n >= 3");
  if (r < 1) throw InputError("algorithm2: redundancy must be at least 1");
  if (r >= n) throw InputError("algorithm2: r >= n pairs a packet with itself");
  CodingScheme c;
  c.n = n;
  for (long long i = 1; i <= static_cast<long long>(n) * r; ++i) {
    const long long offset = (i + n - 1) / n;
    c.encodings.push_back(Encoding::pair(VertexId{wrap_index(i, n)}, VertexId{wrap_index(i + offset, n)}));
  }
  return c;
}

CodingScheme uncoded(int n, int r) {
  if (n < 1 || r < 1) throw InputError("uncoded: n and r must be at least 1");
  CodingScheme c;
  c.n = n;
  for (int j = 1; j <= n; ++j) {
    for (int copy = 0; copy < r; ++copy) c.encodings.push_back(Encoding::single(VertexId{j}));
  }
  return c;
}

MultiGraph scheme_to_graph(const CodingScheme& c) {
  std::vector<Edge> edges;
  edges.reserve(c.encodings.size());
  int id = 1;
  for (const auto& f : c.encodings) edges.push_back(Edge{EdgeId{id++}, f.first, f.second});
  return MultiGraph(c.n, std::move(edges));
}

CodingScheme graph_to_scheme(const MultiGraph& g) {
  CodingScheme c;
  c.n = g.vertex_count();
  for (const auto& e : g.edges()) {
    c.encodings.push_back(e.is_loop() ? Encoding::single(e.u) : Encoding::pair(e.u, e.v));
  }
  return c;
}

std::vector<std::string> algorithm1_warnings(int n, int r, int k, int loops) {
  std::vector<std::string> out;
  const int s = n / k;
  const bool partial_cut = k >= 2 && r >= 2 && loops >= 2 * r - 1 && k <= loops && loops <= (s - 1) * k;
  if (!partial_cut) {
    out.push_back("b_G = delta_I = 2r-1 is only guaranteed for k, r >= 2, L >= 2r-1 and k <= L <= (n/k - 1)k");
  } else if (!(k >= 3 && (loops == 2 * r - 1 || loops == 2 * r))) {
    out.push_back("u_{2r-1} = 2r is only guaranteed for k >= 3 and L in {2r-1, 2r}");
  }
  if (loops > (s - 1) * k) {
    out.push_back("L > (n/k - 1)k: loop cells overlap the ring columns; outside proven territory");
  }
  return out;
}

std::vector<std::string> algorithm2_warnings(int n, int r) {
  std::vector<std::string> out;
  if (!(n > 3 && n < 8 * r && 4 * r < n)) {
    out.push_back("b_G = 2r and u_{2r} = n are only guaranteed for n > 3 and n/2 < 4r < n");
  }
  return out;
}

std::vector<LabeledGraph> comparison_graphs() {
  std::vector<LabeledGraph> out;
  for (int loops = 0; loops <= 9; ++loops) {
    out.push_back({"G_" + std::to_string(loops), scheme_to_graph(algorithm1(9, 2, 3, loops))});
  }
  out.push_back({"G'", scheme_to_graph(algorithm2(9, 2))});
  out.push_back({"G", scheme_to_graph(uncoded(9, 2))});
  return out;
}

void write_scheme(std::ostream& out, const CodingScheme& c) { write_graph(out, scheme_to_graph(c)); }

CodingScheme read_scheme(std::istream& in) { return graph_to_scheme(read_graph(in)); }

CodingScheme read_scheme_file(const std::string& path) { return graph_to_scheme(read_graph_file(path)); }

}  // namespace graphcode
