#include "graphcode/errors.hpp"
#include "graphcode/multigraph.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace graphcode {

MultiGraph read_graph(std::istream& in) {
  std::string line;
  int n = -1;
  int m = -1;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<long long> values;
    long long x = 0;
    while (fields >> x) values.push_back(x);
    if (!fields.eof()) {
      throw InputError("line " + std::to_string(line_no) + ": expected integers");
    }
    if (values.empty()) continue;
    if (n < 0) {
      if (values.size() != 2) throw InputError("header must be \"n m\"");
      n = static_cast<int>(values[0]);
      m = static_cast<int>(values[1]);
      if (n < 1 || m < 0) throw InputError("header needs n >= 1 and m >= 0");
      continue;
    }
    if (values.size() == 1) {
      edges.emplace_back(static_cast<int>(values[0]), static_cast<int>(values[0]));
    } else if (values.size() == 2) {
      edges.emplace_back(static_cast<int>(values[0]), static_cast<int>(values[1]));
    } else {
      throw InputError("line " + std::to_string(line_no) + ": expected \"u v\" or \"u\"");
    }
  }
  if (n < 0) throw InputError("missing header");
  if (static_cast<int>(edges.size()) != m) {
    throw InputError("header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return build(n, edges);
}

MultiGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const MultiGraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) {
    if (e.is_loop()) {
      out << e.u.index << '\n';
    } else {
      out << e.u.index << ' ' << e.v.index << '\n';
    }
  }
}

}  // namespace graphcode
