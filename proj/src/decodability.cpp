#include "graphcode/decodability.hpp"

#include "graphcode/errors.hpp"

#include <algorithm>
#include <string>

namespace graphcode {

ParityClass parse_parity(std::string_view text) {
  if (text == "even") return ParityClass::even;
  if (text == "odd") return ParityClass::odd;
  throw InputError("parity must be even or odd, got " + std::string(text));
}

FieldMatrix incidence_matrix(const MultiGraph& h) {
  FieldMatrix b = FieldMatrix::Zero(h.edge_count(), h.vertex_count());
  Eigen::Index row = 0;
  for (const auto& e : h.edges()) {
    b(row, e.u.index - 1) = 1;
    b(row, e.v.index - 1) = 1;
    ++row;
  }
  return b;
}

bool is_decodable_structural(const MultiGraph& h, ParityClass parity) {
  const auto summary = components(h);
  return std::all_of(summary.components.begin(), summary.components.end(), [&](const Component& c) {
    return parity == ParityClass::even ? c.has_loop : c.has_odd_cycle;
  });
}

bool is_decodable_rank(const MultiGraph& h, const FieldSpec& f) {
  return rank(incidence_matrix(h), f) == h.vertex_count();
}

SubgraphTester::SubgraphTester(const MultiGraph& g, ParityClass parity)
    : n_(g.vertex_count()),
      parity_(parity),
      parent_(static_cast<std::size_t>(n_)),
      offset_(static_cast<std::size_t>(n_)),
      covered_(static_cast<std::size_t>(n_)) {
  ends_.reserve(static_cast<std::size_t>(g.edge_count()));
  for (const auto& e : g.edges()) ends_.emplace_back(e.u.index - 1, e.v.index - 1);
}

void SubgraphTester::reset() {
  for (int i = 0; i < n_; ++i) {
    const auto k = static_cast<std::size_t>(i);
    parent_[k] = i;
    offset_[k] = 0;
    covered_[k] = 0;
  }
}

std::pair<int, int> SubgraphTester::find(int x) {
  int parity = 0;
  int root = x;
  while (parent_[static_cast<std::size_t>(root)] != root) {
    parity ^= offset_[static_cast<std::size_t>(root)];
    root = parent_[static_cast<std::size_t>(root)];
  }
  // Path compression, keeping offsets relative to the new parent (the root).
  int acc = parity;
  while (parent_[static_cast<std::size_t>(x)] != x) {
    const auto k = static_cast<std::size_t>(x);
    const int next = parent_[k];
    const int old = offset_[k];
    parent_[k] = root;
    offset_[k] = acc;
    acc ^= old;
    x = next;
  }
  return {root, parity};
}

void SubgraphTester::add_edge(std::size_t i) {
  const auto [u, v] = ends_[i];
  const auto [ru, pu] = find(u);
  if (u == v) {
    covered_[static_cast<std::size_t>(ru)] = 1;
    return;
  }
  const auto [rv, pv] = find(v);
  if (ru == rv) {
    if (parity_ == ParityClass::odd && pu == pv) covered_[static_cast<std::size_t>(ru)] = 1;
    return;
  }
  parent_[static_cast<std::size_t>(ru)] = rv;
  offset_[static_cast<std::size_t>(ru)] = pu ^ pv ^ 1;
  covered_[static_cast<std::size_t>(rv)] |= covered_[static_cast<std::size_t>(ru)];
}

bool SubgraphTester::all_covered() {
  for (int i = 0; i < n_; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (parent_[k] == i && !covered_[k]) return false;
  }
  return true;
}

bool SubgraphTester::decodable(std::uint64_t kept) {
  reset();
  while (kept != 0) {
    const auto i = static_cast<std::size_t>(__builtin_ctzll(kept));
    kept &= kept - 1;
    add_edge(i);
  }
  return all_covered();
}

}  // namespace graphcode
