#include "graphcode/bounds.hpp"

#include "graphcode/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ostream>

namespace graphcode {

namespace {

constexpr int kMaxCutVertices = 30;

Rational floor_of(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return Rational(q);
}

Rational ceil_of(const Rational& r) { return -floor_of(-r); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

/// floor(a8 / 8 - (sqrt(8 * mm + 1) - 1) / 8) exactly, where a8 = 8A is an integer.
long long floor_edwards(long long a8, long long mm) {
  const long long w = a8 + 1;
  const long long disc = 8 * mm + 1;
  long long t = w >= 0 ? w / 8 : -((-w + 7) / 8);
  while (true) {
    const long long rest = w - 8 * t;
    if (rest >= 0 && rest * rest >= disc) return t;
    --t;
  }
}

BoundCheck upper(std::string id, const Rational& raw, const Rational& floored, int b) {
  BoundCheck c;
  c.lemma_id = std::move(id);
  c.kind = BoundKind::upper_b;
  c.hypothesis_ok = true;
  c.raw = to_double(raw);
  c.value = floored;
  c.exact = b;
  c.satisfied = Rational(b) <= floored;
  return c;
}

BoundCheck skipped(std::string id, BoundKind kind, std::string why) {
  BoundCheck c;
  c.lemma_id = std::move(id);
  c.kind = kind;
  c.hypothesis_ok = false;
  c.note = std::move(why);
  return c;
}

BoundCheck lower(std::string id, BoundKind kind, const Rational& bound, const BigInt& exact) {
  BoundCheck c;
  c.lemma_id = std::move(id);
  c.kind = kind;
  c.hypothesis_ok = true;
  c.raw = to_double(bound);
  c.value = bound;
  c.exact = exact;
  c.satisfied = bound <= Rational(exact);
  return c;
}

}  // namespace

bool BoundsReport::all_satisfied() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.satisfied; });
}

MaxCutResult max_cut(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n > kMaxCutVertices) throw SizeError("max_cut brute force capped at n = 30");
  MaxCutResult best;
  if (n <= 1) return best;
  // Vertex n stays on side 0.
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  std::uint64_t best_side = 0;
  for (std::uint64_t side = 0; side < limit; ++side) {
    int crossing = 0;
    for (const auto& e : g.edges()) {
      if (e.is_loop()) continue;
      const bool su = e.u.index < n && ((side >> (e.u.index - 1)) & 1U);
      const bool sv = e.v.index < n && ((side >> (e.v.index - 1)) & 1U);
      crossing += su != sv;
    }
    if (crossing > best.gamma) {
      best.gamma = crossing;
      best_side = side;
    }
  }
  for (int v = 1; v < n; ++v) {
    if ((best_side >> (v - 1)) & 1U) best.side.push_back(VertexId{v});
  }
  return best;
}

int min_cut_size(const DeletionSpectrum& s) {
  for (int x = 0; x <= s.m; ++x) {
    if (s.undecodable(x) > 0) return x;
  }
  throw InternalError("spectrum has no undecodable deletion");
}

UndecodabilityBoundInputs undecodability_inputs(const MultiGraph& g, int exact_b) {
  const auto d = degree_profile(g);
  UndecodabilityBoundInputs in;
  in.theta = static_cast<long long>(exact_b) * (g.vertex_count() + 1) + g.vertex_count() -
             2LL * g.edge_count();
  for (int deg : d.incidence_degree) {
    if (deg == exact_b) ++in.alpha;
    if (deg >= exact_b + 2) ++in.beta;
  }
  in.mu = std::max(d.max_multiplicity + 1, d.max_loop_degree + 1);
  return in;
}

BoundsReport b_upper_bounds(const MultiGraph& g, ParityClass parity) {
  return b_upper_bounds(g, parity, min_dcut(g, parity).size);
}

BoundsReport b_upper_bounds(const MultiGraph& g, ParityClass parity, int b) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const auto d = degree_profile(g);
  const bool decodable = is_decodable_structural(g, parity);
  BoundsReport report;
  report.parity = parity;
  report.exact_b = b;
  auto& out = report.checks;

  if (parity == ParityClass::even) {
    const Rational mld = std::min(d.total_loops, d.min_incidence_degree);
    out.push_back(upper("min_L_delta", mld, mld, b));
    if (decodable) {
      const Rational a = Rational(2 * m, n) - 1;
      out.push_back(upper("edge_lem_a", a, floor_of(a), b));
      // n b_G <= S_I < 2m only gives b_G < 2m/n; the floor above can be smaller.
      const Rational t = Rational(2 * m, n);
      out.push_back(upper("edge_lem_a_strict", t, ceil_of(t) - 1, b));
      const Rational c = Rational(2 * m, n + 1);
      out.push_back(upper("edge_lem_b", c, floor_of(c), b));
    } else {
      out.push_back(skipped("edge_lem_a", BoundKind::upper_b, "graph is not decodable"));
      out.push_back(skipped("edge_lem_a_strict", BoundKind::upper_b, "graph is not decodable"));
      out.push_back(skipped("edge_lem_b", BoundKind::upper_b, "graph is not decodable"));
    }
    if (n < 2) {
      out.push_back(skipped("lambda_lower", BoundKind::lower_b, "edge connectivity needs n >= 2"));
    } else {
      const int lambda = edge_connectivity(g);
      if (d.total_loops >= lambda) {
        out.push_back(lower("lambda_lower", BoundKind::lower_b, Rational(lambda), BigInt(b)));
      } else {
        out.push_back(skipped("lambda_lower", BoundKind::lower_b, "L_G < lambda(G)"));
      }
    }
    return report;
  }

  const Rational delta = d.min_incidence_degree;
  out.push_back(upper("delta_I", delta, delta, b));
  const auto cut = max_cut(g);
  const Rational mc = m - cut.gamma;
  out.push_back(upper("m_minus_maxcut", mc, mc, b));

  const long long plain = m - d.total_loops;
  const bool connected = is_connected(g);
  // Loop-free reduction: b <= m - Gamma <= m - (m'/2 + ...), with m' non-loop edges.
  auto edwards_general = [&](const std::string& id, long long a8) {
    const double raw = static_cast<double>(a8) / 8.0 - (std::sqrt(8.0 * static_cast<double>(plain) + 1.0) - 1.0) / 8.0;
    BoundCheck c = upper(id, Rational(0), Rational(floor_edwards(a8, plain)), b);
    c.raw = raw;
    return c;
  };
  auto edwards_connected = [&](const std::string& id, const Rational& a) {
    const Rational raw = a - Rational(n - 1, 4);
    return upper(id, raw, floor_of(raw), b);
  };
  if (d.total_loops == 0) {
    out.push_back(edwards_general("edwards_general", 4LL * m));
    if (connected) {
      out.push_back(edwards_connected("edwards_connected", Rational(m, 2)));
    } else {
      out.push_back(skipped("edwards_connected", BoundKind::upper_b, "graph is not connected"));
    }
  } else {
    out.push_back(skipped("edwards_general", BoundKind::upper_b, "graph has loops; see edwards_general_reduced"));
    out.push_back(skipped("edwards_connected", BoundKind::upper_b, "graph has loops; see edwards_connected_reduced"));
    out.push_back(edwards_general("edwards_general_reduced", 8LL * m - 4LL * plain));
    if (connected) {
      out.push_back(edwards_connected("edwards_connected_reduced", Rational(m) - Rational(plain, 2)));
    } else {
      out.push_back(skipped("edwards_connected_reduced", BoundKind::upper_b, "graph is not connected"));
    }
  }
  const Rational tmn = Rational(2 * m, n);
  out.push_back(upper("two_m_over_n", tmn, floor_of(tmn), b));
  return report;
}

std::vector<BoundCheck> u_lower_bounds(const MultiGraph& g, ParityClass parity,
                                       const DeletionSpectrum& exact) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const auto d = degree_profile(g);
  const bool decodable = exact.decodable(0) == 1;
  std::vector<BoundCheck> out;

  if (parity == ParityClass::odd) {
    const std::string id = "u_2r_regular";
    if (!decodable) {
      out.push_back(skipped(id, BoundKind::lower_u, "graph is not decodable"));
    } else if (m % n != 0 || m / n < 2 || n < 4) {
      out.push_back(skipped(id, BoundKind::lower_u, "needs m = rn with r >= 2 and n >= 4"));
    } else if (d.min_incidence_degree != 2 * (m / n)) {
      out.push_back(skipped(id, BoundKind::lower_u, "needs delta_I = 2r"));
    } else {
      out.push_back(lower(id, BoundKind::lower_u, Rational(n), exact.undecodable(2 * (m / n))));
    }
    return out;
  }

  if (!decodable) {
    out.push_back(skipped("u_b_lower", BoundKind::lower_u, "graph is not decodable"));
  } else if (n < 2) {
    // The extra loop-deletion cut must differ from every vertex-isolating cut,
    // which fails when a single vertex carries all loops.
    out.push_back(skipped("u_b_lower", BoundKind::lower_u, "needs n >= 2"));
  } else {
    const int b = min_cut_size(exact);
    const auto in = undecodability_inputs(g, b);
    out.push_back(lower("alpha_lower", BoundKind::lower_count, Rational(in.theta), BigInt(in.alpha)));
    out.push_back(lower("u_b_lower", BoundKind::lower_u, Rational(in.theta + 1), exact.undecodable(b)));

    const bool tight = exact.undecodable(b) == in.theta + 1;
    const int y_max = b - std::max(d.max_multiplicity, d.max_loop_degree) - 1;
    if (!tight) {
      out.push_back(skipped("u_b_plus_y", BoundKind::lower_u, "u_b exceeds b(n+1)+n-2m+1"));
      out.push_back(skipped("propagation_corollary", BoundKind::lower_u, "u_b exceeds b(n+1)+n-2m+1"));
    } else {
      if (y_max < 1) {
        out.push_back(skipped("u_b_plus_y", BoundKind::lower_u, "no y with 1 <= y <= b - max(Omega, Delta_L) - 1"));
      }
      for (int y = 1; y <= y_max && b + y <= m; ++y) {
        const BigInt bound = BigInt(in.theta + 1) * binomial(m - b, y) +
                             BigInt(n - in.theta) * binomial(m - b - 1, y - 1);
        out.push_back(lower("u_b_plus_y[y=" + std::to_string(y) + "]", BoundKind::lower_u,
                            Rational(bound), exact.undecodable(b + y)));
      }
      const int x0 = 2 * b - in.mu;
      if (x0 < 0 || x0 > m) {
        out.push_back(skipped("propagation_corollary", BoundKind::lower_u, "2b - mu outside 0..m"));
      }
      for (int z = 0; x0 >= 0 && x0 + z <= m; ++z) {
        const Rational bound = Rational(exact.undecodable(x0) * binomial(m - x0, z), binomial(x0 + z, z));
        out.push_back(lower("propagation_corollary[z=" + std::to_string(z) + "]", BoundKind::lower_u, bound,
                            exact.undecodable(x0 + z)));
      }
    }
  }

  for (int x = 0; x <= m; ++x) {
    for (int z = 1; x + z <= m; ++z) {
      const Rational bound = Rational(exact.undecodable(x) * binomial(m - x, z), binomial(x + z, z));
      out.push_back(lower("propagation[x=" + std::to_string(x) + ",z=" + std::to_string(z) + "]",
                          BoundKind::lower_u, bound, exact.undecodable(x + z)));
    }
  }
  return out;
}

VerificationReport verify_all(const MultiGraph& g, const EnumerationOptions& options) {
  VerificationReport report;
  for (ParityClass parity : {ParityClass::even, ParityClass::odd}) {
    const auto spectrum = deletion_spectrum(g, parity, options);
    const int b = min_cut_size(spectrum);
    if (min_dcut(g, parity).size != b) {
      throw InternalError("min_dcut disagrees with the exhaustive spectrum");
    }
    auto checks = b_upper_bounds(g, parity, b).checks;
    auto lower = u_lower_bounds(g, parity, spectrum);
    checks.insert(checks.end(), std::make_move_iterator(lower.begin()), std::make_move_iterator(lower.end()));
    const std::string prefix = std::string(to_string(parity)) + ":";
    for (auto& c : checks) {
      c.lemma_id = prefix + c.lemma_id;
      if (!c.satisfied) report.failures.push_back(c.lemma_id);
      report.checks.push_back(std::move(c));
    }
  }
  return report;
}

std::string format_rational(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

void write_bounds_csv(std::ostream& out, const std::vector<BoundCheck>& checks) {
  out << "lemma_id,hypothesis_ok,bound_value,exact_value,satisfied\n";
  for (const auto& c : checks) {
    out << c.lemma_id << ',' << (c.hypothesis_ok ? "true" : "false") << ',';
    if (c.hypothesis_ok) out << format_rational(c.value) << ',' << c.exact;
    else out << ',';
    out << ',' << (c.satisfied ? "true" : "false") << '\n';
  }
}

}  // namespace graphcode
