#include "graphcode/codec.hpp"

#include "graphcode/decodability.hpp"
#include "graphcode/errors.hpp"
#include "graphcode/parallel.hpp"
#include "graphcode/random.hpp"

#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>

namespace graphcode {

namespace {

// Stream index reserved for packet contents; erasure blocks use 0, 1, 2, ...
constexpr std::uint64_t kPacketStream = ~std::uint64_t{0};

}  // namespace

FieldMatrix encode(const CodingScheme& c, const PacketMatrix& packets, const FieldSpec& f) {
  if (packets.rows() != c.n) throw InputError("packet count differs from the scheme's n");
  FieldMatrix out(c.size(), packets.cols());
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    const auto& enc = c.encodings[static_cast<std::size_t>(i)];
    const Eigen::Index j = enc.first.index - 1;
    if (enc.is_single()) {
      out.row(i) = packets.row(j);
      continue;
    }
    const Eigen::Index k = enc.second.index - 1;
    for (Eigen::Index col = 0; col < packets.cols(); ++col) {
      out(i, col) = f.add(packets(j, col), packets(k, col));
    }
  }
  return out;
}

ReceivedBatch erase(const FieldMatrix& encoded, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("probability must lie in [0, 1]");
  RandomStream rng(seed, 0);
  ReceivedBatch batch;
  for (Eigen::Index i = 0; i < encoded.rows(); ++i) {
    if (rng.bernoulli(p)) batch.push_back({EdgeId{static_cast<int>(i) + 1}, encoded.row(i)});
  }
  return batch;
}

DecodeResult decode(const ReceivedBatch& batch, const CodingScheme& c, const FieldSpec& f) {
  std::set<EdgeId> seen;
  std::vector<Edge> edges;
  Eigen::Index symbols = batch.empty() ? 0 : batch.front().symbols.cols();
  for (const auto& pkt : batch) {
    if (pkt.id.value < 1 || pkt.id.value > c.size()) {
      throw InputError("received packet id " + std::to_string(pkt.id.value) + " is not in the scheme");
    }
    if (!seen.insert(pkt.id).second) throw InputError("duplicate received packet id");
    if (pkt.symbols.cols() != symbols) throw InputError("received packets differ in length");
    const auto& enc = c.encodings[static_cast<std::size_t>(pkt.id.value - 1)];
    edges.push_back(Edge{pkt.id, enc.first, enc.second});
  }
  const MultiGraph survivors(c.n, std::move(edges));
  const ParityClass parity = parity_of(f);
  const bool structural = is_decodable_structural(survivors, parity);

  FieldMatrix rhs(static_cast<Eigen::Index>(batch.size()), symbols);
  for (std::size_t i = 0; i < batch.size(); ++i) rhs.row(static_cast<Eigen::Index>(i)) = batch[i].symbols;
  const auto solved = solve(incidence_matrix(survivors), rhs, f);

  DecodeResult result;
  if (solved.status == SolveStatus::inconsistent) {
    result.status = DecodeStatus::inconsistent;
    return result;
  }
  if (solved.ok() != structural) {
    throw InternalError("elimination and the structural criterion disagree on decodability");
  }
  if (solved.ok()) {
    result.status = DecodeStatus::ok;
    result.packets = solved.solution;
    return result;
  }
  result.status = DecodeStatus::undecodable;
  for (const auto& comp : components(survivors).components) {
    const bool fine = parity == ParityClass::even ? comp.has_loop : comp.has_odd_cycle;
    if (!fine) result.unrecoverable.push_back(comp.vertices);
  }
  return result;
}

PacketMatrix random_packets(int n, int l, const FieldSpec& f, std::uint64_t seed) {
  if (n < 1 || l < 1) throw InputError("packet matrix dimensions must be positive");
  RandomStream rng(seed, kPacketStream);
  PacketMatrix p(n, l);
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    for (Eigen::Index j = 0; j < p.cols(); ++j) p(i, j) = static_cast<Residue>(rng.next() % f.modulus());
  }
  return p;
}

SimulationSummary simulate_codec(const CodingScheme& c, const FieldSpec& f, int symbols, double p,
                                 std::uint64_t trials, std::uint64_t seed, int threads) {
  if (trials < 1) throw InputError("trials must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("probability must lie in [0, 1]");
  const PacketMatrix packets = random_packets(c.n, symbols, f, seed);
  const FieldMatrix encoded = encode(c, packets, f);
  const std::uint64_t blocks = (trials + kTrialsPerStream - 1) / kTrialsPerStream;
  std::vector<std::uint64_t> wins(blocks, 0);
  std::vector<std::uint64_t> exact(blocks, 0);

  parallel_blocks(blocks, threads, [&](int, std::uint64_t block) {
    RandomStream rng(seed, block);
    const std::uint64_t begin = block * kTrialsPerStream;
    const std::uint64_t end = std::min(trials, begin + kTrialsPerStream);
    for (std::uint64_t t = begin; t < end; ++t) {
      ReceivedBatch batch;
      for (Eigen::Index i = 0; i < encoded.rows(); ++i) {
        if (rng.bernoulli(p)) batch.push_back({EdgeId{static_cast<int>(i) + 1}, encoded.row(i)});
      }
      const auto result = decode(batch, c, f);
      if (result.ok()) {
        ++wins[block];
        if (result.packets == packets) ++exact[block];
      }
    }
  });

  SimulationSummary s;
  s.trials = trials;
  s.successes = std::accumulate(wins.begin(), wins.end(), std::uint64_t{0});
  s.exact_recoveries = std::accumulate(exact.begin(), exact.end(), std::uint64_t{0});
  s.estimate = static_cast<double>(s.successes) / static_cast<double>(trials);
  s.std_error = std::sqrt(s.estimate * (1.0 - s.estimate) / static_cast<double>(trials));
  return s;
}

void write_packets(std::ostream& out, const PacketMatrix& packets, const FieldSpec& f) {
  out << packets.rows() << ' ' << packets.cols() << ' ' << f.modulus() << '\n';
  for (Eigen::Index i = 0; i < packets.rows(); ++i) {
    for (Eigen::Index j = 0; j < packets.cols(); ++j) out << (j ? " " : "") << packets(i, j);
    out << '\n';
  }
}

PacketFile read_packets(std::istream& in) {
  long long n = 0;
  long long l = 0;
  long long p = 0;
  if (!(in >> n >> l >> p) || n < 1 || l < 1 || p < 2 || p > 0x7fffffffLL) {
    throw InputError("packet header must be \"n l p\" with positive dimensions");
  }
  PacketFile file{FieldSpec(static_cast<std::uint32_t>(p)), PacketMatrix(n, l)};
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < l; ++j) {
      long long x = -1;
      if (!(in >> x)) throw InputError("packet file ends early");
      if (x < 0 || x >= p) throw InputError("symbol out of range 0..p-1");
      file.packets(i, j) = static_cast<Residue>(x);
    }
  }
  return file;
}

}  // namespace graphcode
