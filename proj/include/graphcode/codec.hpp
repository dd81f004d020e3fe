#pragma once

// Packet pipeline: encode source packets at the relays, erase at random, and
// decode at the terminal by elimination over GF(p).

#include "graphcode/constructions.hpp"
#include "graphcode/finite_field.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace graphcode {

/// n x l symbols; row i is packet p_{i+1}.
using PacketMatrix = FieldMatrix;

/// Row i is encoding f_{i+1}, i.e. edge id i+1.
FieldMatrix encode(const CodingScheme& c, const PacketMatrix& packets, const FieldSpec& f);

struct ReceivedPacket {
  EdgeId id;
  Eigen::Matrix<Residue, 1, Eigen::Dynamic> symbols;
};

using ReceivedBatch = std::vector<ReceivedPacket>;

/// Keeps each encoded row independently with probability p, deterministically in seed.
ReceivedBatch erase(const FieldMatrix& encoded, double p, std::uint64_t seed);

enum class DecodeStatus { ok, undecodable, inconsistent };

struct DecodeResult {
  DecodeStatus status = DecodeStatus::undecodable;
  PacketMatrix packets;                                 // valid when ok
  std::vector<std::vector<VertexId>> unrecoverable;     // components failing the criterion
  [[nodiscard]] bool ok() const noexcept { return status == DecodeStatus::ok; }
};

/// Solves B_H P = M for the surviving subgraph H. The structural criterion
/// runs first and must agree with the elimination result; a disagreement
/// throws InternalError.
DecodeResult decode(const ReceivedBatch& batch, const CodingScheme& c, const FieldSpec& f);

/// Uniformly random n x l packets.
PacketMatrix random_packets(int n, int l, const FieldSpec& f, std::uint64_t seed);

struct SimulationSummary {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t exact_recoveries = 0;  // successes whose output matched bit-for-bit
  double estimate = 0;
  double std_error = 0;
};

/// Repeated erase/decode over fresh erasure patterns of one random packet
/// set. Trial t uses the erasure stream of its block (see random.hpp).
SimulationSummary simulate_codec(const CodingScheme& c, const FieldSpec& f, int symbols, double p,
                                 std::uint64_t trials, std::uint64_t seed, int threads = 0);

// Packet file: header "n l p", then n rows of l residues.
struct PacketFile {
  FieldSpec field;
  PacketMatrix packets;
};

void write_packets(std::ostream& out, const PacketMatrix& packets, const FieldSpec& f);
PacketFile read_packets(std::istream& in);

}  // namespace graphcode
