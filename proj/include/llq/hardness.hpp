#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "llq/equation.hpp"
#include "llq/solver.hpp"

namespace llq {

struct invalid_instance : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct tiling_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// 3-partition instance: 3k unary-scale positive integers with common triple
/// target T = sum/k and the strict window T/4 < s_i < T/2.
struct TPartInstance {
  std::vector<long long> values;  // s_1..s_{3k}
  long long k = 0;
  long long target = 0;  // T
};

/// Checks divisibility and the window; throws invalid_instance.
TPartInstance validate_3part(std::span<const long long> values, long long k);

/// Spherical equation  prod_i z_i^-1 c_{s_i} z_i * z^-1 c^-1 z = 1  where
/// c_y lights lamps {0..y-1} and c lights k clusters of T lamps separated by
/// single gaps; solvable iff the instance is a positive one.
QuadEquation encode_3part(const TPartInstance& inst);

/// Exhaustive partition into triples summing to T; value triples, or nullopt.
std::optional<std::vector<std::array<long long, 3>>> brute_force_3part(
    const TPartInstance& inst);

/// Reads a partition back off a shift certificate for the encoded equation:
/// the shifted interval supports tile the clusters of c. Throws tiling_error
/// when they do not (which would indicate a solver bug).
std::vector<std::array<long long, 3>> decode_3part(const TPartInstance& inst,
                                                   const ShiftCertificate& cert);

/// Seeded generator for benchmark suites: k triples summing to a common T.
TPartInstance random_3part(long long k, long long target, std::uint64_t seed);

/// Instance text: `k=<int>` line, then comma-separated values.
TPartInstance parse_instance_text(std::string_view text);
std::string format_instance(const TPartInstance& inst);

/// Marker comment embedded by the encoder so solve reports can decode
/// partitions; returns the instance when `comments` carries one.
std::string instance_marker(const TPartInstance& inst);
std::optional<TPartInstance> find_instance_marker(std::span<const std::string> comments);

}  // namespace llq
