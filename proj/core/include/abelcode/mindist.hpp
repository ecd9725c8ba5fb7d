#pragma once

// Minimum distance of linear codes given by a generator matrix.
//
// Methods:
//   Gray      binary Gray-code walk over all 2^k messages (k <= 32)
//   Exhaustive  every message of a q-ary code (q^k small)
//   BrouwerZimmermann  low-weight information vectors over successive
//             systematic generators, stopping once the lower bound meets the
//             best weight found.
// A work budget (number of codewords visited) turns an unfinished run into a
// certified bracket [lower, upper] with a witness of weight upper.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelcode/matrix.hpp"

namespace abelcode {

enum class DistanceMethod { Auto, Gray, Exhaustive, BrouwerZimmermann };

const char* method_name(DistanceMethod method);

struct DistanceOptions {
  DistanceMethod method = DistanceMethod::Auto;
  /// Maximum number of codewords visited; 0 means unlimited.
  u64 budget = 0;
  /// Worker threads for the Gray walk; 0 means hardware concurrency.
  unsigned threads = 0;
  /// Decide only whether d >= target: stop once that is settled.
  std::optional<u64> target;
};

/// Largest k that Auto sends to the Gray walk.
inline constexpr std::size_t kAutoGrayMaxK = 28;
/// Largest k the Gray walk accepts.
inline constexpr std::size_t kGrayMaxK = 32;
/// Largest q^k that Auto sends to the exhaustive q-ary walk.
inline constexpr u64 kAutoExhaustiveMax = u64{1} << 22;

struct DistanceResult {
  u64 lower = 0;
  u64 upper = 0;
  std::vector<Sym> witness;  // a codeword of weight upper
  DistanceMethod method = DistanceMethod::Auto;
  u64 work = 0;              // codewords visited

  bool exact() const { return lower == upper; }
};

/// Rows of g must be linearly independent (k >= 1).
DistanceResult min_distance(const MatrixGF& g, const DistanceOptions& options = {});

/// Smallest nonzero codeword of the null space of h whose support has at most
/// max_weight positions, found by testing column subsets of h for dependence.
/// Returns nullopt when no such codeword exists.
std::optional<std::vector<Sym>> low_weight_codeword(const MatrixGF& h, std::size_t max_weight);

}  // namespace abelcode
