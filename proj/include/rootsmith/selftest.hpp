#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rootsmith/root_system.hpp"

namespace rootsmith::selftest {

/// Identifier of the sampling generator, reported in self-test output so
/// runs are reproducible across implementations.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64";

/// Seedable random source with an explicitly specified rejection-sampling
/// scheme for bounded draws, independent of any library distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform value in [0, bound) by rejection below the largest multiple
  /// of `bound` that fits in 64 bits.
  std::uint64_t bounded(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t fnv1a(std::string_view s);

/// Distinct positive-root indices, uniform among k-subsets, via a partial
/// Fisher-Yates shuffle driven by Rng::bounded.
std::vector<RootIndex> sample_positive_subset(Rng& rng, const RootSystem& rs,
                                              std::size_t k);

struct TypeReport {
  std::string label;
  std::uint64_t checks = 0;
  std::uint64_t disagreements = 0;
  std::size_t max_obtusify_steps = 0;
  std::vector<std::vector<RootCoords>> offenders;
};

struct Summary {
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  int max_rank = 0;
  std::vector<TypeReport> types;
  std::uint64_t total_checks = 0;
  std::uint64_t disagreements = 0;
  bool pass = true;
};

/// All admissible type labels with rank <= max_rank, sorted.
std::vector<std::string> admissible_labels(int max_rank);

/// For each admissible type up to max_rank: draw `samples` seeded subsets of
/// the positive roots for each size in {n, n+1, n+2} and compare the lattice
/// criterion against the closure oracle; then sweep every standard corank-1
/// parabolic and admissible beta through obtusify, recording the longest
/// word. Per-type sub-seeds are seed XOR fnv1a(label), so results do not
/// depend on the order types are processed in.
Summary run(std::uint64_t seed, std::uint64_t samples, int max_rank);

}  // namespace rootsmith::selftest
