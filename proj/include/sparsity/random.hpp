#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace sparsity {

/// Identifier recorded in outputs of randomized operations. Bump it whenever
/// the sampling procedure below changes.
inline constexpr const char* kRngAlgorithm = "mt19937_64/splitmix64-split/v1";

/// Seeded 64-bit generator. Only raw engine outputs are used (no standard
/// distributions, whose algorithms are implementation-defined), so sequences
/// are reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, bound) by rejection sampling; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform double in [0, 1) built from the top 53 bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return unit() < p; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    // Fisher-Yates from the back.
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Seed for the index-th independent stream derived from `seed`:
/// splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15).
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace sparsity
