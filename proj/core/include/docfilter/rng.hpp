#pragma once

#include <cstdint>
#include <random>

namespace docfilter {

/// Deterministic random stream used everywhere randomness is needed.
///
/// The engine is std::mt19937_64, whose output sequence is pinned by the
/// C++ standard, and the derived draws (uniform doubles, Box-Muller
/// normals, rejection-sampled bounded integers) are implemented here rather
/// than through std:: distributions, whose algorithms are
/// implementation-defined. Equal seeds therefore give bit-equal streams on
/// every platform. The algorithm name is reported in bench output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1), 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal deviate via the basic Box-Muller transform.
  /// Consumes exactly two engine draws per call (no cached spare).
  double normal();

  /// Unbiased integer in [0, n) by rejection sampling. n must be > 0.
  std::uint64_t below(std::uint64_t n);

  std::uint64_t raw() { return engine_(); }

  static constexpr const char* algorithm() { return "mt19937_64/box-muller"; }

 private:
  std::mt19937_64 engine_;
};

/// Mixes up to three values into one seed (splitmix64 finalizer rounds),
/// used to derive independent per-cell streams in the bench harness.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0);

}  // namespace docfilter
