#pragma once

#include <cstdint>

namespace mrisamp {

/// Deterministic 64-bit RNG (xoshiro256++ seeded via SplitMix64).
///
/// The generator is self-contained so that a given seed produces the same
/// stream on every platform and build. Single-owner mutable state: use one
/// instance per thread of work.
class Rng {
public:
  explicit Rng(std::uint64_t seed);

  /// Derive an independent stream from (seed, stream). Used to give each
  /// epoch/image/step its own reproducible generator.
  static Rng derive(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();

  /// Uniform in (0, 1); never returns 0 (safe under log()).
  double uniform_pos();

  /// Standard normal via Marsaglia polar method.
  double normal();

  /// Standard Gumbel(0, 1): -log(-log(U)).
  double gumbel();

private:
  std::uint64_t state_[4];
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

} // namespace mrisamp
