#pragma once

#include <cstdint>
#include <random>

namespace tricop {

/// splitmix64 finalizer; used to expand a base seed into per-stream seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seeded source of uniform and normal variates.
///
/// Built on std::mt19937_64, whose output sequence is fixed by the standard,
/// with the float conversion and the normal transform done here so that a seed
/// yields bit-identical variates on every conforming implementation.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  /// Stream for chunk `index` of a run seeded with `seed`.
  static RngStream derive(std::uint64_t seed, std::uint64_t index) {
    return RngStream(splitmix64(seed + index));
  }

  std::uint64_t seed() const noexcept { return seed_; }

  /// Uniform on the open interval (0, 1), on a grid of spacing 2^-53.
  double uniform() noexcept {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; the second variate of each pair is cached.
  double normal() noexcept;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace tricop
