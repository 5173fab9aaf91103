#pragma once

#include <cstdint>

namespace padc {

// splitmix64 finalizer; full-avalanche 64-bit mixer.
std::uint64_t mix64(std::uint64_t x);

// Counter-based Gaussian source. Every draw is a pure function of
// (seed, index, stream), so a pipelined run and a sample-at-a-time run that
// address draws by (sample index, stage index) see the exact same values no
// matter in which order they ask for them.
class NoiseSource {
 public:
  NoiseSource() = default;
  explicit NoiseSource(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  // Standard-normal draw for the given counter pair.
  double unit_normal(std::uint64_t index, std::uint64_t stream = 0) const;

  // Uniform in [0,1) for the given counter pair.
  double uniform(std::uint64_t index, std::uint64_t stream = 0) const;

 private:
  std::uint64_t seed_ = 0;
};

}  // namespace padc
