#include "padc/noise.hpp"

#include <cmath>

namespace padc {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t index,
                           std::uint64_t stream) {
  std::uint64_t h = seed;
  h = mix64(h ^ (index + 0x9E3779B97F4A7C15ULL));
  h = mix64(h ^ (stream + 0xD1B54A32D192ED03ULL));
  return h;
}
}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double NoiseSource::unit_normal(std::uint64_t index, std::uint64_t stream) const {
  const std::uint64_t h = counter_hash(seed_, index, stream);
  const std::uint64_t a = mix64(h);
  const std::uint64_t b = mix64(h ^ 0x2545F4914F6CDD1DULL);
  // Box-Muller; u1 in (0,1] so the log stays finite.
  const double u1 = static_cast<double>((a >> 11) + 1) * 0x1.0p-53;
  const double u2 = static_cast<double>(b >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double NoiseSource::uniform(std::uint64_t index, std::uint64_t stream) const {
  const std::uint64_t h = counter_hash(seed_, index, stream);
  return static_cast<double>(mix64(h) >> 11) * 0x1.0p-53;
}

}  // namespace padc
