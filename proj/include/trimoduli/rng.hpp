#pragma once

#include <cstdint>
#include <random>

namespace trimoduli {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr auto splitmix64(std::uint64_t x) -> std::uint64_t {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed of stream `index` under run seed `seed`: splitmix64(seed ^ splitmix64(index)).
constexpr auto stream_seed(std::uint64_t seed, std::uint64_t index) -> std::uint64_t {
  return splitmix64(seed ^ splitmix64(index));
}

/// One reproducible random stream. The engine is std::mt19937_64, whose output
/// sequence is fixed by the C++ standard; doubles use the top 53 bits.
class Stream {
public:
  Stream(std::uint64_t seed, std::uint64_t index) : engine_(stream_seed(seed, index)) {}

  /// Uniform double in [0, 1).
  auto uniform() -> double { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
  std::mt19937_64 engine_;
};

} // namespace trimoduli
