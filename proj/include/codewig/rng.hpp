#ifndef CODEWIG_RNG_HPP
#define CODEWIG_RNG_HPP

#include <cstdint>
#include <limits>

namespace codewig {

/// xorshift64* generator with a fixed stream-derivation rule, so that a given
/// (seed, stream) pair yields the same sequence on every platform.
///
///   state  = seed ^ (stream * 0x9E3779B97F4A7C15), replaced by kZeroStateSubstitute if 0
///   step   : x ^= x >> 12; x ^= x << 25; x ^= x >> 27; output x * 0x2545F4914F6CDD1D
///   the first 8 outputs are discarded.
class Xorshift64Star {
 public:
  using result_type = std::uint64_t;

  static constexpr std::uint64_t kStreamMultiplier = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kOutputMultiplier = 0x2545F4914F6CDD1DULL;
  static constexpr std::uint64_t kZeroStateSubstitute = 0x853C49E6748FEA9BULL;
  static constexpr int kWarmup = 8;

  explicit Xorshift64Star(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(seed ^ (stream * kStreamMultiplier)) {
    if (state_ == 0) state_ = kZeroStateSubstitute;
    for (int i = 0; i < kWarmup; ++i) (*this)();
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * kOutputMultiplier;
  }

  /// Uniform integer in [0, bound) by rejection of the biased low range. bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = (*this)();
      if (x >= threshold) return x % bound;
    }
  }

  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace codewig

#endif  // CODEWIG_RNG_HPP
