#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace spiralcover {

/// The single random source used everywhere. The raw engine is
/// std::mt19937_64, whose output sequence is fixed by the C++ standard;
/// the float and index conversions below are spelled out so streams are
/// identical across standard libraries.
class Rng {
 public:
  static constexpr std::string_view kName = "mt19937_64/u53/rejection";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on {0, ..., n-1}; n must be positive.
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; decorrelates derived seeds such as
/// (topology seed, trial index).
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace spiralcover
