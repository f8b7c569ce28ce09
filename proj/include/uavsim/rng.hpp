#pragma once

#include <cstdint>
#include <random>

namespace uavsim {

/// Per-run random stream. The engine is std::mt19937_64, whose output
/// sequence is fixed by the C++ standard; the uniform, normal and exponential
/// transforms are implemented here so results do not depend on the standard
/// library's distribution classes.
class Rng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform();

  /// Box-Muller; consumes exactly two uniforms per call.
  double normal(double mean, double stddev);

  /// Exponential with the given rate (1/mean); consumes one uniform.
  double exponential(double rate);

  /// Uniform integer index in [0, n).
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

inline Rng rng_new(std::uint64_t seed) { return Rng(seed); }

}  // namespace uavsim
