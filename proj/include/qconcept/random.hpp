#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>

namespace qconcept {

// std::mt19937_64 output is fixed by the standard, but the <random>
// distributions are not, so the mappings below are spelled out to keep
// seeded runs identical across standard libraries.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform index in [0, n). Modulo bias is below 2^-40 for the sizes used here.
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

private:
  std::mt19937_64 engine_;
};

} // namespace qconcept
