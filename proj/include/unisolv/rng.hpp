// Seeded deterministic sampling. Reports double as replayable certificates,
// so only the standard-specified raw output of mt19937_64 is used; the
// std::uniform_* distributions are implementation-defined and would break
// byte-identical replay across platforms.

#pragma once

#include <cstdint>
#include <random>

#include "unisolv/rational.hpp"

namespace unisolv {

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform-ish integer in [lo, hi], inclusive. Modulo bias is irrelevant
  /// for test-point sampling; determinism is what matters.
  long long next_int(long long lo, long long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long long>(next_u64() % span);
  }

  /// Small rational with numerator in [-9, 9] and denominator in [1, 4].
  Rational next_rational() {
    return Rational(next_int(-9, 9), next_int(1, 4));
  }

  Rational next_rational(long long num_lo, long long num_hi, long long den_lo, long long den_hi) {
    return Rational(next_int(num_lo, num_hi), next_int(den_lo, den_hi));
  }

  GaussianRational next_gaussian_rational() {
    Rational re = next_rational();
    Rational im = next_rational();
    return GaussianRational(re, im);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace unisolv
