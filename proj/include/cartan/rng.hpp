#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "cartan/rational.hpp"

namespace cartan {

// Seeded deterministic RNG for sweeps and property tests.
// std::uniform_int_distribution is implementation-defined, so draws reduce the
// raw mt19937_64 stream directly; the tiny modulo bias is irrelevant here and
// the sequence is identical on every platform.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("SeededRng: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1u;
    return lo + static_cast<std::int64_t>(eng_() % span);
  }

  // Numerator in [-max_abs_num, max_abs_num], denominator in [1, max_den].
  Rational next_rational(std::int64_t max_abs_num = 9, std::int64_t max_den = 4) {
    const long n = static_cast<long>(next_int(-max_abs_num, max_abs_num));
    const long d = static_cast<long>(next_int(1, max_den));
    return Rational(n, d);
  }

  // Nonzero variant for draws that must avoid degeneracy.
  Rational next_nonzero_rational(std::int64_t max_abs_num = 9, std::int64_t max_den = 4) {
    for (;;) {
      Rational r = next_rational(max_abs_num, max_den);
      if (!r.is_zero()) return r;
    }
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace cartan
