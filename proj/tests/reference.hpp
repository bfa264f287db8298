// Independent reference implementations used only as test oracles.
// These must stay independent of the production kernels they check.
#ifndef FJPEG_TESTS_REFERENCE_HPP
#define FJPEG_TESTS_REFERENCE_HPP

#include <cmath>
#include <numbers>
#include <random>

#include "fjpeg/transform.hpp"

namespace reference {

// Nearest multiple of 5 (ties impossible on integer input).
inline int nearest_multiple_of_5(int p) {
  return 5 * static_cast<int>(std::lround(p / 5.0));
}

// Direct O(n^4) double-sum orthonormal 2-D DCT-II, no level shift.
inline fjpeg::CoefBlock dct_naive(const fjpeg::SampleBlock& block) {
  fjpeg::CoefBlock out;
  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v) {
      double cu = u == 0 ? 1.0 / std::numbers::sqrt2 : 1.0;
      double cv = v == 0 ? 1.0 / std::numbers::sqrt2 : 1.0;
      double s = 0.0;
      for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y)
          s += block[x * 8 + y] *
               std::cos((2 * x + 1) * u * std::numbers::pi / 16.0) *
               std::cos((2 * y + 1) * v * std::numbers::pi / 16.0);
      out[u * 8 + v] = 0.25 * cu * cv * s;
    }
  return out;
}

inline fjpeg::SampleBlock random_block(std::mt19937& rng, int lo = 0,
                                       int hi = 255) {
  std::uniform_int_distribution<int> dist(lo, hi);
  fjpeg::SampleBlock b;
  for (auto& v : b) v = dist(rng);
  return b;
}

}  // namespace reference

#endif
