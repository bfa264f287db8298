#include "fjpeg/fmm.hpp"

#include "fjpeg/error.hpp"

namespace fjpeg {

int fmm_round(int p) {
  if (p < 0 || p > 255) throw Error("fmm_round: input out of [0,255]");
  switch (p % 5) {
    case 4: return p + 1;
    case 3: return p + 2;
    case 2: return p - 2;
    case 1: return p - 1;
    default: return p;
  }
}

std::vector<uint8_t> fmm_forward(const std::vector<uint8_t>& plane) {
  std::vector<uint8_t> out(plane.size());
  const int64_t n = static_cast<int64_t>(plane.size());
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i)
    out[i] = static_cast<uint8_t>(fmm_round(plane[i]) / 5);
  return out;
}

std::vector<uint8_t> serial::fmm_forward(const std::vector<uint8_t>& plane) {
  std::vector<uint8_t> out(plane.size());
  for (size_t i = 0; i < plane.size(); ++i)
    out[i] = static_cast<uint8_t>(fmm_round(plane[i]) / 5);
  return out;
}

std::vector<uint8_t> fmm_inverse(const std::vector<uint8_t>& plane) {
  std::vector<uint8_t> out(plane.size());
  const int64_t n = static_cast<int64_t>(plane.size());
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i) {
    int v = 5 * plane[i];
    out[i] = static_cast<uint8_t>(v > 255 ? 255 : v);
  }
  return out;
}

}  // namespace fjpeg
