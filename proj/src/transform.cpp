#include "fjpeg/transform.hpp"

#include <cmath>
#include <numbers>

#include "fjpeg/error.hpp"

namespace fjpeg {

namespace {

// Orthonormal 1-D basis: A[u][x] = 0.5 * C(u) * cos((2x+1)u*pi/16),
// C(0) = 1/sqrt(2), C(u>0) = 1. The 2-D transform is F = A f A^T.
struct Basis {
  double a[8][8];
  Basis() {
    for (int u = 0; u < 8; ++u) {
      double c = u == 0 ? 1.0 / std::numbers::sqrt2 : 1.0;
      for (int x = 0; x < 8; ++x)
        a[u][x] = 0.5 * c * std::cos((2 * x + 1) * u * std::numbers::pi / 16.0);
    }
  }
};
const Basis kBasis;

// Separable pass: out = A * in (rows of `in` indexed second).
// Fixed summation order keeps the result deterministic.
void rows_forward(const double in[8][8], double out[8][8]) {
  for (int u = 0; u < 8; ++u)
    for (int y = 0; y < 8; ++y) {
      double s = 0.0;
      for (int x = 0; x < 8; ++x) s += kBasis.a[u][x] * in[x][y];
      out[u][y] = s;
    }
}

void rows_inverse(const double in[8][8], double out[8][8]) {
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      double s = 0.0;
      for (int u = 0; u < 8; ++u) s += kBasis.a[u][x] * in[u][y];
      out[x][y] = s;
    }
}

}  // namespace

CoefBlock dct_8x8(const SampleBlock& block) {
  double f[8][8], t[8][8], ft[8][8];
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) f[x][y] = block[x * 8 + y];
  rows_forward(f, t);  // columns transformed
  // transpose, transform the other axis, transpose back
  double tt[8][8];
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) tt[i][j] = t[j][i];
  rows_forward(tt, ft);
  CoefBlock out;
  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v) out[u * 8 + v] = ft[v][u];
  return out;
}

std::array<double, 64> idct_8x8(const CoefBlock& coefs) {
  double F[8][8], t[8][8], f[8][8];
  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v) F[u][v] = coefs[u * 8 + v];
  rows_inverse(F, t);
  double tt[8][8];
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) tt[i][j] = t[j][i];
  rows_inverse(tt, f);
  std::array<double, 64> out;
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) out[x * 8 + y] = f[y][x];
  return out;
}

std::vector<SampleBlock> split_blocks(const std::vector<uint8_t>& plane,
                                      int width, int height) {
  if (width < 1 || height < 1 ||
      plane.size() != static_cast<size_t>(width) * height)
    throw Error("split_blocks: plane size mismatch");
  int bw = (width + 7) / 8, bh = (height + 7) / 8;
  std::vector<SampleBlock> blocks(static_cast<size_t>(bw) * bh);
  for (int by = 0; by < bh; ++by)
    for (int bx = 0; bx < bw; ++bx) {
      SampleBlock& b = blocks[static_cast<size_t>(by) * bw + bx];
      for (int r = 0; r < 8; ++r) {
        int y = std::min(by * 8 + r, height - 1);
        for (int c = 0; c < 8; ++c) {
          int x = std::min(bx * 8 + c, width - 1);
          b[r * 8 + c] = plane[static_cast<size_t>(y) * width + x];
        }
      }
    }
  return blocks;
}

std::vector<uint8_t> merge_blocks(const std::vector<SampleBlock>& blocks,
                                  int width, int height, int max_sample) {
  int bw = (width + 7) / 8, bh = (height + 7) / 8;
  if (blocks.size() != static_cast<size_t>(bw) * bh)
    throw Error("merge_blocks: block count mismatch");
  std::vector<uint8_t> plane(static_cast<size_t>(width) * height);
  for (int by = 0; by < bh; ++by)
    for (int bx = 0; bx < bw; ++bx) {
      const SampleBlock& b = blocks[static_cast<size_t>(by) * bw + bx];
      for (int r = 0; r < 8 && by * 8 + r < height; ++r)
        for (int c = 0; c < 8 && bx * 8 + c < width; ++c) {
          int v = b[r * 8 + c];
          v = v < 0 ? 0 : v > max_sample ? max_sample : v;
          plane[static_cast<size_t>(by * 8 + r) * width + bx * 8 + c] =
              static_cast<uint8_t>(v);
        }
    }
  return plane;
}

std::vector<CoefBlock> dct_blocks(const std::vector<SampleBlock>& blocks) {
  std::vector<CoefBlock> out(blocks.size());
  const int64_t n = static_cast<int64_t>(blocks.size());
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i) out[i] = dct_8x8(blocks[i]);
  return out;
}

std::vector<SampleBlock> idct_blocks_rounded(const std::vector<CoefBlock>& coefs) {
  std::vector<SampleBlock> out(coefs.size());
  const int64_t n = static_cast<int64_t>(coefs.size());
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i) {
    auto f = idct_8x8(coefs[i]);
    for (int k = 0; k < 64; ++k)
      out[i][k] = static_cast<int>(std::lround(f[k]));
  }
  return out;
}

std::vector<CoefBlock> serial::dct_blocks(const std::vector<SampleBlock>& blocks) {
  std::vector<CoefBlock> out(blocks.size());
  for (size_t i = 0; i < blocks.size(); ++i) out[i] = dct_8x8(blocks[i]);
  return out;
}

std::vector<SampleBlock> serial::idct_blocks_rounded(
    const std::vector<CoefBlock>& coefs) {
  std::vector<SampleBlock> out(coefs.size());
  for (size_t i = 0; i < coefs.size(); ++i) {
    auto f = idct_8x8(coefs[i]);
    for (int k = 0; k < 64; ++k)
      out[i][k] = static_cast<int>(std::lround(f[k]));
  }
  return out;
}

}  // namespace fjpeg
