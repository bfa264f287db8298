#ifndef FJPEG_TRANSFORM_HPP
#define FJPEG_TRANSFORM_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace fjpeg {

// 8x8 tile of integer samples, row-major.
using SampleBlock = std::array<int, 64>;
// 8x8 tile of real DCT coefficients, row-major; index 0 is DC.
using CoefBlock = std::array<double, 64>;

// Orthonormal 2-D DCT-II, no level shift: DC of a constant block c is 8c.
CoefBlock dct_8x8(const SampleBlock& block);

// Exact inverse of dct_8x8 (real-valued; caller rounds/clamps).
std::array<double, 64> idct_8x8(const CoefBlock& coefs);

// Tiles a plane into ceil(w/8)*ceil(h/8) raster-order blocks, replicating
// the last row/column past the image edge.
std::vector<SampleBlock> split_blocks(const std::vector<uint8_t>& plane,
                                      int width, int height);

// Inverse of split_blocks; padding samples are discarded. Values clamped
// to [0, max_sample]. Throws Error on block-count mismatch.
std::vector<uint8_t> merge_blocks(const std::vector<SampleBlock>& blocks,
                                  int width, int height,
                                  int max_sample = 255);

// Whole-plane transforms; OpenMP-parallel over blocks. The serial
// counterparts produce bit-identical results and back the benchmarks.
std::vector<CoefBlock> dct_blocks(const std::vector<SampleBlock>& blocks);
std::vector<SampleBlock> idct_blocks_rounded(const std::vector<CoefBlock>& coefs);

namespace serial {
std::vector<CoefBlock> dct_blocks(const std::vector<SampleBlock>& blocks);
std::vector<SampleBlock> idct_blocks_rounded(const std::vector<CoefBlock>& coefs);
}

}  // namespace fjpeg

#endif
