#ifndef FJPEG_ENTROPY_HPP
#define FJPEG_ENTROPY_HPP

#include <cstdint>
#include <vector>

#include "fjpeg/quant.hpp"

namespace fjpeg {

// Standard zigzag scan: kZigzag[i] is the row-major block index of scan
// position i.
extern const std::array<uint8_t, 64> kZigzag;

// Scan-order view of a block and its inverse.
std::array<int32_t, 64> zigzag(const QuantizedBlock& block);
QuantizedBlock izigzag(const std::array<int32_t, 64>& scan);

// MSB-first bit packing; the final byte is padded with 1-bits.
class BitWriter {
 public:
  void put(uint32_t bits, int count);
  std::vector<uint8_t> finish();

 private:
  std::vector<uint8_t> bytes_;
  uint32_t acc_ = 0;
  int nbits_ = 0;
};

class BitReader {
 public:
  BitReader(const uint8_t* data, size_t size) : data_(data), size_(size) {}
  // Throws DecodeError::Truncated past the end.
  uint32_t get(int count);

 private:
  const uint8_t* data_;
  size_t size_;
  size_t pos_ = 0;  // bit position
};

// DC DPCM + AC run-length Huffman coding of one channel's raster-order
// block sequence, using the fixed built-in code tables. The DC predictor
// starts at 0.
std::vector<uint8_t> encode_blocks(const std::vector<QuantizedBlock>& blocks);

// Exact inverse. Throws DecodeError (truncated stream, invalid code,
// zero-run past position 63) on any malformed input; never loops.
std::vector<QuantizedBlock> decode_blocks(const std::vector<uint8_t>& bytes,
                                          size_t block_count);

}  // namespace fjpeg

#endif
