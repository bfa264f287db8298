#include "fjpeg/entropy.hpp"

#include <cstring>

#include "fjpeg/error.hpp"

namespace fjpeg {

const std::array<uint8_t, 64> kZigzag = {
    0,  1,  8,  16, 9,  2,  3,  10,  //
    17, 24, 32, 25, 18, 11, 4,  5,   //
    12, 19, 26, 33, 40, 48, 41, 34,  //
    27, 20, 13, 6,  7,  14, 21, 28,  //
    35, 42, 49, 56, 57, 50, 43, 36,  //
    29, 22, 15, 23, 30, 37, 44, 51,  //
    58, 59, 52, 45, 38, 31, 39, 46,  //
    53, 60, 61, 54, 47, 55, 62, 63,
};

std::array<int32_t, 64> zigzag(const QuantizedBlock& block) {
  std::array<int32_t, 64> out;
  for (int i = 0; i < 64; ++i) out[i] = block[kZigzag[i]];
  return out;
}

QuantizedBlock izigzag(const std::array<int32_t, 64>& scan) {
  QuantizedBlock out;
  for (int i = 0; i < 64; ++i) out[kZigzag[i]] = scan[i];
  return out;
}

void BitWriter::put(uint32_t bits, int count) {
  for (int i = count - 1; i >= 0; --i) {
    acc_ = (acc_ << 1) | ((bits >> i) & 1u);
    if (++nbits_ == 8) {
      bytes_.push_back(static_cast<uint8_t>(acc_));
      acc_ = 0;
      nbits_ = 0;
    }
  }
}

std::vector<uint8_t> BitWriter::finish() {
  if (nbits_ > 0) {
    acc_ = (acc_ << (8 - nbits_)) | ((1u << (8 - nbits_)) - 1);
    bytes_.push_back(static_cast<uint8_t>(acc_));
    acc_ = 0;
    nbits_ = 0;
  }
  return std::move(bytes_);
}

uint32_t BitReader::get(int count) {
  uint32_t v = 0;
  for (int i = 0; i < count; ++i) {
    if (pos_ >= size_ * 8)
      throw DecodeError(DecodeError::Kind::Truncated, "bitstream truncated");
    uint32_t bit = (data_[pos_ / 8] >> (7 - pos_ % 8)) & 1u;
    v = (v << 1) | bit;
    ++pos_;
  }
  return v;
}

namespace {

// Fixed baseline-style code tables: counts of codes per length 1..16,
// then symbol values in code order.
const uint8_t kDcBits[17] = {0, 0, 1, 5, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0};
const uint8_t kDcVals[12] = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};

const uint8_t kAcBits[17] = {0, 0, 2, 1, 3, 3, 2, 4, 3, 5, 5, 4, 4, 0, 0, 1, 0x7D};
const uint8_t kAcVals[162] = {
    0x01, 0x02, 0x03, 0x00, 0x04, 0x11, 0x05, 0x12, 0x21, 0x31, 0x41, 0x06,
    0x13, 0x51, 0x61, 0x07, 0x22, 0x71, 0x14, 0x32, 0x81, 0x91, 0xA1, 0x08,
    0x23, 0x42, 0xB1, 0xC1, 0x15, 0x52, 0xD1, 0xF0, 0x24, 0x33, 0x62, 0x72,
    0x82, 0x09, 0x0A, 0x16, 0x17, 0x18, 0x19, 0x1A, 0x25, 0x26, 0x27, 0x28,
    0x29, 0x2A, 0x34, 0x35, 0x36, 0x37, 0x38, 0x39, 0x3A, 0x43, 0x44, 0x45,
    0x46, 0x47, 0x48, 0x49, 0x4A, 0x53, 0x54, 0x55, 0x56, 0x57, 0x58, 0x59,
    0x5A, 0x63, 0x64, 0x65, 0x66, 0x67, 0x68, 0x69, 0x6A, 0x73, 0x74, 0x75,
    0x76, 0x77, 0x78, 0x79, 0x7A, 0x83, 0x84, 0x85, 0x86, 0x87, 0x88, 0x89,
    0x8A, 0x92, 0x93, 0x94, 0x95, 0x96, 0x97, 0x98, 0x99, 0x9A, 0xA2, 0xA3,
    0xA4, 0xA5, 0xA6, 0xA7, 0xA8, 0xA9, 0xAA, 0xB2, 0xB3, 0xB4, 0xB5, 0xB6,
    0xB7, 0xB8, 0xB9, 0xBA, 0xC2, 0xC3, 0xC4, 0xC5, 0xC6, 0xC7, 0xC8, 0xC9,
    0xCA, 0xD2, 0xD3, 0xD4, 0xD5, 0xD6, 0xD7, 0xD8, 0xD9, 0xDA, 0xE1, 0xE2,
    0xE3, 0xE4, 0xE5, 0xE6, 0xE7, 0xE8, 0xE9, 0xEA, 0xF1, 0xF2, 0xF3, 0xF4,
    0xF5, 0xF6, 0xF7, 0xF8, 0xF9, 0xFA,
};

constexpr uint8_t kZrl = 0xF0;
constexpr uint8_t kEob = 0x00;

struct HuffCode {
  uint16_t code = 0;
  uint8_t length = 0;
};

// Canonical code assignment plus the per-length decode bounds.
struct HuffTable {
  HuffCode encode[256];
  // decode state, per code length 1..16
  int32_t mincode[17];
  int32_t maxcode[17];  // -1 when no codes of that length
  int first_index[17];
  std::vector<uint8_t> symbols;

  HuffTable(const uint8_t bits[17], const uint8_t* vals, size_t nvals) {
    symbols.assign(vals, vals + nvals);
    uint16_t code = 0;
    size_t k = 0;
    for (int len = 1; len <= 16; ++len) {
      mincode[len] = code;
      first_index[len] = static_cast<int>(k);
      for (int i = 0; i < bits[len]; ++i) {
        encode[vals[k]] = {code, static_cast<uint8_t>(len)};
        ++code;
        ++k;
      }
      maxcode[len] = bits[len] ? code - 1 : -1;
      code <<= 1;
    }
  }

  uint8_t read_symbol(BitReader& br) const {
    int32_t code = 0;
    for (int len = 1; len <= 16; ++len) {
      code = (code << 1) | static_cast<int32_t>(br.get(1));
      if (maxcode[len] >= 0 && code <= maxcode[len])
        return symbols[first_index[len] + (code - mincode[len])];
    }
    throw DecodeError(DecodeError::Kind::BadHuffmanCode, "invalid Huffman code");
  }
};

const HuffTable& dc_table() {
  static const HuffTable t(kDcBits, kDcVals, sizeof(kDcVals));
  return t;
}
const HuffTable& ac_table() {
  static const HuffTable t(kAcBits, kAcVals, sizeof(kAcVals));
  return t;
}

// Bit length of |v| (0 for v == 0).
int magnitude_category(int32_t v) {
  uint32_t m = v < 0 ? static_cast<uint32_t>(-static_cast<int64_t>(v))
                     : static_cast<uint32_t>(v);
  int n = 0;
  while (m) {
    ++n;
    m >>= 1;
  }
  return n;
}

// Amplitude bits: negatives stored as v - 1 in the low `size` bits.
uint32_t amplitude_bits(int32_t v, int size) {
  return static_cast<uint32_t>(v >= 0 ? v : v - 1) & ((1u << size) - 1);
}

int32_t extend_amplitude(uint32_t bits, int size) {
  if (size == 0) return 0;
  if (bits >> (size - 1)) return static_cast<int32_t>(bits);
  return static_cast<int32_t>(bits) - (1 << size) + 1;
}

}  // namespace

std::vector<uint8_t> encode_blocks(const std::vector<QuantizedBlock>& blocks) {
  BitWriter bw;
  const HuffTable& dc = dc_table();
  const HuffTable& ac = ac_table();
  int32_t pred = 0;
  for (const auto& block : blocks) {
    auto scan = zigzag(block);
    // DC delta
    int32_t diff = scan[0] - pred;
    pred = scan[0];
    int cat = magnitude_category(diff);
    if (cat > 11) throw Error("DC delta exceeds representable category");
    bw.put(dc.encode[cat].code, dc.encode[cat].length);
    if (cat) bw.put(amplitude_bits(diff, cat), cat);
    // AC run-lengths up to the last non-zero, then EOB
    int last = 63;
    while (last > 0 && scan[last] == 0) --last;
    int run = 0;
    for (int k = 1; k <= last; ++k) {
      if (scan[k] == 0) {
        ++run;
        continue;
      }
      while (run >= 16) {
        bw.put(ac.encode[kZrl].code, ac.encode[kZrl].length);
        run -= 16;
      }
      int size = magnitude_category(scan[k]);
      if (size > 10) throw Error("AC coefficient exceeds representable size");
      uint8_t sym = static_cast<uint8_t>((run << 4) | size);
      bw.put(ac.encode[sym].code, ac.encode[sym].length);
      bw.put(amplitude_bits(scan[k], size), size);
      run = 0;
    }
    if (last < 63) bw.put(ac.encode[kEob].code, ac.encode[kEob].length);
  }
  return bw.finish();
}

std::vector<QuantizedBlock> decode_blocks(const std::vector<uint8_t>& bytes,
                                          size_t block_count) {
  BitReader br(bytes.data(), bytes.size());
  const HuffTable& dc = dc_table();
  const HuffTable& ac = ac_table();
  std::vector<QuantizedBlock> out;
  out.reserve(block_count);
  int32_t pred = 0;
  for (size_t b = 0; b < block_count; ++b) {
    std::array<int32_t, 64> scan{};
    int cat = dc.read_symbol(br);
    if (cat > 11)
      throw DecodeError(DecodeError::Kind::BadHuffmanCode,
                        "invalid DC category");
    pred += extend_amplitude(br.get(cat), cat);
    scan[0] = pred;
    int k = 1;
    while (k < 64) {
      uint8_t sym = ac.read_symbol(br);
      if (sym == kEob) break;
      int run = sym >> 4, size = sym & 0x0F;
      if (sym == kZrl) {
        k += 16;
      } else {
        k += run;
        if (k > 63)
          throw DecodeError(DecodeError::Kind::RunOverflow,
                            "zero run past position 63");
        scan[k] = extend_amplitude(br.get(size), size);
        ++k;
      }
      if (k > 64)
        throw DecodeError(DecodeError::Kind::RunOverflow,
                          "zero run past position 63");
    }
    out.push_back(izigzag(scan));
  }
  return out;
}

}  // namespace fjpeg
