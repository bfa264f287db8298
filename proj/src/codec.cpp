#include "fjpeg/codec.hpp"

#include <cmath>
#include <cstring>

#include "fjpeg/entropy.hpp"
#include "fjpeg/error.hpp"
#include "fjpeg/fmm.hpp"
#include "fjpeg/quant.hpp"
#include "fjpeg/transform.hpp"

namespace fjpeg {

namespace {

constexpr char kMagic[4] = {'F', 'J', 'P', 'G'};
constexpr uint8_t kVersion = 1;
constexpr size_t kHeaderSize = 4 + 1 + 1 + 4 + 4 + 1 + 1;
constexpr uint32_t kMaxDimension = 1u << 24;

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(static_cast<uint8_t>(v >> 24));
  out.push_back(static_cast<uint8_t>(v >> 16));
  out.push_back(static_cast<uint8_t>(v >> 8));
  out.push_back(static_cast<uint8_t>(v));
}

uint32_t get_u32(const uint8_t* p) {
  return (static_cast<uint32_t>(p[0]) << 24) | (static_cast<uint32_t>(p[1]) << 16) |
         (static_cast<uint32_t>(p[2]) << 8) | p[3];
}

std::vector<uint8_t> encode_plane(const std::vector<uint8_t>& plane, int width,
                                  int height, const QuantTable& table) {
  auto blocks = split_blocks(plane, width, height);
  std::vector<QuantizedBlock> quantized(blocks.size());
  const int64_t n = static_cast<int64_t>(blocks.size());
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i)
    quantized[i] = quantize(dct_8x8(blocks[i]), table);
  return encode_blocks(quantized);
}

std::vector<uint8_t> decode_plane(const std::vector<uint8_t>& payload,
                                  int width, int height,
                                  const QuantTable& table, int max_sample) {
  size_t block_count =
      static_cast<size_t>((width + 7) / 8) * ((height + 7) / 8);
  auto quantized = decode_blocks(payload, block_count);
  std::vector<SampleBlock> blocks(quantized.size());
  const int64_t n = static_cast<int64_t>(quantized.size());
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < n; ++i) {
    auto f = idct_8x8(dequantize(quantized[i], table));
    for (int k = 0; k < 64; ++k)
      blocks[i][k] = static_cast<int>(std::lround(f[k]));
  }
  return merge_blocks(blocks, width, height, max_sample);
}

}  // namespace

const char* mode_name(Mode m) {
  return m == Mode::Baseline ? "baseline" : "fmm";
}

std::vector<uint8_t> encode(const Image& img, const CodecConfig& config) {
  if (!img.valid()) throw Error("encode: invalid image");
  QuantTable table = scale_table(kBaseTable, config.quality);

  std::vector<uint8_t> out;
  out.insert(out.end(), kMagic, kMagic + 4);
  out.push_back(kVersion);
  out.push_back(static_cast<uint8_t>(config.mode));
  put_u32(out, static_cast<uint32_t>(img.width));
  put_u32(out, static_cast<uint32_t>(img.height));
  out.push_back(static_cast<uint8_t>(img.channels()));
  out.push_back(static_cast<uint8_t>(config.quality));

  for (const auto& plane : img.planes) {
    std::vector<uint8_t> payload;
    if (config.mode == Mode::Fmm) {
      payload = encode_plane(fmm_forward(plane), img.width, img.height, table);
    } else {
      payload = encode_plane(plane, img.width, img.height, table);
    }
    put_u32(out, static_cast<uint32_t>(payload.size()));
    out.insert(out.end(), payload.begin(), payload.end());
  }
  return out;
}

StreamInfo inspect(const std::vector<uint8_t>& stream) {
  if (stream.size() < kHeaderSize)
    throw DecodeError(DecodeError::Kind::BadHeader, "container too short");
  if (std::memcmp(stream.data(), kMagic, 4) != 0)
    throw DecodeError(DecodeError::Kind::BadHeader, "bad magic (not FJPG)");
  StreamInfo info;
  info.version = stream[4];
  if (info.version != kVersion)
    throw DecodeError(DecodeError::Kind::BadHeader,
                      "unsupported version " + std::to_string(info.version));
  if (stream[5] > 1)
    throw DecodeError(DecodeError::Kind::BadHeader,
                      "unknown mode byte " + std::to_string(stream[5]));
  info.mode = static_cast<Mode>(stream[5]);
  uint32_t w = get_u32(stream.data() + 6);
  uint32_t h = get_u32(stream.data() + 10);
  if (w == 0 || h == 0 || w > kMaxDimension || h > kMaxDimension)
    throw DecodeError(DecodeError::Kind::BadHeader, "bad dimensions");
  info.width = static_cast<int>(w);
  info.height = static_cast<int>(h);
  info.channels = stream[14];
  if (info.channels != 1 && info.channels != 3)
    throw DecodeError(DecodeError::Kind::BadHeader,
                      "channel count must be 1 or 3");
  info.quality = stream[15];
  if (info.quality < 1 || info.quality > 100)
    throw DecodeError(DecodeError::Kind::BadHeader, "quality out of range");
  info.total_size = stream.size();

  size_t pos = kHeaderSize;
  for (int c = 0; c < info.channels; ++c) {
    if (pos + 4 > stream.size())
      throw DecodeError(DecodeError::Kind::Truncated,
                        "truncated payload length field");
    uint32_t len = get_u32(stream.data() + pos);
    pos += 4;
    if (pos + len > stream.size())
      throw DecodeError(DecodeError::Kind::Truncated,
                        "payload extends past end of file");
    info.payload_sizes.push_back(len);
    pos += len;
  }
  if (pos != stream.size())
    throw DecodeError(DecodeError::Kind::LengthMismatch,
                      std::to_string(stream.size() - pos) +
                          " trailing bytes after last payload");
  return info;
}

Image decode(const std::vector<uint8_t>& stream) {
  StreamInfo info = inspect(stream);
  QuantTable table = scale_table(kBaseTable, info.quality);

  Image img;
  img.width = info.width;
  img.height = info.height;
  size_t pos = kHeaderSize;
  for (int c = 0; c < info.channels; ++c) {
    uint32_t len = info.payload_sizes[c];
    std::vector<uint8_t> payload(stream.begin() + pos + 4,
                                 stream.begin() + pos + 4 + len);
    pos += 4 + len;
    if (info.mode == Mode::Fmm) {
      // samples land in [0,51] plus quantization noise; the x5 expansion
      // is clamped to [0,255]
      auto reduced = decode_plane(payload, info.width, info.height, table, 63);
      img.planes.push_back(fmm_inverse(reduced));
    } else {
      img.planes.push_back(
          decode_plane(payload, info.width, info.height, table, 255));
    }
  }
  return img;
}

}  // namespace fjpeg
