#ifndef FJPEG_CODEC_HPP
#define FJPEG_CODEC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fjpeg/image.hpp"

namespace fjpeg {

enum class Mode : uint8_t { Baseline = 0, Fmm = 1 };

struct CodecConfig {
  Mode mode = Mode::Fmm;
  int quality = 75;  // 1..100
};

// Container header summary, as reported by inspect().
struct StreamInfo {
  uint8_t version;
  Mode mode;
  int width;
  int height;
  int channels;
  int quality;
  std::vector<uint32_t> payload_sizes;
  size_t total_size;
};

// Full pipeline per channel:
//   (fmm only) fmm_forward -> split_blocks -> dct -> quantize -> entropy.
// Output is the self-describing FJPG container.
std::vector<uint8_t> encode(const Image& img, const CodecConfig& config);

// Inverse pipeline; reconstructed samples rounded and clamped to [0,255].
Image decode(const std::vector<uint8_t>& stream);

// Parses and validates the header only.
StreamInfo inspect(const std::vector<uint8_t>& stream);

const char* mode_name(Mode m);

}  // namespace fjpeg

#endif
