#include "fjpeg/quant.hpp"

#include <cmath>

#include "fjpeg/error.hpp"

namespace fjpeg {

const QuantTable kBaseTable = {
    16, 11, 10, 16, 24,  40,  51,  61,   //
    12, 12, 14, 19, 26,  58,  60,  55,   //
    14, 13, 16, 24, 40,  57,  69,  56,   //
    14, 17, 22, 29, 51,  87,  80,  62,   //
    18, 22, 37, 56, 68,  109, 103, 77,   //
    24, 35, 55, 64, 81,  104, 113, 92,   //
    49, 64, 78, 87, 103, 121, 120, 101,  //
    72, 92, 95, 98, 112, 100, 103, 99,
};

QuantTable scale_table(const QuantTable& base, int quality) {
  if (quality < 1 || quality > 100)
    throw Error("quality must be in 1..100");
  int scale = quality < 50 ? 5000 / quality : 200 - 2 * quality;
  QuantTable out;
  for (int i = 0; i < 64; ++i) {
    int v = (base[i] * scale + 50) / 100;
    out[i] = static_cast<uint8_t>(v < 1 ? 1 : v > 255 ? 255 : v);
  }
  return out;
}

QuantizedBlock quantize(const CoefBlock& coefs, const QuantTable& table) {
  QuantizedBlock out;
  for (int i = 0; i < 64; ++i) {
    double r = coefs[i] / table[i];
    // round half away from zero
    out[i] = static_cast<int32_t>(r >= 0 ? std::floor(r + 0.5)
                                         : std::ceil(r - 0.5));
  }
  return out;
}

CoefBlock dequantize(const QuantizedBlock& q, const QuantTable& table) {
  CoefBlock out;
  for (int i = 0; i < 64; ++i)
    out[i] = static_cast<double>(q[i]) * table[i];
  return out;
}

}  // namespace fjpeg
