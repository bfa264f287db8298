#ifndef FJPEG_QUANT_HPP
#define FJPEG_QUANT_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "fjpeg/transform.hpp"

namespace fjpeg {

// 64 integer divisors in [1, 255], row-major 8x8.
using QuantTable = std::array<uint8_t, 64>;
// Quantized coefficients, still in row-major block order.
using QuantizedBlock = std::array<int32_t, 64>;

// The well-known luminance divisor table, applied to all channels.
extern const QuantTable kBaseTable;

// IJG quality scaling: scale = q<50 ? 5000/q : 200-2q;
// entry' = clamp(floor((entry*scale + 50)/100), 1, 255).
QuantTable scale_table(const QuantTable& base, int quality);

// q[i] = round_half_away_from_zero(F[i] / table[i]).
QuantizedBlock quantize(const CoefBlock& coefs, const QuantTable& table);

// F'[i] = q[i] * table[i].
CoefBlock dequantize(const QuantizedBlock& q, const QuantTable& table);

}  // namespace fjpeg

#endif
