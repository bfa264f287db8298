#ifndef FJPEG_FMM_HPP
#define FJPEG_FMM_HPP

#include <cstdint>
#include <vector>

namespace fjpeg {

// Rounds an intensity to the nearest multiple of 5 via the four-case
// residue rule (mod 4 -> +1, mod 3 -> +2, mod 2 -> -2, mod 1 -> -1).
// Equivalent to 5*round(p/5) on integers; |result - p| <= 2.
int fmm_round(int p);

// Per-sample: fmm_round then exact division by 5. Output range [0, 51].
std::vector<uint8_t> fmm_forward(const std::vector<uint8_t>& plane);

// Multiplies each sample by 5, clamped to [0, 255]. Inputs above 51 can
// occur after lossy reconstruction and are clamped rather than rejected.
std::vector<uint8_t> fmm_inverse(const std::vector<uint8_t>& plane);

namespace serial {
std::vector<uint8_t> fmm_forward(const std::vector<uint8_t>& plane);
}

}  // namespace fjpeg

#endif
