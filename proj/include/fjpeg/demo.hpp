#ifndef FJPEG_DEMO_HPP
#define FJPEG_DEMO_HPP

#include <array>
#include <ostream>

namespace fjpeg::demo {

// Built-in worked example: an 8x8 photographic block and the known-good
// values of every pipeline stage, used by the `demo` CLI command and the
// test suite as executable goldens.

// Original intensities.
extern const std::array<int, 64> kOriginalBlock;
// kOriginalBlock rounded to multiples of 5.
extern const std::array<int, 64> kRoundedBlock;
// kRoundedBlock / 5, range [0, 51].
extern const std::array<int, 64> kReducedBlock;
// Integer-rounded DCT of the original and reduced blocks.
extern const std::array<int, 64> kOriginalDct;
extern const std::array<int, 64> kReducedDct;

// Known-good dispersion figures (N-1 standard deviation).
inline constexpr double kOriginalBlockStd = 3.84;
inline constexpr double kReducedBlockStd = 0.85;
inline constexpr double kOriginalDctStd = 106.65;
inline constexpr double kReducedDctStd = 21.26;

// Recomputes every stage from kOriginalBlock, prints the tables and
// figures, and checks them against the goldens (DCT cells within +/-1.0
// of the integer-rounded values). Returns false and lists each mismatch
// when a check fails.
bool run(std::ostream& out);

}  // namespace fjpeg::demo

#endif
