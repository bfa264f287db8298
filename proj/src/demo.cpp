#include "fjpeg/demo.hpp"

#include <cmath>
#include <iomanip>

#include "fjpeg/fmm.hpp"
#include "fjpeg/metrics.hpp"
#include "fjpeg/transform.hpp"

namespace fjpeg::demo {

const std::array<int, 64> kOriginalBlock = {
    106, 98,  104, 102, 109, 110, 107, 113,  //
    103, 107, 104, 110, 109, 110, 110, 113,  //
    106, 106, 105, 110, 111, 107, 104, 108,  //
    104, 105, 110, 111, 109, 108, 110, 104,  //
    106, 106, 119, 113, 111, 107, 109, 108,  //
    106, 104, 101, 105, 104, 104, 107, 113,  //
    97,  103, 104, 101, 102, 104, 106, 110,  //
    103, 106, 110, 105, 103, 105, 103, 108,
};

const std::array<int, 64> kRoundedBlock = {
    105, 100, 105, 100, 110, 110, 105, 115,  //
    105, 105, 105, 110, 110, 110, 110, 115,  //
    105, 105, 105, 110, 110, 105, 105, 110,  //
    105, 105, 110, 110, 110, 110, 110, 105,  //
    105, 105, 120, 115, 110, 105, 110, 110,  //
    105, 105, 100, 105, 105, 105, 105, 115,  //
    95,  105, 105, 100, 100, 105, 105, 110,  //
    105, 105, 110, 105, 105, 105, 105, 110,
};

const std::array<int, 64> kReducedBlock = {
    21, 20, 21, 20, 22, 22, 21, 23,  //
    21, 21, 21, 22, 22, 22, 22, 23,  //
    21, 21, 21, 22, 22, 21, 21, 22,  //
    21, 21, 22, 22, 22, 22, 22, 21,  //
    21, 21, 24, 23, 22, 21, 22, 22,  //
    21, 21, 20, 21, 21, 21, 21, 23,  //
    19, 21, 21, 20, 20, 21, 21, 22,  //
    21, 21, 22, 21, 21, 21, 21, 22,
};

const std::array<int, 64> kOriginalDct = {
    853, -10, -2, -6, 2,  0,  2, 0,  //
    7,   -3,  -2, 6,  4,  0,  0, 0,  //
    -8,  -5,  6,  1,  0,  -4, 3, -1, //
    0,   -5,  5,  0,  1,  0,  2, 2,  //
    4,   4,   -4, -1, -3, 3,  5, 5,  //
    -8,  -3,  1,  3,  0,  0,  0, 1,  //
    -1,  2,   3,  3,  5,  -1, 1, 0,  //
    1,   2,   -3, -2, 0,  -1, 3, 3,
};

const std::array<int, 64> kReducedDct = {
    170, -2, 0, -1, 0, 0,  0, 0,  //
    1,   0,  0, 1,  1, 0,  0, 0,  //
    -1,  -1, 1, 0,  0, -1, 0, 0,  //
    0,   0,  0, 0,  0, 0,  0, 0,  //
    1,   0,  0, 0,  0, 0,  0, 1,  //
    -1,  0,  0, 0,  0, 0,  0, 0,  //
    0,   0,  0, 0,  1, 0,  0, 0,  //
    0,   0,  0, -1, 0, 0,  0, 0,
};

namespace {

void print_block(std::ostream& out, const char* title,
                 const std::array<int, 64>& b) {
  out << title << "\n";
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c)
      out << std::setw(5) << b[r * 8 + c];
    out << "\n";
  }
}

double block_std(const std::array<int, 64>& b) {
  return std_dev(std::vector<double>(b.begin(), b.end()));
}

double coef_std(const CoefBlock& c) {
  return std_dev(std::vector<double>(c.begin(), c.end()));
}

size_t count_nonzero(const std::array<int, 64>& b) {
  size_t n = 0;
  for (int v : b)
    if (v != 0) ++n;
  return n;
}

}  // namespace

bool run(std::ostream& out) {
  bool ok = true;

  print_block(out, "Original 8x8 block:", kOriginalBlock);

  std::array<int, 64> rounded{}, reduced{};
  for (int i = 0; i < 64; ++i) {
    rounded[i] = fmm_round(kOriginalBlock[i]);
    reduced[i] = rounded[i] / 5;
  }
  print_block(out, "\nRounded to multiples of 5:", rounded);
  print_block(out, "\nDivided by 5:", reduced);
  for (int i = 0; i < 64; ++i) {
    if (rounded[i] != kRoundedBlock[i]) {
      out << "MISMATCH rounded[" << i / 8 << "," << i % 8 << "] = "
          << rounded[i] << ", expected " << kRoundedBlock[i] << "\n";
      ok = false;
    }
    if (reduced[i] != kReducedBlock[i]) {
      out << "MISMATCH reduced[" << i / 8 << "," << i % 8 << "] = "
          << reduced[i] << ", expected " << kReducedBlock[i] << "\n";
      ok = false;
    }
  }

  SampleBlock orig, red;
  for (int i = 0; i < 64; ++i) {
    orig[i] = kOriginalBlock[i];
    red[i] = reduced[i];
  }
  CoefBlock dct_orig = dct_8x8(orig);
  CoefBlock dct_red = dct_8x8(red);

  auto print_coefs = [&](const char* title, const CoefBlock& c) {
    out << title << "\n";
    for (int r = 0; r < 8; ++r) {
      for (int k = 0; k < 8; ++k)
        out << std::setw(7) << std::lround(c[r * 8 + k]);
      out << "\n";
    }
  };
  print_coefs("\nDCT of the original block (rounded):", dct_orig);
  print_coefs("\nDCT of the reduced block (rounded):", dct_red);

  auto check_coefs = [&](const char* what, const CoefBlock& got,
                         const std::array<int, 64>& want) {
    for (int i = 0; i < 64; ++i)
      if (std::abs(got[i] - want[i]) > 1.0) {
        out << "MISMATCH " << what << "[" << i / 8 << "," << i % 8 << "] = "
            << got[i] << ", expected " << want[i] << " +/- 1.0\n";
        ok = false;
      }
  };
  check_coefs("dct(original)", dct_orig, kOriginalDct);
  check_coefs("dct(reduced)", dct_red, kReducedDct);

  struct StdCheck {
    const char* label;
    double got, want, tol;
  } stds[] = {
      {"STD original block", block_std(kOriginalBlock), kOriginalBlockStd, 0.01},
      {"STD reduced block", block_std(kReducedBlock), kReducedBlockStd, 0.01},
      {"STD original DCT", coef_std(dct_orig), kOriginalDctStd, 0.5},
      {"STD reduced DCT", coef_std(dct_red), kReducedDctStd, 0.5},
  };
  out << "\n" << std::fixed << std::setprecision(2);
  for (const auto& s : stds) {
    out << s.label << " = " << s.got << " (known-good " << s.want << ")\n";
    if (std::abs(s.got - s.want) > s.tol) {
      out << "MISMATCH " << s.label << "\n";
      ok = false;
    }
  }

  size_t nz_orig = count_nonzero(kOriginalDct);
  size_t nz_red = count_nonzero(kReducedDct);
  out << "Non-zero DCT cells: original = " << nz_orig
      << ", reduced = " << nz_red << "\n";
  if (!(nz_red < nz_orig)) {
    out << "MISMATCH non-zero counts\n";
    ok = false;
  }

  out << (ok ? "\nAll checks passed.\n" : "\nCHECKS FAILED.\n");
  return ok;
}

}  // namespace fjpeg::demo
