#ifndef FJPEG_METRICS_HPP
#define FJPEG_METRICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fjpeg/image.hpp"
#include "fjpeg/quant.hpp"

namespace fjpeg {

struct QualityStats {
  double mse = 0.0;
  double psnr = 0.0;  // infinity when mse == 0
};

// Mean squared error over all samples and PSNR with peak 255.
// Throws Error on dimension/channel mismatch.
QualityStats mse_psnr(const Image& a, const Image& b);

// raw bytes (w*h*c) over coded bytes, written "N:1".
double compression_ratio(int width, int height, int channels,
                         size_t coded_bytes);

// Standard deviation with the N-1 divisor; this is the estimator that
// matches the reference dispersion figures (3.84 on the worked-example
// block, the population divisor gives 3.81 and is rejected).
double std_dev(const std::vector<double>& values);

// Total non-zero coefficients across a block sequence.
size_t nonzero_count(const std::vector<QuantizedBlock>& blocks);

// One A/B benchmark row: both codec modes on one image.
struct ReportRow {
  std::string name;
  size_t raw_bytes = 0;
  size_t baseline_bytes = 0;
  size_t fmm_bytes = 0;
  double baseline_cr = 0.0;
  double fmm_cr = 0.0;
  double baseline_psnr = 0.0;
  double fmm_psnr = 0.0;
  std::string error;  // non-empty when this input failed
};

// Runs both modes and fills a row. Does not throw for per-image codec
// failures; those land in row.error.
ReportRow benchmark_image(const std::string& name, const Image& img,
                          int quality);

}  // namespace fjpeg

#endif
