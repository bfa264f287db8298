#include "fjpeg/metrics.hpp"

#include <cmath>
#include <limits>

#include "fjpeg/codec.hpp"
#include "fjpeg/error.hpp"

namespace fjpeg {

QualityStats mse_psnr(const Image& a, const Image& b) {
  if (a.width != b.width || a.height != b.height ||
      a.channels() != b.channels())
    throw Error("mse_psnr: image shapes differ");
  double sum = 0.0;
  size_t count = 0;
  for (int c = 0; c < a.channels(); ++c) {
    const auto& pa = a.planes[c];
    const auto& pb = b.planes[c];
    double plane_sum = 0.0;
    const int64_t n = static_cast<int64_t>(pa.size());
#pragma omp parallel for schedule(static) reduction(+ : plane_sum)
    for (int64_t i = 0; i < n; ++i) {
      double d = static_cast<double>(pa[i]) - pb[i];
      plane_sum += d * d;
    }
    sum += plane_sum;
    count += pa.size();
  }
  QualityStats s;
  s.mse = sum / static_cast<double>(count);
  s.psnr = s.mse == 0.0 ? std::numeric_limits<double>::infinity()
                        : 10.0 * std::log10(255.0 * 255.0 / s.mse);
  return s;
}

double compression_ratio(int width, int height, int channels,
                         size_t coded_bytes) {
  if (width < 1 || height < 1 || channels < 1)
    throw Error("compression_ratio: non-positive dimensions");
  if (coded_bytes == 0) throw Error("compression_ratio: zero coded size");
  return static_cast<double>(width) * height * channels /
         static_cast<double>(coded_bytes);
}

double std_dev(const std::vector<double>& values) {
  if (values.size() < 2) throw Error("std_dev: need at least 2 values");
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

size_t nonzero_count(const std::vector<QuantizedBlock>& blocks) {
  size_t n = 0;
  for (const auto& b : blocks)
    for (int32_t v : b)
      if (v != 0) ++n;
  return n;
}

ReportRow benchmark_image(const std::string& name, const Image& img,
                          int quality) {
  ReportRow row;
  row.name = name;
  row.raw_bytes = img.plane_size() * img.channels();
  try {
    for (Mode mode : {Mode::Baseline, Mode::Fmm}) {
      auto coded = encode(img, {mode, quality});
      auto decoded = decode(coded);
      auto q = mse_psnr(img, decoded);
      double cr =
          compression_ratio(img.width, img.height, img.channels(), coded.size());
      if (mode == Mode::Baseline) {
        row.baseline_bytes = coded.size();
        row.baseline_cr = cr;
        row.baseline_psnr = q.psnr;
      } else {
        row.fmm_bytes = coded.size();
        row.fmm_cr = cr;
        row.fmm_psnr = q.psnr;
      }
    }
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace fjpeg
