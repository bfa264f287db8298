#include <doctest.h>

#include <cmath>

#include "fjpeg/demo.hpp"
#include "fjpeg/error.hpp"
#include "fjpeg/metrics.hpp"

using namespace fjpeg;

TEST_CASE("mse_psnr identical images") {
  Image a{4, 4, {std::vector<uint8_t>(16, 42)}};
  auto q = mse_psnr(a, a);
  CHECK(q.mse == 0.0);
  CHECK(std::isinf(q.psnr));
}

TEST_CASE("mse_psnr constant offset of 2") {
  Image a{8, 8, {std::vector<uint8_t>(64, 100)}};
  Image b{8, 8, {std::vector<uint8_t>(64, 102)}};
  auto q = mse_psnr(a, b);
  CHECK(q.mse == doctest::Approx(4.0));
  CHECK(q.psnr == doctest::Approx(10.0 * std::log10(255.0 * 255.0 / 4.0))
                      .epsilon(1e-12));
  CHECK(q.psnr == doctest::Approx(42.11).epsilon(0.001));
  // symmetry
  auto q2 = mse_psnr(b, a);
  CHECK(q2.mse == q.mse);
}

TEST_CASE("mse_psnr rejects shape mismatch") {
  Image a{4, 4, {std::vector<uint8_t>(16, 0)}};
  Image b{4, 5, {std::vector<uint8_t>(20, 0)}};
  CHECK_THROWS_AS(mse_psnr(a, b), Error);
}

TEST_CASE("compression_ratio against the published size arithmetic") {
  // 512x512x3 raw with the published coded sizes (KB = 1024 bytes)
  CHECK(compression_ratio(512, 512, 3, size_t(36.9 * 1024)) ==
        doctest::Approx(20.8).epsilon(0.005));
  CHECK(compression_ratio(512, 512, 3, size_t(75.6 * 1024)) ==
        doctest::Approx(10.2).epsilon(0.005));
  CHECK(compression_ratio(512, 512, 3, size_t(40.5 * 1024)) ==
        doctest::Approx(19.0).epsilon(0.005));
  CHECK(compression_ratio(10, 10, 1, 100) == doctest::Approx(1.0));
  CHECK_THROWS_AS(compression_ratio(10, 10, 1, 0), Error);
}

TEST_CASE("std_dev reproduces the worked-example dispersion figures") {
  auto of = [](const std::array<int, 64>& a) {
    return std_dev(std::vector<double>(a.begin(), a.end()));
  };
  CHECK(of(demo::kOriginalBlock) == doctest::Approx(3.84).epsilon(0.003));
  CHECK(of(demo::kReducedBlock) == doctest::Approx(0.85).epsilon(0.012));
}

TEST_CASE("std_dev basics") {
  CHECK(std_dev({5.0, 5.0, 5.0}) == 0.0);
  CHECK_THROWS_AS(std_dev({1.0}), Error);
  // homogeneity: std(k*x) = k*std(x)
  std::vector<double> x{1, 2, 3, 4, 5, 9};
  std::vector<double> kx;
  for (double v : x) kx.push_back(3.0 * v);
  CHECK(std_dev(kx) == doctest::Approx(3.0 * std_dev(x)).epsilon(1e-12));
}

TEST_CASE("nonzero_count") {
  std::vector<QuantizedBlock> blocks(3);
  for (auto& b : blocks) b.fill(0);
  CHECK(nonzero_count(blocks) == 0);
  blocks[0][0] = 5;
  blocks[2][63] = -1;
  CHECK(nonzero_count(blocks) == 2);
}

TEST_CASE("worked-example coefficient tables have 50 and 15 non-zeros") {
  auto count = [](const std::array<int, 64>& a) {
    size_t n = 0;
    for (int v : a)
      if (v) ++n;
    return n;
  };
  CHECK(count(demo::kOriginalDct) == 50);
  CHECK(count(demo::kReducedDct) == 15);
}
