#include <doctest.h>

#include <cmath>
#include <random>

#include "fjpeg/demo.hpp"
#include "fjpeg/error.hpp"
#include "fjpeg/transform.hpp"
#include "reference.hpp"

using namespace fjpeg;

namespace {

SampleBlock from_array(const std::array<int, 64>& a) {
  SampleBlock b;
  for (int i = 0; i < 64; ++i) b[i] = a[i];
  return b;
}

}  // namespace

TEST_CASE("dct_8x8 matches the worked-example coefficient tables") {
  auto f1 = dct_8x8(from_array(demo::kOriginalBlock));
  for (int i = 0; i < 64; ++i)
    CHECK(std::abs(f1[i] - demo::kOriginalDct[i]) <= 1.0);

  auto f3 = dct_8x8(from_array(demo::kReducedBlock));
  for (int i = 0; i < 64; ++i)
    CHECK(std::abs(f3[i] - demo::kReducedDct[i]) <= 1.0);
  CHECK(f3[0] == doctest::Approx(170.0).epsilon(0.01));
}

TEST_CASE("dct_8x8 of a constant block") {
  SampleBlock b;
  b.fill(37);
  auto f = dct_8x8(b);
  CHECK(f[0] == doctest::Approx(8.0 * 37).epsilon(1e-12));
  for (int i = 1; i < 64; ++i) CHECK(std::abs(f[i]) < 1e-9);
}

TEST_CASE("dct_8x8 agrees with the naive double-sum oracle") {
  std::mt19937 rng(42);
  for (int t = 0; t < 100; ++t) {
    auto b = reference::random_block(rng);
    auto fast = dct_8x8(b);
    auto naive = reference::dct_naive(b);
    for (int i = 0; i < 64; ++i)
      CHECK(std::abs(fast[i] - naive[i]) < 1e-9);
  }
}

TEST_CASE("idct inverts dct exactly after rounding") {
  std::mt19937 rng(7);
  for (int t = 0; t < 1000; ++t) {
    auto b = reference::random_block(rng);
    auto f = idct_8x8(dct_8x8(b));
    for (int i = 0; i < 64; ++i)
      CHECK(static_cast<int>(std::lround(f[i])) == b[i]);
  }
}

TEST_CASE("idct of all-zero coefficients is zero") {
  CoefBlock c{};
  auto f = idct_8x8(c);
  for (double v : f) CHECK(v == 0.0);
}

TEST_CASE("Parseval energy conservation") {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    auto b = reference::random_block(rng);
    auto f = dct_8x8(b);
    double es = 0, ef = 0;
    for (int i = 0; i < 64; ++i) {
      es += double(b[i]) * b[i];
      ef += f[i] * f[i];
    }
    CHECK(std::abs(es - ef) <= 1e-6 * es);
  }
}

TEST_CASE("dct linearity") {
  std::mt19937 rng(13);
  auto x = reference::random_block(rng);
  auto y = reference::random_block(rng);
  SampleBlock z;
  for (int i = 0; i < 64; ++i) z[i] = 3 * x[i] - 2 * y[i];
  auto fx = dct_8x8(x), fy = dct_8x8(y), fz = dct_8x8(z);
  for (int i = 0; i < 64; ++i)
    CHECK(std::abs(fz[i] - (3 * fx[i] - 2 * fy[i])) < 1e-9);
}

TEST_CASE("split_blocks 16x8 gives two raster-order blocks") {
  std::vector<uint8_t> plane(16 * 8);
  for (size_t i = 0; i < plane.size(); ++i)
    plane[i] = static_cast<uint8_t>(i);
  auto blocks = split_blocks(plane, 16, 8);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0][0] == 0);
  CHECK(blocks[1][0] == 8);
  CHECK(blocks[0][63] == plane[7 * 16 + 7]);
}

TEST_CASE("split_blocks pads 9x9 by edge replication") {
  std::vector<uint8_t> plane(81);
  for (size_t i = 0; i < 81; ++i) plane[i] = static_cast<uint8_t>(i + 1);
  auto blocks = split_blocks(plane, 9, 9);
  REQUIRE(blocks.size() == 4);
  // right block: columns past x=8 replicate column 8
  CHECK(blocks[1][0] == plane[8]);
  CHECK(blocks[1][1] == plane[8]);
  // bottom-right block replicates the corner sample
  CHECK(blocks[3][63] == plane[80]);
}

TEST_CASE("split/merge round trip on arbitrary sizes") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> dim(1, 50);
  std::uniform_int_distribution<int> val(0, 255);
  for (int t = 0; t < 100; ++t) {
    int w = dim(rng), h = dim(rng);
    std::vector<uint8_t> plane(static_cast<size_t>(w) * h);
    for (auto& v : plane) v = static_cast<uint8_t>(val(rng));
    CHECK(merge_blocks(split_blocks(plane, w, h), w, h) == plane);
  }
}

TEST_CASE("merge_blocks rejects a block-count mismatch") {
  std::vector<SampleBlock> blocks(3);
  CHECK_THROWS_AS(merge_blocks(blocks, 16, 8), Error);
}

TEST_CASE("parallel and serial block transforms agree bit-exactly") {
  std::mt19937 rng(23);
  std::vector<SampleBlock> blocks(257);
  for (auto& b : blocks) b = reference::random_block(rng);
  auto par = dct_blocks(blocks);
  auto ser = serial::dct_blocks(blocks);
  REQUIRE(par.size() == ser.size());
  for (size_t i = 0; i < par.size(); ++i)
    for (int k = 0; k < 64; ++k) CHECK(par[i][k] == ser[i][k]);
  CHECK(idct_blocks_rounded(par) == serial::idct_blocks_rounded(ser));
}
