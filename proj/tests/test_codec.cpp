#include <doctest.h>

#include <cmath>
#include <random>
#include <tuple>

#include "fjpeg/codec.hpp"
#include "fjpeg/demo.hpp"
#include "fjpeg/error.hpp"
#include "fjpeg/metrics.hpp"

using namespace fjpeg;

namespace {

Image noise_image(int w, int h, int channels, uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> val(0, 255);
  Image img;
  img.width = w;
  img.height = h;
  img.planes.resize(channels);
  for (auto& p : img.planes) {
    p.resize(img.plane_size());
    for (auto& v : p) v = static_cast<uint8_t>(val(rng));
  }
  return img;
}

// Smooth synthetic content, closer to photographic statistics than noise.
Image smooth_image(int w, int h, int channels) {
  Image img;
  img.width = w;
  img.height = h;
  img.planes.resize(channels);
  for (int c = 0; c < channels; ++c) {
    img.planes[c].resize(img.plane_size());
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) {
        double v = 128 + 60 * std::sin(0.05 * x + c) * std::cos(0.04 * y) +
                   20 * std::sin(0.21 * (x + y));
        int iv = static_cast<int>(v);
        img.planes[c][static_cast<size_t>(y) * w + x] =
            static_cast<uint8_t>(iv < 0 ? 0 : iv > 255 ? 255 : iv);
      }
  }
  return img;
}

}  // namespace

TEST_CASE("encode/decode preserves dimensions and channels") {
  for (auto [w, h, c] : {std::tuple{8, 8, 1}, {17, 9, 3}, {1, 1, 1},
                         {64, 64, 3}, {100, 31, 1}}) {
    Image img = noise_image(w, h, c, 101);
    for (Mode mode : {Mode::Baseline, Mode::Fmm}) {
      Image out = decode(encode(img, {mode, 75}));
      CHECK(out.width == w);
      CHECK(out.height == h);
      CHECK(out.channels() == c);
    }
  }
}

TEST_CASE("baseline quality 100 is near-lossless (per-sample error <= 1)") {
  // At quality 100 every divisor is 1, but quantization still rounds each
  // coefficient to an integer; that +/-0.5 per coefficient can move a
  // reconstructed sample by one count. Measured bound over noise blocks: 1.
  for (auto [w, h, c] : {std::tuple{8, 8, 1}, {64, 32, 3}, {16, 16, 1}}) {
    Image img = noise_image(w, h, c, 202);
    Image out = decode(encode(img, {Mode::Baseline, 100}));
    for (int i = 0; i < c; ++i)
      for (size_t k = 0; k < img.planes[i].size(); ++k)
        CHECK(std::abs(int(out.planes[i][k]) - int(img.planes[i][k])) <= 1);
  }
}

TEST_CASE("fmm quality 100 on the worked-example block: FMM loss only, "
          "plus at most one reduced-domain count per sample") {
  Image img;
  img.width = 8;
  img.height = 8;
  img.planes.resize(1);
  img.planes[0].assign(demo::kOriginalBlock.begin(), demo::kOriginalBlock.end());
  Image out = decode(encode(img, {Mode::Fmm, 100}));
  for (int i = 0; i < 64; ++i)
    CHECK(std::abs(int(out.planes[0][i]) - demo::kRoundedBlock[i]) <= 5);
}

TEST_CASE("fmm coded size beats baseline on smooth content") {
  Image img = smooth_image(128, 128, 1);
  auto base = encode(img, {Mode::Baseline, 75});
  auto fmm = encode(img, {Mode::Fmm, 75});
  CHECK(fmm.size() < base.size());
}

TEST_CASE("constant image codes tiny and near-equal across modes") {
  Image img;
  img.width = 64;
  img.height = 64;
  img.planes.assign(1, std::vector<uint8_t>(64 * 64, 120));
  auto base = encode(img, {Mode::Baseline, 50});
  auto fmm = encode(img, {Mode::Fmm, 50});
  // 64 blocks of (DC delta + EOB) plus the 16-byte header
  CHECK(base.size() < 80);
  CHECK(std::abs(long(base.size()) - long(fmm.size())) <= 8);
  Image out = decode(encode(img, {Mode::Fmm, 50}));
  CHECK(out.planes[0] == img.planes[0]);
}

TEST_CASE("encode determinism") {
  Image img = noise_image(40, 56, 3, 303);
  CodecConfig cfg{Mode::Fmm, 75};
  CHECK(encode(img, cfg) == encode(img, cfg));
}

TEST_CASE("inspect reports the header fields") {
  Image img = noise_image(33, 21, 3, 404);
  auto coded = encode(img, {Mode::Fmm, 80});
  auto info = inspect(coded);
  CHECK(info.version == 1);
  CHECK(info.mode == Mode::Fmm);
  CHECK(info.width == 33);
  CHECK(info.height == 21);
  CHECK(info.channels == 3);
  CHECK(info.quality == 80);
  REQUIRE(info.payload_sizes.size() == 3);
  size_t sum = 16 + 4 * 3;
  for (auto s : info.payload_sizes) sum += s;
  CHECK(sum == coded.size());
}

TEST_CASE("container golden header layout") {
  Image img;
  img.width = 1;
  img.height = 1;
  img.planes.assign(1, std::vector<uint8_t>{0});
  auto coded = encode(img, {Mode::Baseline, 75});
  REQUIRE(coded.size() > 16);
  CHECK(coded[0] == 'F');
  CHECK(coded[1] == 'J');
  CHECK(coded[2] == 'P');
  CHECK(coded[3] == 'G');
  CHECK(coded[4] == 1);   // version
  CHECK(coded[5] == 0);   // baseline
  CHECK(coded[9] == 1);   // width low byte (big-endian u32)
  CHECK(coded[13] == 1);  // height low byte
  CHECK(coded[14] == 1);  // channels
  CHECK(coded[15] == 75); // quality
}

TEST_CASE("malformed containers raise structured errors") {
  Image img = noise_image(16, 16, 1, 505);
  auto coded = encode(img, {Mode::Fmm, 75});

  auto bad_magic = coded;
  bad_magic[0] = 'X';
  CHECK_THROWS_AS(decode(bad_magic), DecodeError);

  auto bad_version = coded;
  bad_version[4] = 9;
  CHECK_THROWS_AS(decode(bad_version), DecodeError);

  auto bad_mode = coded;
  bad_mode[5] = 7;
  CHECK_THROWS_AS(decode(bad_mode), DecodeError);

  auto truncated = coded;
  truncated.resize(truncated.size() - 5);
  CHECK_THROWS_AS(decode(truncated), DecodeError);

  auto trailing = coded;
  trailing.push_back(0);
  CHECK_THROWS_AS(inspect(trailing), DecodeError);

  CHECK_THROWS_AS(decode(std::vector<uint8_t>{'F', 'J'}), DecodeError);
}
