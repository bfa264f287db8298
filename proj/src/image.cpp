#include "fjpeg/image.hpp"

#include <cmath>

#include "fjpeg/error.hpp"

namespace fjpeg {

bool Image::valid() const {
  if (width < 1 || height < 1) return false;
  if (planes.size() != 1 && planes.size() != 3) return false;
  for (const auto& p : planes)
    if (p.size() != plane_size()) return false;
  return true;
}

Image to_grayscale(const Image& img) {
  if (!img.valid()) throw Error("to_grayscale: invalid image");
  if (img.channels() == 1) return img;

  Image out;
  out.width = img.width;
  out.height = img.height;
  out.planes.resize(1);
  auto& y = out.planes[0];
  y.resize(img.plane_size());
  const auto& r = img.planes[0];
  const auto& g = img.planes[1];
  const auto& b = img.planes[2];
  for (size_t i = 0; i < y.size(); ++i) {
    long v = std::lround(0.299 * r[i] + 0.587 * g[i] + 0.114 * b[i]);
    y[i] = static_cast<uint8_t>(v < 0 ? 0 : v > 255 ? 255 : v);
  }
  return out;
}

}  // namespace fjpeg
