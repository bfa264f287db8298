#ifndef FJPEG_IMAGE_HPP
#define FJPEG_IMAGE_HPP

#include <cstdint>
#include <vector>

namespace fjpeg {

// Planar 8-bit image, 1 (gray) or 3 (RGB) channels.
// Each plane is row-major, width*height samples.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::vector<uint8_t>> planes;

  int channels() const { return static_cast<int>(planes.size()); }
  size_t plane_size() const { return static_cast<size_t>(width) * height; }
  bool valid() const;
};

// BT.601 luma, round half away from zero. Identity on single-plane images.
Image to_grayscale(const Image& img);

}  // namespace fjpeg

#endif
