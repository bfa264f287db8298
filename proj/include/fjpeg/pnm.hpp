#ifndef FJPEG_PNM_HPP
#define FJPEG_PNM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fjpeg/image.hpp"

namespace fjpeg {

// Parses P2/P3 (ASCII) and P5/P6 (binary) netpbm images, maxval <= 255,
// '#' comments allowed in the header. Throws ParseError with the byte
// offset of the problem.
Image read_pnm(const std::vector<uint8_t>& bytes);

// Emits P5/P6 (or P2/P3 when ascii is set) with maxval 255.
// read_pnm(write_pnm(img)) == img.
std::vector<uint8_t> write_pnm(const Image& img, bool ascii = false);

Image load_pnm_file(const std::string& path);
void save_pnm_file(const std::string& path, const Image& img, bool ascii = false);

}  // namespace fjpeg

#endif
