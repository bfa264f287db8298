#include "fjpeg/pnm.hpp"

#include <cctype>
#include <fstream>

#include "fjpeg/error.hpp"

namespace fjpeg {

namespace {

struct Cursor {
  const std::vector<uint8_t>& bytes;
  size_t pos = 0;

  bool eof() const { return pos >= bytes.size(); }
  uint8_t peek() const { return bytes[pos]; }

  // Skips whitespace and '#' comments (to end of line).
  void skip_space_and_comments() {
    while (!eof()) {
      uint8_t c = peek();
      if (std::isspace(c)) {
        ++pos;
      } else if (c == '#') {
        while (!eof() && peek() != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  int read_uint(const char* what) {
    skip_space_and_comments();
    if (eof() || !std::isdigit(peek()))
      throw ParseError(std::string("expected ") + what, pos);
    long v = 0;
    while (!eof() && std::isdigit(peek())) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000'000) throw ParseError(std::string(what) + " too large", pos);
      ++pos;
    }
    return static_cast<int>(v);
  }
};

}  // namespace

Image read_pnm(const std::vector<uint8_t>& bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P')
    throw ParseError("not a PNM file (bad magic)", 0);
  char kind = static_cast<char>(bytes[1]);
  if (kind != '2' && kind != '3' && kind != '5' && kind != '6')
    throw ParseError("unsupported PNM variant", 1);
  bool ascii = kind == '2' || kind == '3';
  int channels = (kind == '3' || kind == '6') ? 3 : 1;

  Cursor cur{bytes, 2};
  int width = cur.read_uint("width");
  int height = cur.read_uint("height");
  int maxval = cur.read_uint("maxval");
  if (width < 1 || height < 1)
    throw ParseError("non-positive dimensions", cur.pos);
  if (maxval < 1 || maxval > 255)
    throw ParseError("maxval out of range (must be 1..255)", cur.pos);

  Image img;
  img.width = width;
  img.height = height;
  img.planes.assign(channels, std::vector<uint8_t>(img.plane_size()));

  size_t total = img.plane_size() * channels;
  if (ascii) {
    for (size_t i = 0; i < total; ++i) {
      int v = cur.read_uint("sample");
      if (v > maxval) throw ParseError("sample exceeds maxval", cur.pos);
      img.planes[i % channels][i / channels] = static_cast<uint8_t>(v);
    }
  } else {
    // Exactly one whitespace byte separates maxval from the payload.
    if (cur.eof() || !std::isspace(cur.peek()))
      throw ParseError("expected whitespace before binary payload", cur.pos);
    ++cur.pos;
    if (bytes.size() - cur.pos < total)
      throw ParseError("truncated payload", bytes.size());
    for (size_t i = 0; i < total; ++i) {
      uint8_t v = bytes[cur.pos + i];
      if (v > maxval) throw ParseError("sample exceeds maxval", cur.pos + i);
      img.planes[i % channels][i / channels] = v;
    }
  }
  return img;
}

std::vector<uint8_t> write_pnm(const Image& img, bool ascii) {
  if (!img.valid()) throw Error("write_pnm: invalid image");
  bool color = img.channels() == 3;
  std::string header;
  header += color ? (ascii ? "P3" : "P6") : (ascii ? "P2" : "P5");
  header += ' ' + std::to_string(img.width) + ' ' + std::to_string(img.height) +
            " 255\n";

  std::vector<uint8_t> out(header.begin(), header.end());
  size_t total = img.plane_size() * img.channels();
  if (ascii) {
    std::string body;
    for (size_t i = 0; i < total; ++i) {
      body += std::to_string(img.planes[i % img.channels()][i / img.channels()]);
      body += (i + 1) % 12 == 0 ? '\n' : ' ';
    }
    if (!body.empty() && body.back() == ' ') body.back() = '\n';
    out.insert(out.end(), body.begin(), body.end());
  } else {
    out.reserve(out.size() + total);
    for (size_t i = 0; i < total; ++i)
      out.push_back(img.planes[i % img.channels()][i / img.channels()]);
  }
  return out;
}

Image load_pnm_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                             std::istreambuf_iterator<char>());
  return read_pnm(bytes);
}

void save_pnm_file(const std::string& path, const Image& img, bool ascii) {
  auto bytes = write_pnm(img, ascii);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path + " for writing");
  f.write(reinterpret_cast<const char*>(bytes.data()),
          static_cast<std::streamsize>(bytes.size()));
  if (!f) throw Error("write failed: " + path);
}

}  // namespace fjpeg
