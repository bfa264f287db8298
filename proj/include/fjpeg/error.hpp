#ifndef FJPEG_ERROR_HPP
#define FJPEG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fjpeg {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file (PNM header/payload, container header).
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, size_t byte_offset)
      : Error(msg + " (at byte " + std::to_string(byte_offset) + ")"),
        offset(byte_offset) {}
  size_t offset;
};

// Entropy/container decode failure.
class DecodeError : public Error {
 public:
  enum class Kind {
    Truncated,
    BadHuffmanCode,
    RunOverflow,
    BadHeader,
    LengthMismatch,
  };
  DecodeError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
  Kind kind;
};

}  // namespace fjpeg

#endif
