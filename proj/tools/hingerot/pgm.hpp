#pragma once

// Minimal strict PGM (P2/P5) reader and writer, 8-bit only. Strictness is
// deliberate: rotation output must be byte-reproducible, so the parser
// rejects anything a re-render would not reproduce semantically (bad raster
// size, out-of-range samples, trailing data).

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace hingerot::cli {

class PgmError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PgmImage {
  std::int64_t width = 0;
  std::int64_t height = 0;
  int maxval = 255;
  bool binary = false;  // magic the image was read with (true = P5)
  std::vector<std::uint8_t> pixels;  // row-major, top row first

  std::uint8_t at(std::int64_t x, std::int64_t y) const {
    return pixels[static_cast<std::size_t>(y * width + x)];
  }
  std::uint8_t& at(std::int64_t x, std::int64_t y) {
    return pixels[static_cast<std::size_t>(y * width + x)];
  }
  // The source format is carried for writers that want to match it, but two
  // images with the same pixel data are equal either way.
  friend bool operator==(const PgmImage& a, const PgmImage& b) {
    return a.width == b.width && a.height == b.height &&
           a.maxval == b.maxval && a.pixels == b.pixels;
  }
};

// Accepts P2 (ASCII) and P5 (binary) with maxval in [1, 255] and '#'
// comments anywhere whitespace may appear in the header. Throws PgmError.
PgmImage read_pgm(std::istream& in);
PgmImage read_pgm_file(const std::string& path);

// binary selects P5, otherwise P2. Always writes a single trailing newline
// after the P2 raster and nothing after the P5 raster.
void write_pgm(std::ostream& out, const PgmImage& img, bool binary);
void write_pgm_file(const std::string& path, const PgmImage& img, bool binary);

}  // namespace hingerot::cli
