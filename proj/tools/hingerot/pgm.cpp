#include "pgm.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

namespace hingerot::cli {

namespace {

// Header tokens are separated by whitespace; a '#' starts a comment running
// to end of line. Returns false on end of stream.
bool next_header_token(std::istream& in, std::string& tok) {
  tok.clear();
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (std::isspace(c)) {
      if (!tok.empty()) return true;
      continue;
    }
    tok.push_back(static_cast<char>(c));
  }
  return !tok.empty();
}

std::int64_t header_number(std::istream& in, const char* what,
                           std::int64_t max) {
  std::string tok;
  if (!next_header_token(in, tok)) {
    throw PgmError(std::string("unexpected end of header before ") + what);
  }
  std::int64_t value = 0;
  for (char ch : tok) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw PgmError(std::string("malformed ") + what + ": " + tok);
    }
    value = value * 10 + (ch - '0');
    if (value > max) {
      throw PgmError(std::string(what) + " out of range: " + tok);
    }
  }
  return value;
}

}  // namespace

PgmImage read_pgm(std::istream& in) {
  std::string magic;
  if (!next_header_token(in, magic) || (magic != "P2" && magic != "P5")) {
    throw PgmError("not a PGM file (expected P2 or P5 magic)");
  }
  const bool binary = magic == "P5";

  PgmImage img;
  img.binary = binary;
  img.width = header_number(in, "width", 1 << 20);
  img.height = header_number(in, "height", 1 << 20);
  img.maxval = static_cast<int>(header_number(in, "maxval", 255));
  if (img.width == 0 || img.height == 0) {
    throw PgmError("image dimensions must be positive");
  }
  if (img.maxval == 0) {
    throw PgmError("maxval must be positive");
  }

  const std::size_t count =
      static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height);
  if (count > (std::size_t{1} << 26)) {
    throw PgmError("image too large");
  }
  img.pixels.resize(count);

  if (binary) {
    // The single whitespace byte after the maxval token was consumed as its
    // terminator, so the raster starts exactly here. Raster bytes that
    // happen to look like whitespace are data.
    in.read(reinterpret_cast<char*>(img.pixels.data()),
            static_cast<std::streamsize>(count));
    if (static_cast<std::size_t>(in.gcount()) != count) {
      throw PgmError("raster shorter than width*height");
    }
    for (std::uint8_t v : img.pixels) {
      if (v > img.maxval) {
        throw PgmError("sample exceeds maxval");
      }
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const std::int64_t v = header_number(in, "sample", 255);
      if (v > img.maxval) {
        throw PgmError("sample exceeds maxval");
      }
      img.pixels[i] = static_cast<std::uint8_t>(v);
    }
  }

  // Anything but trailing whitespace after the raster is a corrupt file.
  int c;
  while ((c = in.get()) != EOF) {
    if (!std::isspace(c)) {
      throw PgmError("trailing data after raster");
    }
    if (binary) {
      throw PgmError("trailing data after raster");
    }
  }
  return img;
}

PgmImage read_pgm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw PgmError("cannot open " + path);
  }
  return read_pgm(in);
}

void write_pgm(std::ostream& out, const PgmImage& img, bool binary) {
  out << (binary ? "P5" : "P2") << '\n'
      << img.width << ' ' << img.height << '\n'
      << img.maxval << '\n';
  if (binary) {
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
  } else {
    for (std::int64_t y = 0; y < img.height; ++y) {
      for (std::int64_t x = 0; x < img.width; ++x) {
        out << int(img.at(x, y)) << (x + 1 == img.width ? '\n' : ' ');
      }
    }
  }
}

void write_pgm_file(const std::string& path, const PgmImage& img, bool binary) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw PgmError("cannot open " + path + " for writing");
  }
  write_pgm(out, img, binary);
  if (!out.flush()) {
    throw PgmError("write failed for " + path);
  }
}

}  // namespace hingerot::cli
