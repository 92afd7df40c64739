#include <cctype>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>

#include "bloommst/error.hpp"
#include "bloommst/segmentation.hpp"

namespace bloommst {
namespace {

// Reads header tokens, skipping whitespace and '#' comments.
std::string read_token(std::istream& in) {
  std::string token;
  int c;
  for (;;) {
    c = in.get();
    if (c == EOF) return token;
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
      continue;
    }
    if (!std::isspace(c)) break;
  }
  while (c != EOF && !std::isspace(c) && c != '#') {
    token.push_back(static_cast<char>(c));
    c = in.get();
  }
  if (c == '#') in.unget();
  return token;
}

std::size_t read_header_number(std::istream& in, const char* what) {
  const std::string token = read_token(in);
  if (token.empty()) throw ParseError(std::string("pixmap: missing ") + what);
  std::size_t value = 0;
  for (char ch : token) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError(std::string("pixmap: malformed ") + what);
    value = value * 10 + static_cast<std::size_t>(ch - '0');
    if (value > (1U << 30)) throw ParseError(std::string("pixmap: ") + what + " too large");
  }
  return value;
}

}  // namespace

PixelImage load_ppm(std::istream& in) {
  const std::string magic = read_token(in);
  if (magic != "P6" && magic != "P3") throw ParseError("pixmap: bad magic '" + magic + "'");
  const bool plain = magic == "P3";

  PixelImage img;
  img.width = read_header_number(in, "width");
  img.height = read_header_number(in, "height");
  const std::size_t maxval = read_header_number(in, "maxval");
  if (maxval != 255) throw ParseError("pixmap: only maxval 255 is supported");
  if (img.width == 0 || img.height == 0) throw ParseError("pixmap: empty image");
  if (img.width * img.height > (std::size_t{1} << 28)) throw ParseError("pixmap: image too large");

  const std::size_t count = img.width * img.height;
  img.pixels.resize(count);
  if (plain) {
    for (auto& px : img.pixels) {
      for (auto& channel : px) {
        const std::string token = read_token(in);
        if (token.empty()) throw ParseError("pixmap: truncated payload");
        std::size_t v = 0;
        for (char ch : token) {
          if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw ParseError("pixmap: malformed sample");
          v = v * 10 + static_cast<std::size_t>(ch - '0');
          if (v > 255) throw ParseError("pixmap: sample exceeds maxval");
        }
        channel = static_cast<std::uint8_t>(v);
      }
    }
    return img;
  }

  // read_token consumed the single whitespace byte after maxval.
  std::string payload(count * 3, '\0');
  in.read(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (static_cast<std::size_t>(in.gcount()) != payload.size())
    throw ParseError("pixmap: truncated payload");
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t c = 0; c < 3; ++c)
      img.pixels[i][c] = static_cast<std::uint8_t>(payload[i * 3 + c]);
  }
  return img;
}

void save_ppm(const PixelImage& img, std::ostream& out, bool plain) {
  out << (plain ? "P3" : "P6") << '\n' << img.width << ' ' << img.height << "\n255\n";
  if (plain) {
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
      const auto& px = img.pixels[i];
      out << int{px[0]} << ' ' << int{px[1]} << ' ' << int{px[2]}
          << ((i + 1) % img.width == 0 ? '\n' : ' ');
    }
    return;
  }
  for (const auto& px : img.pixels)
    out.write(reinterpret_cast<const char*>(px.data()), 3);
}

}  // namespace bloommst
