#include "docfilter/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <stdexcept>
#include <vector>

namespace docfilter {

namespace {

std::uint8_t to_byte(double v) {
  return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
}

bool has_suffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         std::equal(suffix.rbegin(), suffix.rend(), s.rbegin(),
                    [](char a, char b) { return std::tolower(b) == a; });
}

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

// ---------------------------------------------------------------- PNG ----

struct PngReader {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngReader() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
  }
};

struct PngWriter {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngWriter() {
    if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
  }
};

// Reads the whole PNG into 8-bit rows; channels must be 1 (gray) or 3 (rgb).
std::vector<std::vector<std::uint8_t>> read_png_rows(const std::string& path,
                                                     int expect_channels,
                                                     int& width, int& height) {
  FilePtr file(std::fopen(path.c_str(), "rb"));
  if (!file) throw std::runtime_error("cannot open file: " + path);

  png_byte header[8];
  if (std::fread(header, 1, 8, file.get()) != 8 ||
      png_sig_cmp(header, 0, 8) != 0)
    throw std::runtime_error("not a PNG file: " + path);

  PngReader r;
  r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                 nullptr);
  if (!r.png) throw std::runtime_error("libpng init failed");
  r.info = png_create_info_struct(r.png);
  if (!r.info) throw std::runtime_error("libpng init failed");

  std::vector<std::vector<std::uint8_t>> rows;
  if (setjmp(png_jmpbuf(r.png)))
    throw std::runtime_error("corrupt PNG file: " + path);

  png_init_io(r.png, file.get());
  png_set_sig_bytes(r.png, 8);
  png_read_info(r.png, r.info);

  const int bit_depth = png_get_bit_depth(r.png, r.info);
  const int color_type = png_get_color_type(r.png, r.info);
  width = static_cast<int>(png_get_image_width(r.png, r.info));
  height = static_cast<int>(png_get_image_height(r.png, r.info));

  if (bit_depth != 8)
    throw std::runtime_error("unsupported PNG bit depth " +
                             std::to_string(bit_depth) + " (need 8): " + path);
  const int want = expect_channels == 3 ? PNG_COLOR_TYPE_RGB
                                        : PNG_COLOR_TYPE_GRAY;
  if (color_type != want) {
    const char* got = color_type == PNG_COLOR_TYPE_GRAY      ? "grayscale"
                      : color_type == PNG_COLOR_TYPE_RGB     ? "RGB"
                      : color_type == PNG_COLOR_TYPE_PALETTE ? "paletted"
                      : color_type == PNG_COLOR_TYPE_RGB_ALPHA ? "RGBA"
                                                               : "other";
    throw std::runtime_error(std::string("unsupported PNG color type (") +
                             got + "): " + path);
  }

  const int passes = png_set_interlace_handling(r.png);
  png_read_update_info(r.png, r.info);

  rows.assign(height, std::vector<std::uint8_t>(
                          static_cast<std::size_t>(width) * expect_channels));
  std::vector<png_bytep> row_ptrs(height);
  for (int y = 0; y < height; ++y) row_ptrs[y] = rows[y].data();
  for (int p = 0; p < passes; ++p)
    png_read_rows(r.png, row_ptrs.data(), nullptr, height);
  png_read_end(r.png, nullptr);
  return rows;
}

void write_png_rows(const std::string& path,
                    const std::vector<std::vector<std::uint8_t>>& rows,
                    int width, int height, int channels) {
  FilePtr file(std::fopen(path.c_str(), "wb"));
  if (!file) throw std::runtime_error("cannot write file: " + path);

  PngWriter w;
  w.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                  nullptr);
  if (!w.png) throw std::runtime_error("libpng init failed");
  w.info = png_create_info_struct(w.png);
  if (!w.info) throw std::runtime_error("libpng init failed");

  if (setjmp(png_jmpbuf(w.png)))
    throw std::runtime_error("PNG write failed: " + path);

  png_init_io(w.png, file.get());
  png_set_IHDR(w.png, w.info, width, height, 8,
               channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(w.png, w.info);
  for (int y = 0; y < height; ++y)
    png_write_row(w.png, const_cast<png_bytep>(rows[y].data()));
  png_write_end(w.png, nullptr);
}

// ------------------------------------------------------------- PNM P5/P6 ----

// Reads one whitespace/comment-separated token from a PNM header.
std::string pnm_token(std::istream& in) {
  std::string tok;
  int ch;
  while ((ch = in.get()) != EOF) {
    if (ch == '#') {
      while ((ch = in.get()) != EOF && ch != '\n') {
      }
      continue;
    }
    if (std::isspace(ch)) {
      if (!tok.empty()) break;
      continue;
    }
    tok.push_back(static_cast<char>(ch));
  }
  if (tok.empty()) throw std::runtime_error("truncated PNM header");
  return tok;
}

std::vector<std::uint8_t> read_pnm(const std::string& path,
                                   const char* magic_expected, int channels,
                                   int& width, int& height) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);

  const std::string magic = pnm_token(in);
  if (magic != magic_expected)
    throw std::runtime_error("unsupported PNM magic '" + magic + "' in " +
                             path);
  width = std::stoi(pnm_token(in));
  height = std::stoi(pnm_token(in));
  const int maxval = std::stoi(pnm_token(in));
  if (width < 1 || height < 1)
    throw std::runtime_error("bad PNM dimensions in " + path);
  if (maxval != 255)
    throw std::runtime_error("unsupported PNM maxval " +
                             std::to_string(maxval) + " (need 255, 8-bit): " +
                             path);

  std::vector<std::uint8_t> data(static_cast<std::size_t>(width) * height *
                                 channels);
  in.read(reinterpret_cast<char*>(data.data()),
          static_cast<std::streamsize>(data.size()));
  if (in.gcount() != static_cast<std::streamsize>(data.size()))
    throw std::runtime_error("truncated PNM pixel data in " + path);
  return data;
}

void write_pnm(const std::string& path, const char* magic,
               const std::vector<std::uint8_t>& data, int width, int height) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << magic << "\n" << width << " " << height << "\n255\n";
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

bool file_starts_with_png(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  unsigned char sig[8] = {};
  in.read(reinterpret_cast<char*>(sig), 8);
  return in.gcount() >= 8 && png_sig_cmp(sig, 0, 8) == 0;
}

}  // namespace

ColorImage load_image(const std::string& path) {
  int w = 0, h = 0;
  if (file_starts_with_png(path)) {
    const auto rows = read_png_rows(path, 3, w, h);
    ColorImage img(w, h, ColorSpace::Rgb);
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) {
        const std::uint8_t* p = &rows[y][static_cast<std::size_t>(x) * 3];
        img.at(x, y) = {static_cast<double>(p[0]), static_cast<double>(p[1]),
                        static_cast<double>(p[2])};
      }
    return img;
  }
  const auto data = read_pnm(path, "P6", 3, w, h);
  ColorImage img(w, h, ColorSpace::Rgb);
  for (std::size_t i = 0; i < img.pixels().size(); ++i)
    img.pixels()[i] = {static_cast<double>(data[3 * i]),
                       static_cast<double>(data[3 * i + 1]),
                       static_cast<double>(data[3 * i + 2])};
  return img;
}

void save_image(const ColorImage& img, const std::string& path) {
  if (img.space() != ColorSpace::Rgb)
    throw std::invalid_argument("save_image: image must be RGB; convert first");

  const int w = img.width(), h = img.height();
  if (has_suffix(path, ".png")) {
    std::vector<std::vector<std::uint8_t>> rows(
        h, std::vector<std::uint8_t>(static_cast<std::size_t>(w) * 3));
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) {
        const Pixel& p = img.at(x, y);
        std::uint8_t* d = &rows[y][static_cast<std::size_t>(x) * 3];
        d[0] = to_byte(p.c0);
        d[1] = to_byte(p.c1);
        d[2] = to_byte(p.c2);
      }
    write_png_rows(path, rows, w, h, 3);
    return;
  }
  if (has_suffix(path, ".ppm")) {
    std::vector<std::uint8_t> data(static_cast<std::size_t>(w) * h * 3);
    for (std::size_t i = 0; i < img.pixels().size(); ++i) {
      const Pixel& p = img.pixels()[i];
      data[3 * i] = to_byte(p.c0);
      data[3 * i + 1] = to_byte(p.c1);
      data[3 * i + 2] = to_byte(p.c2);
    }
    write_pnm(path, "P6", data, w, h);
    return;
  }
  throw std::invalid_argument("save_image: unsupported extension (use .png or .ppm): " +
                              path);
}

ScalarImage load_scalar_image(const std::string& path) {
  int w = 0, h = 0;
  std::vector<std::uint8_t> data;
  if (file_starts_with_png(path)) {
    const auto rows = read_png_rows(path, 1, w, h);
    ScalarImage img(w, h);
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x)
        img.at(x, y) = static_cast<double>(rows[y][x]);
    return img;
  }
  data = read_pnm(path, "P5", 1, w, h);
  ScalarImage img(w, h);
  for (std::size_t i = 0; i < img.values().size(); ++i)
    img.values()[i] = static_cast<double>(data[i]);
  return img;
}

void save_scalar_image(const ScalarImage& img, const std::string& path) {
  const int w = img.width(), h = img.height();
  if (has_suffix(path, ".png")) {
    std::vector<std::vector<std::uint8_t>> rows(
        h, std::vector<std::uint8_t>(static_cast<std::size_t>(w)));
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) rows[y][x] = to_byte(img.at(x, y));
    write_png_rows(path, rows, w, h, 1);
    return;
  }
  if (has_suffix(path, ".pgm")) {
    std::vector<std::uint8_t> data(static_cast<std::size_t>(w) * h);
    for (std::size_t i = 0; i < img.values().size(); ++i)
      data[i] = to_byte(img.values()[i]);
    write_pnm(path, "P5", data, w, h);
    return;
  }
  throw std::invalid_argument(
      "save_scalar_image: unsupported extension (use .png or .pgm): " + path);
}

}  // namespace docfilter
