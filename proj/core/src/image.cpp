#include "docfilter/image.hpp"

#include <algorithm>
#include <stdexcept>

namespace docfilter {

std::string colorspace_name(ColorSpace space) {
  return space == ColorSpace::Rgb ? "rgb" : "hsb";
}

ColorSpace parse_colorspace(const std::string& name) {
  if (name == "rgb") return ColorSpace::Rgb;
  if (name == "hsb") return ColorSpace::Hsb;
  throw std::invalid_argument("unknown color space: '" + name +
                              "' (expected rgb or hsb)");
}

ColorImage::ColorImage(int width, int height, ColorSpace space, Pixel fill)
    : width_(width), height_(height), space_(space) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("image dimensions must be >= 1");
  pixels_.assign(static_cast<std::size_t>(width) * height, fill);
}

ColorImage::ColorImage(int width, int height, ColorSpace space,
                       std::vector<Pixel> pixels)
    : width_(width), height_(height), space_(space), pixels_(std::move(pixels)) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("image dimensions must be >= 1");
  if (pixels_.size() != static_cast<std::size_t>(width) * height)
    throw std::invalid_argument("pixel count does not match width * height");
}

bool ColorImage::all_finite() const {
  for (const Pixel& p : pixels_) {
    if (!std::isfinite(p.c0) || !std::isfinite(p.c1) || !std::isfinite(p.c2))
      return false;
  }
  return true;
}

ScalarImage::ScalarImage(int width, int height, double fill)
    : width_(width), height_(height) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("image dimensions must be >= 1");
  values_.assign(static_cast<std::size_t>(width) * height, fill);
}

ScalarImage::ScalarImage(int width, int height, std::vector<double> values)
    : width_(width), height_(height), values_(std::move(values)) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("image dimensions must be >= 1");
  if (values_.size() != static_cast<std::size_t>(width) * height)
    throw std::invalid_argument("value count does not match width * height");
}

namespace {

// Shared replicate-pad loop; Grid is ColorImage or ScalarImage.
template <typename Grid>
Grid pad_replicate_impl(const Grid& img, int margin, Grid out) {
  const int w = img.width();
  const int h = img.height();
  for (int y = 0; y < h + 2 * margin; ++y) {
    const int sy = std::clamp(y - margin, 0, h - 1);
    for (int x = 0; x < w + 2 * margin; ++x) {
      const int sx = std::clamp(x - margin, 0, w - 1);
      out.at(x, y) = img.at(sx, sy);
    }
  }
  return out;
}

}  // namespace

ColorImage pad_replicate(const ColorImage& img, int margin) {
  if (margin < 0) throw std::invalid_argument("pad margin must be >= 0");
  if (margin == 0) return img;
  ColorImage out(img.width() + 2 * margin, img.height() + 2 * margin,
                 img.space());
  return pad_replicate_impl(img, margin, std::move(out));
}

ScalarImage pad_replicate(const ScalarImage& img, int margin) {
  if (margin < 0) throw std::invalid_argument("pad margin must be >= 0");
  if (margin == 0) return img;
  ScalarImage out(img.width() + 2 * margin, img.height() + 2 * margin);
  return pad_replicate_impl(img, margin, std::move(out));
}

}  // namespace docfilter
