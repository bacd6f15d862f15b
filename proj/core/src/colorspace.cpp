#include "docfilter/colorspace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace docfilter {

namespace {

constexpr double kRangeTolerance = 1e-6;
constexpr double kHueScale = 255.0 / 360.0;  // degrees -> scaled hue

void check_range(const ColorImage& img, const char* op) {
  for (const Pixel& p : img.pixels()) {
    for (double c : {p.c0, p.c1, p.c2}) {
      if (!(c >= -kRangeTolerance && c <= 255.0 + kRangeTolerance))
        throw std::invalid_argument(std::string(op) +
                                    ": component outside [0, 255]");
    }
  }
}

Pixel rgb_pixel_to_hsb(const Pixel& p) {
  const double r = p.c0, g = p.c1, b = p.c2;
  const double maxc = std::max({r, g, b});
  const double minc = std::min({r, g, b});
  const double delta = maxc - minc;

  double hue_deg = 0.0;  // 0 by convention when saturation = 0
  if (delta > 0.0) {
    if (maxc == r)
      hue_deg = 60.0 * std::fmod((g - b) / delta + 6.0, 6.0);
    else if (maxc == g)
      hue_deg = 60.0 * ((b - r) / delta + 2.0);
    else
      hue_deg = 60.0 * ((r - g) / delta + 4.0);
  }
  const double sat = maxc > 0.0 ? delta / maxc : 0.0;
  return {hue_deg * kHueScale, sat * 255.0, maxc};
}

Pixel hsb_pixel_to_rgb(const Pixel& p) {
  double hue_deg = std::fmod(p.c0 / kHueScale, 360.0);
  if (hue_deg < 0.0) hue_deg += 360.0;
  const double sat = std::clamp(p.c1 / 255.0, 0.0, 1.0);
  const double val = p.c2;

  const double chroma = val * sat;
  const double hp = hue_deg / 60.0;
  const double x = chroma * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
  const double m = val - chroma;

  double r = 0.0, g = 0.0, b = 0.0;
  switch (static_cast<int>(hp)) {
    case 0: r = chroma; g = x; break;
    case 1: r = x; g = chroma; break;
    case 2: g = chroma; b = x; break;
    case 3: g = x; b = chroma; break;
    case 4: r = x; b = chroma; break;
    default: r = chroma; b = x; break;
  }
  return {r + m, g + m, b + m};
}

}  // namespace

ColorImage rgb_to_hsb(const ColorImage& img) {
  if (img.space() != ColorSpace::Rgb)
    throw std::invalid_argument("rgb_to_hsb: input must be RGB");
  check_range(img, "rgb_to_hsb");

  ColorImage out(img.width(), img.height(), ColorSpace::Hsb);
  const std::size_t n = img.pixels().size();
  for (std::size_t i = 0; i < n; ++i)
    out.pixels()[i] = rgb_pixel_to_hsb(img.pixels()[i]);
  return out;
}

ColorImage hsb_to_rgb(const ColorImage& img) {
  if (img.space() != ColorSpace::Hsb)
    throw std::invalid_argument("hsb_to_rgb: input must be HSB");
  check_range(img, "hsb_to_rgb");

  ColorImage out(img.width(), img.height(), ColorSpace::Rgb);
  const std::size_t n = img.pixels().size();
  for (std::size_t i = 0; i < n; ++i)
    out.pixels()[i] = hsb_pixel_to_rgb(img.pixels()[i]);
  return out;
}

ColorImage convert_to(const ColorImage& img, ColorSpace space) {
  if (img.space() == space) return img;
  return space == ColorSpace::Hsb ? rgb_to_hsb(img) : hsb_to_rgb(img);
}

}  // namespace docfilter
