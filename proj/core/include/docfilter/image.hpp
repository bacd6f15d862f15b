#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace docfilter {

/// Color space tag carried by every ColorImage. Components are always kept
/// in [0, 255] regardless of space so that vector norms weight the three
/// channels equally.
enum class ColorSpace { Rgb, Hsb };

std::string colorspace_name(ColorSpace space);
ColorSpace parse_colorspace(const std::string& name);

/// One pixel: three real-valued intensity components, nominal range [0, 255].
/// Interpretation (R/G/B vs H/S/B) follows the owning image's space tag.
struct Pixel {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;

  bool operator==(const Pixel&) const = default;
};

inline Pixel operator+(const Pixel& a, const Pixel& b) {
  return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
}
inline Pixel operator-(const Pixel& a, const Pixel& b) {
  return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
}
inline Pixel operator*(const Pixel& a, double k) {
  return {a.c0 * k, a.c1 * k, a.c2 * k};
}

inline double squared_norm(const Pixel& p) {
  return p.c0 * p.c0 + p.c1 * p.c1 + p.c2 * p.c2;
}

/// Euclidean norm of the component vector.
inline double pixel_norm(const Pixel& p) { return std::sqrt(squared_norm(p)); }

/// H x W grid of pixels, row-major, with a color-space tag.
/// Treated as immutable once filled: every operation in this library takes
/// images by const reference and returns a new one.
class ColorImage {
 public:
  ColorImage(int width, int height, ColorSpace space, Pixel fill = {});
  ColorImage(int width, int height, ColorSpace space, std::vector<Pixel> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  ColorSpace space() const { return space_; }
  std::int64_t pixel_count() const {
    return static_cast<std::int64_t>(width_) * height_;
  }

  const Pixel& at(int x, int y) const {
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
  }
  Pixel& at(int x, int y) {
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
  }

  const std::vector<Pixel>& pixels() const { return pixels_; }
  std::vector<Pixel>& pixels() { return pixels_; }

  /// True when every component of every pixel is finite.
  bool all_finite() const;

  bool operator==(const ColorImage&) const = default;

 private:
  int width_;
  int height_;
  ColorSpace space_;
  std::vector<Pixel> pixels_;
};

/// Single-channel map of non-negative reals (edge responses, residual
/// magnitudes). Not clamped to 255: metrics consume raw magnitudes.
class ScalarImage {
 public:
  ScalarImage(int width, int height, double fill = 0.0);
  ScalarImage(int width, int height, std::vector<double> values);

  int width() const { return width_; }
  int height() const { return height_; }
  std::int64_t pixel_count() const {
    return static_cast<std::int64_t>(width_) * height_;
  }

  double at(int x, int y) const {
    return values_[static_cast<std::size_t>(y) * width_ + x];
  }
  double& at(int x, int y) {
    return values_[static_cast<std::size_t>(y) * width_ + x];
  }

  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  bool operator==(const ScalarImage&) const = default;

 private:
  int width_;
  int height_;
  std::vector<double> values_;
};

/// Pads by replicating edge pixels outward; margin 0 returns a copy.
/// All 3x3 kernels in this library use this boundary policy.
ColorImage pad_replicate(const ColorImage& img, int margin);
ScalarImage pad_replicate(const ScalarImage& img, int margin);

}  // namespace docfilter
