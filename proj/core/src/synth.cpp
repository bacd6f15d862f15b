#include "docfilter/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "docfilter/rng.hpp"

namespace docfilter {

namespace {

struct Wave {
  double fx, fy, phase, amplitude;
};

double clamp255(double v) { return std::clamp(v, 0.0, 255.0); }

// Stamps a filled disc of ink around (cx, cy), jittering each covered pixel.
void stamp(ColorImage& img, std::vector<std::uint8_t>& mask, double cx,
           double cy, double radius, const Pixel& ink, Rng& rng) {
  const int x0 = std::max(0, static_cast<int>(std::floor(cx - radius)));
  const int x1 = std::min(img.width() - 1, static_cast<int>(std::ceil(cx + radius)));
  const int y0 = std::max(0, static_cast<int>(std::floor(cy - radius)));
  const int y1 = std::min(img.height() - 1, static_cast<int>(std::ceil(cy + radius)));
  const double r2 = radius * radius;
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x) {
      const double ddx = x - cx, ddy = y - cy;
      if (ddx * ddx + ddy * ddy > r2) continue;
      const double j = 6.0 * rng.normal();
      img.at(x, y) = {clamp255(ink.c0 + j), clamp255(ink.c1 + j),
                      clamp255(ink.c2 + j)};
      mask[static_cast<std::size_t>(y) * img.width() + x] = 1;
    }
}

}  // namespace

SyntheticDocument generate_synthetic_document(int width, int height,
                                              std::uint64_t seed) {
  if (width < 64 || height < 64)
    throw std::invalid_argument(
        "generate_synthetic_document: dimensions must be >= 64");

  Rng rng(seed);
  ColorImage img(width, height, ColorSpace::Rgb);
  std::vector<std::uint8_t> mask(img.pixels().size(), 0);

  // Parchment: beige base plus a few low-frequency plane waves and grain.
  const Pixel base{214.0 + 12.0 * (rng.uniform() - 0.5),
                   193.0 + 12.0 * (rng.uniform() - 0.5),
                   158.0 + 12.0 * (rng.uniform() - 0.5)};
  std::array<Wave, 3> waves;
  for (Wave& w : waves) {
    const double angle = 2.0 * std::numbers::pi * rng.uniform();
    const double freq = (0.5 + 2.5 * rng.uniform()) * 2.0 * std::numbers::pi /
                        std::min(width, height);
    w = {freq * std::cos(angle), freq * std::sin(angle),
         2.0 * std::numbers::pi * rng.uniform(), 6.0 + 10.0 * rng.uniform()};
  }
  // Channel weights keep the shading hue-consistent with aged paper.
  constexpr double kShade[3] = {1.0, 0.96, 0.88};

  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) {
      double shade = 0.0;
      for (const Wave& w : waves)
        shade += w.amplitude * std::sin(w.fx * x + w.fy * y + w.phase);
      const double grain = 3.0 * rng.normal();
      img.at(x, y) = {clamp255(base.c0 + kShade[0] * shade + grain),
                      clamp255(base.c1 + kShade[1] * shade + grain),
                      clamp255(base.c2 + kShade[2] * shade + grain)};
    }

  // Ink strokes: quadratic arcs stamped with a small pen until coverage
  // reaches 8% (bounded well below 40%: one stroke adds a few hundred px).
  const double target = 0.08 * static_cast<double>(img.pixel_count());
  std::int64_t covered = 0;
  const int max_strokes = 100000;
  for (int s = 0; s < max_strokes && covered < target; ++s) {
    const double x0 = rng.uniform() * width;
    const double y0 = rng.uniform() * height;
    const double angle = 2.0 * std::numbers::pi * rng.uniform();
    const double len = (0.08 + 0.25 * rng.uniform()) * std::min(width, height);
    const double x2 = x0 + len * std::cos(angle);
    const double y2 = y0 + len * std::sin(angle);
    // Control point offset perpendicular to the chord bends the stroke.
    const double bend = (rng.uniform() - 0.5) * 0.6 * len;
    const double mx = 0.5 * (x0 + x2) - bend * std::sin(angle);
    const double my = 0.5 * (y0 + y2) + bend * std::cos(angle);

    const double pen = 0.6 + 1.2 * rng.uniform();
    const Pixel ink{40.0 + 24.0 * rng.uniform(), 30.0 + 18.0 * rng.uniform(),
                    24.0 + 14.0 * rng.uniform()};

    const int steps = std::max(2, static_cast<int>(std::ceil(len)));
    for (int i = 0; i <= steps; ++i) {
      const double t = static_cast<double>(i) / steps;
      const double u = 1.0 - t;
      const double cx = u * u * x0 + 2.0 * u * t * mx + t * t * x2;
      const double cy = u * u * y0 + 2.0 * u * t * my + t * t * y2;
      stamp(img, mask, cx, cy, pen, ink, rng);
    }
    covered = std::count(mask.begin(), mask.end(), std::uint8_t{1});
  }

  return {std::move(img), std::move(mask)};
}

}  // namespace docfilter
