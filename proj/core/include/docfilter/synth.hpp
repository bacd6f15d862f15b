#pragma once

#include <cstdint>
#include <vector>

#include "docfilter/image.hpp"

namespace docfilter {

/// A generated document image plus the mask of its ink pixels
/// (1 = stroke, 0 = background), row-major like the image.
struct SyntheticDocument {
  ColorImage image;
  std::vector<std::uint8_t> stroke_mask;
};

/// Deterministic parchment-like page: a beige background with low-frequency
/// shading and fine grain, overlaid with dark ink strokes (line and arc
/// segments) until the stroke mask covers at least 8% of the pixels.
/// Components are in [0, 255], RGB. Requires width, height >= 64.
SyntheticDocument generate_synthetic_document(int width, int height,
                                              std::uint64_t seed);

}  // namespace docfilter
