#pragma once

#include "docfilter/image.hpp"

namespace docfilter {

/// RGB -> HSB with every channel rescaled to [0, 255]:
///   H: [0 deg, 360 deg) -> [0, 255)
///   S: [0, 1]           -> [0, 255]
///   B: max(R, G, B)     (already [0, 255])
/// Hue is 0 when saturation is 0. Hue is treated as a linear quantity:
/// no circular wrap-around handling downstream.
///
/// Throws std::invalid_argument when the input is not RGB or has components
/// outside [0, 255] beyond a 1e-6 tolerance.
ColorImage rgb_to_hsb(const ColorImage& img);

/// Inverse of rgb_to_hsb (exact up to floating-point round-off for
/// saturated pixels).
ColorImage hsb_to_rgb(const ColorImage& img);

/// Converts to the requested space; identity when already there.
ColorImage convert_to(const ColorImage& img, ColorSpace space);

}  // namespace docfilter
