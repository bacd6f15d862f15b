#pragma once

#include <string>

#include "docfilter/image.hpp"

namespace docfilter {

/// Loads an 8-bit 3-channel image (PNG or binary PPM "P6", chosen by
/// content, not extension) as ColorImage[RGB] with components in [0, 255].
/// Grayscale, paletted, alpha or 16-bit files are rejected with a
/// descriptive std::runtime_error.
ColorImage load_image(const std::string& path);

/// Saves as 8-bit RGB, clamping to [0, 255] and rounding to nearest.
/// Format by extension: .png or .ppm. The image must be RGB; convert first.
void save_image(const ColorImage& img, const std::string& path);

/// Loads an 8-bit single-channel image (grayscale PNG or binary PGM "P5").
ScalarImage load_scalar_image(const std::string& path);

/// Saves a scalar map as 8-bit grayscale (.png or .pgm), clamping and
/// rounding like save_image. Values are written as-is: rescale beforehand
/// when the map exceeds [0, 255].
void save_scalar_image(const ScalarImage& img, const std::string& path);

}  // namespace docfilter
