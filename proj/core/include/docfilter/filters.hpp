#pragma once

#include <array>
#include <string>

#include "docfilter/image.hpp"

namespace docfilter {

/// Filtering strategy for color pixels.
///   Marginal            - each channel filtered independently.
///   Vector              - pixels treated as 3-vectors; order statistics use
///                         the Euclidean norm, selections return whole
///                         sample vectors.
///   MarginalThenVector  - one full marginal pass, then one full vector pass.
///   VectorThenMarginal  - the reverse composition.
/// The dual tags apply to denoising filters only.
enum class Approach { Marginal, Vector, MarginalThenVector, VectorThenMarginal };

enum class FilterKind { Mean, Median, MorphDenoise, Laplacian, Sobel, MorphGradient };

std::string approach_name(Approach a);        // marginal|vector|mv|vm
Approach parse_approach(const std::string& name);
std::string filter_kind_name(FilterKind k);
FilterKind parse_filter_kind(const std::string& name);

bool is_edge_kind(FilterKind k);
bool is_dual(Approach a);

/// Filter selection; the kernel is the fixed 3x3 square.
struct FilterSpec {
  FilterKind kind = FilterKind::Median;
  Approach approach = Approach::Marginal;
};

/// JSON round-trip: {"kind": "...", "approach": "marginal"|"vector"|"mv"|"vm"}
std::string filter_spec_to_json_text(const FilterSpec& spec);
FilterSpec filter_spec_from_json_text(const std::string& text);

/// The nine samples of a 3x3 window in raster order; index 4 is the center.
using Window3x3 = std::array<Pixel, 9>;

// ---- denoising -----------------------------------------------------------

/// 3x3 unweighted centroid. Marginal and vector are distinct code paths
/// that must agree (linear filter). Dual approaches are rejected.
ColorImage mean_filter(const ColorImage& img, Approach approach);

/// 3x3 median. Marginal: per-channel scalar median of the nine samples.
/// Vector: the whole sample vector whose norm has rank 5 of 9; ties on the
/// norm are broken by raster order. Dual tags compose two full passes.
ColorImage median_filter(const ColorImage& img, Approach approach);

/// 3x3 flat erosion/dilation. Marginal: per-channel min/max. Vector: the
/// sample with minimum/maximum norm, raster-order tie-break.
ColorImage erode(const ColorImage& img, Approach approach);
ColorImage dilate(const ColorImage& img, Approach approach);

ColorImage opening(const ColorImage& img, Approach approach);  // dilate(erode(img))
ColorImage closing(const ColorImage& img, Approach approach);  // erode(dilate(img))

/// opening(closing(img)), the denoising morphological filter.
ColorImage morph_denoise(const ColorImage& img, Approach approach);

/// Dispatch for denoise kinds (Mean, Median, MorphDenoise) under any
/// approach, including the dual compositions.
ColorImage apply_denoise(const ColorImage& img, const FilterSpec& spec);

// ---- edge detection ------------------------------------------------------

/// Marginal: per-channel 4-neighbor difference kernel, then the Euclidean
/// norm of the three channel responses. Vector: the square root of the sum,
/// over channels, of the squared differences between the center and its
/// four 4-neighbors. Output is unclamped.
ScalarImage laplacian(const ColorImage& img, Approach approach);

/// Marginal: per-channel 3x3 directional kernels combined per channel as
/// sqrt(h^2 + v^2), then the Euclidean norm across channels. Vector: a sum
/// of squared pairwise differences per channel (the coefficient 2 applies
/// to the squared middle differences), square-rooted once at the end.
ScalarImage sobel(const ColorImage& img, Approach approach);

/// Per-pixel Euclidean norm of dilate(img) - erode(img) under the approach.
ScalarImage morph_gradient(const ColorImage& img, Approach approach);

/// Dispatch for edge kinds (Laplacian, Sobel, MorphGradient); dual
/// approaches are rejected.
ScalarImage apply_edge(const ColorImage& img, const FilterSpec& spec);

}  // namespace docfilter
