#pragma once

#include <optional>
#include <string>

#include "docfilter/image.hpp"

namespace docfilter {

/// Metric values for one experiment cell; absent fields do not apply to the
/// filter family that produced the cell.
struct MetricReport {
  std::optional<double> psnr;  // decibels, +inf when MSE = 0
  std::optional<double> sr;
  std::optional<double> rsc;
};

/// JSON object with nulls for inapplicable metrics; +inf PSNR serializes as
/// the string "inf".
std::string metric_report_to_json_text(const MetricReport& report);

/// Mean over pixels of the squared Euclidean distance between pixel
/// vectors (all three components). Throws on dimension/space mismatch.
double mse(const ColorImage& reference, const ColorImage& filtered);

/// 10 log10(255^2 / MSE); +infinity when the images are identical.
double psnr(const ColorImage& reference, const ColorImage& filtered);

/// Ratio of region statistics of the residual. The residual image
/// |reference - filtered| (per-pixel Euclidean norm) is split into
/// non-overlapping 5x5 tiles (partial tiles at the right/bottom edges
/// included); SR = sum of tile population standard deviations divided by
/// (mean per-pixel norm of the reference) * (pixel count). Lower is better.
/// Throws std::domain_error on an all-black reference (mean norm 0).
double sr(const ColorImage& reference, const ColorImage& filtered);

/// Local-statistics smoother: out = m + k (in - m) with m, v the window
/// mean/population variance and k = v / (v + noise_variance). Replicate
/// padding; window must be odd.
ScalarImage lee_filter(const ScalarImage& img, int window,
                       double noise_variance);

/// Scan directions for the edge-quality statistics, one per 45 degrees.
enum class Direction { Horizontal, Vertical, Diagonal, AntiDiagonal };

inline constexpr Direction kAllDirections[] = {
    Direction::Horizontal, Direction::Vertical, Direction::Diagonal,
    Direction::AntiDiagonal};

inline constexpr double kDirectionalEpsilon = 1e-6;  // denominator guard
inline constexpr double kRatioCap = 1e6;

/// Contrast-to-dispersion ratio at (x, y): the two sides hold
/// segment_length samples each along the direction, excluding the center
/// (replicate padding outside the image); the ratio is
/// |mean1 - mean2| / sqrt(var1 + var2 + epsilon), population variances,
/// capped at kRatioCap.
double directional_ratio(const ScalarImage& img, int x, int y, Direction dir,
                         int segment_length);

struct RscOptions {
  int segment_length = 3;
  bool lee = false;  // optional pre-smoothing of the edge map
  int lee_window = 5;
  /// Defaults to the population variance of the whole map when unset.
  std::optional<double> lee_noise_variance;
};

/// Edge-quality criterion: mean over pixels of
/// sqrt(sum over the four directions of the squared directional ratio).
/// Summation is sequential in row-major order, so results are
/// bit-reproducible. Higher is better.
double rsc(const ScalarImage& edge_map, const RscOptions& options = {});

}  // namespace docfilter
