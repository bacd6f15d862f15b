#include "docfilter/metrics.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace docfilter {

namespace {

void require_comparable(const ColorImage& a, const ColorImage& b,
                        const char* op) {
  if (a.width() != b.width() || a.height() != b.height())
    throw std::invalid_argument(std::string(op) + ": dimension mismatch");
  if (a.space() != b.space())
    throw std::invalid_argument(std::string(op) + ": color space mismatch");
}

int clamp_coord(int v, int lo, int hi) { return std::clamp(v, lo, hi); }

// Signed unit step along each side of a scan direction.
void direction_steps(Direction dir, int& dx, int& dy) {
  switch (dir) {
    case Direction::Horizontal: dx = 1; dy = 0; return;
    case Direction::Vertical: dx = 0; dy = 1; return;
    case Direction::Diagonal: dx = 1; dy = -1; return;
    case Direction::AntiDiagonal: dx = 1; dy = 1; return;
  }
  dx = dy = 0;
}

}  // namespace

std::string metric_report_to_json_text(const MetricReport& report) {
  nlohmann::json j;
  if (report.psnr) {
    if (std::isinf(*report.psnr))
      j["psnr"] = "inf";
    else
      j["psnr"] = *report.psnr;
  } else {
    j["psnr"] = nullptr;
  }
  j["sr"] = report.sr ? nlohmann::json(*report.sr) : nlohmann::json(nullptr);
  j["rsc"] = report.rsc ? nlohmann::json(*report.rsc) : nlohmann::json(nullptr);
  return j.dump();
}

double mse(const ColorImage& reference, const ColorImage& filtered) {
  require_comparable(reference, filtered, "mse");
  double acc = 0.0;
  const std::size_t n = reference.pixels().size();
  for (std::size_t i = 0; i < n; ++i)
    acc += squared_norm(reference.pixels()[i] - filtered.pixels()[i]);
  return acc / static_cast<double>(n);
}

double psnr(const ColorImage& reference, const ColorImage& filtered) {
  const double err = mse(reference, filtered);
  if (err == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / err);
}

double sr(const ColorImage& reference, const ColorImage& filtered) {
  require_comparable(reference, filtered, "sr");
  const int w = reference.width(), h = reference.height();
  const std::size_t n = reference.pixels().size();

  double mean_norm = 0.0;
  for (const Pixel& p : reference.pixels()) mean_norm += pixel_norm(p);
  mean_norm /= static_cast<double>(n);
  if (mean_norm == 0.0)
    throw std::domain_error("sr: all-black reference, metric undefined");

  std::vector<double> residual(n);
  for (std::size_t i = 0; i < n; ++i)
    residual[i] = pixel_norm(reference.pixels()[i] - filtered.pixels()[i]);

  constexpr int kTile = 5;
  double sigma_sum = 0.0;
  for (int ty = 0; ty < h; ty += kTile)
    for (int tx = 0; tx < w; tx += kTile) {
      const int xe = std::min(tx + kTile, w);
      const int ye = std::min(ty + kTile, h);
      double s = 0.0, s2 = 0.0;
      int count = 0;
      for (int y = ty; y < ye; ++y)
        for (int x = tx; x < xe; ++x) {
          const double v = residual[static_cast<std::size_t>(y) * w + x];
          s += v;
          s2 += v * v;
          ++count;
        }
      const double mean = s / count;
      const double var = std::max(0.0, s2 / count - mean * mean);
      sigma_sum += std::sqrt(var);
    }

  return sigma_sum / (mean_norm * static_cast<double>(n));
}

ScalarImage lee_filter(const ScalarImage& img, int window,
                       double noise_variance) {
  if (window < 1 || window % 2 == 0)
    throw std::invalid_argument("lee_filter: window must be odd and >= 1");
  if (noise_variance < 0.0)
    throw std::invalid_argument("lee_filter: noise variance must be >= 0");

  const int margin = window / 2;
  const ScalarImage padded = pad_replicate(img, margin);
  const int w = img.width(), h = img.height();
  const double count = static_cast<double>(window) * window;

  ScalarImage out(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      double s = 0.0, s2 = 0.0;
      for (int dy = 0; dy < window; ++dy)
        for (int dx = 0; dx < window; ++dx) {
          const double v = padded.at(x + dx, y + dy);
          s += v;
          s2 += v * v;
        }
      const double mean = s / count;
      const double var = std::max(0.0, s2 / count - mean * mean);
      const double denom = var + noise_variance;
      const double k = denom > 0.0 ? var / denom : 0.0;
      out.at(x, y) = mean + k * (img.at(x, y) - mean);
    }
  return out;
}

double directional_ratio(const ScalarImage& img, int x, int y, Direction dir,
                         int segment_length) {
  if (segment_length < 2)
    throw std::invalid_argument("directional_ratio: segment length must be >= 2");
  const int w = img.width(), h = img.height();
  int dx = 0, dy = 0;
  direction_steps(dir, dx, dy);

  double m[2] = {0.0, 0.0};
  double v[2] = {0.0, 0.0};
  for (int side = 0; side < 2; ++side) {
    const int sx = side == 0 ? -dx : dx;
    const int sy = side == 0 ? -dy : dy;
    double s = 0.0, s2 = 0.0;
    for (int k = 1; k <= segment_length; ++k) {
      const double val = img.at(clamp_coord(x + k * sx, 0, w - 1),
                                clamp_coord(y + k * sy, 0, h - 1));
      s += val;
      s2 += val * val;
    }
    m[side] = s / segment_length;
    v[side] = std::max(0.0, s2 / segment_length - m[side] * m[side]);
  }

  const double ratio =
      std::fabs(m[0] - m[1]) / std::sqrt(v[0] + v[1] + kDirectionalEpsilon);
  return std::min(ratio, kRatioCap);
}

double rsc(const ScalarImage& edge_map, const RscOptions& options) {
  const ScalarImage* map = &edge_map;
  ScalarImage smoothed(1, 1);
  if (options.lee) {
    double nv;
    if (options.lee_noise_variance) {
      nv = *options.lee_noise_variance;
    } else {
      double s = 0.0, s2 = 0.0;
      for (double v : edge_map.values()) {
        s += v;
        s2 += v * v;
      }
      const double n = static_cast<double>(edge_map.values().size());
      const double mean = s / n;
      nv = std::max(0.0, s2 / n - mean * mean);
    }
    smoothed = lee_filter(edge_map, options.lee_window, nv);
    map = &smoothed;
  }

  const int w = map->width(), h = map->height();
  double acc = 0.0;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      double sq = 0.0;
      for (Direction dir : kAllDirections) {
        const double r = directional_ratio(*map, x, y, dir,
                                           options.segment_length);
        sq += r * r;
      }
      acc += std::sqrt(sq);
    }
  return acc / (static_cast<double>(w) * h);
}

}  // namespace docfilter
