#include "docfilter/filters.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace docfilter {

std::string approach_name(Approach a) {
  switch (a) {
    case Approach::Marginal: return "marginal";
    case Approach::Vector: return "vector";
    case Approach::MarginalThenVector: return "mv";
    case Approach::VectorThenMarginal: return "vm";
  }
  return "?";
}

Approach parse_approach(const std::string& name) {
  if (name == "marginal") return Approach::Marginal;
  if (name == "vector") return Approach::Vector;
  if (name == "mv") return Approach::MarginalThenVector;
  if (name == "vm") return Approach::VectorThenMarginal;
  throw std::invalid_argument("unknown approach: '" + name +
                              "' (expected marginal, vector, mv or vm)");
}

std::string filter_kind_name(FilterKind k) {
  switch (k) {
    case FilterKind::Mean: return "mean";
    case FilterKind::Median: return "median";
    case FilterKind::MorphDenoise: return "morph_denoise";
    case FilterKind::Laplacian: return "laplacian";
    case FilterKind::Sobel: return "sobel";
    case FilterKind::MorphGradient: return "morph_gradient";
  }
  return "?";
}

FilterKind parse_filter_kind(const std::string& name) {
  if (name == "mean") return FilterKind::Mean;
  if (name == "median") return FilterKind::Median;
  if (name == "morph_denoise") return FilterKind::MorphDenoise;
  if (name == "laplacian") return FilterKind::Laplacian;
  if (name == "sobel") return FilterKind::Sobel;
  if (name == "morph_gradient") return FilterKind::MorphGradient;
  throw std::invalid_argument("unknown filter kind: '" + name + "'");
}

bool is_edge_kind(FilterKind k) {
  return k == FilterKind::Laplacian || k == FilterKind::Sobel ||
         k == FilterKind::MorphGradient;
}

bool is_dual(Approach a) {
  return a == Approach::MarginalThenVector || a == Approach::VectorThenMarginal;
}

std::string filter_spec_to_json_text(const FilterSpec& spec) {
  nlohmann::json j{{"kind", filter_kind_name(spec.kind)},
                   {"approach", approach_name(spec.approach)}};
  return j.dump();
}

FilterSpec filter_spec_from_json_text(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  return {parse_filter_kind(j.at("kind").get<std::string>()),
          parse_approach(j.at("approach").get<std::string>())};
}

namespace {

void require_single_pass(Approach a, const char* op) {
  if (is_dual(a))
    throw std::invalid_argument(std::string(op) +
                                ": dual approaches apply only through "
                                "apply_denoise compositions");
}

// Raster window offsets around (x, y) in the padded image; index 4 = center.
constexpr int kOffX[9] = {-1, 0, 1, -1, 0, 1, -1, 0, 1};
constexpr int kOffY[9] = {-1, -1, -1, 0, 0, 0, 1, 1, 1};

double median9(std::array<double, 9> v) {
  std::nth_element(v.begin(), v.begin() + 4, v.end());
  return v[4];
}

// Squared norms of a padded image, same layout.
std::vector<double> norm_keys(const ColorImage& padded) {
  std::vector<double> keys(padded.pixels().size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    keys[i] = squared_norm(padded.pixels()[i]);
  return keys;
}

ColorImage mean_filter_marginal(const ColorImage& img) {
  const ColorImage padded = pad_replicate(img, 1);
  ColorImage out(img.width(), img.height(), img.space());
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) {
      double s0 = 0.0, s1 = 0.0, s2 = 0.0;
      for (int k = 0; k < 9; ++k) {
        const Pixel& p = padded.at(x + 1 + kOffX[k], y + 1 + kOffY[k]);
        s0 += p.c0;
        s1 += p.c1;
        s2 += p.c2;
      }
      out.at(x, y) = {s0 / 9.0, s1 / 9.0, s2 / 9.0};
    }
  return out;
}

ColorImage mean_filter_vector(const ColorImage& img) {
  const ColorImage padded = pad_replicate(img, 1);
  ColorImage out(img.width(), img.height(), img.space());
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) {
      Pixel acc{};
      for (int k = 0; k < 9; ++k)
        acc = acc + padded.at(x + 1 + kOffX[k], y + 1 + kOffY[k]);
      out.at(x, y) = acc * (1.0 / 9.0);
    }
  return out;
}

ColorImage median_marginal(const ColorImage& img) {
  const ColorImage padded = pad_replicate(img, 1);
  ColorImage out(img.width(), img.height(), img.space());
  std::array<double, 9> w0, w1, w2;
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) {
      for (int k = 0; k < 9; ++k) {
        const Pixel& p = padded.at(x + 1 + kOffX[k], y + 1 + kOffY[k]);
        w0[k] = p.c0;
        w1[k] = p.c1;
        w2[k] = p.c2;
      }
      out.at(x, y) = {median9(w0), median9(w1), median9(w2)};
    }
  return out;
}

ColorImage median_vector(const ColorImage& img) {
  const ColorImage padded = pad_replicate(img, 1);
  const std::vector<double> keys = norm_keys(padded);
  const int pw = padded.width();
  ColorImage out(img.width(), img.height(), img.space());
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) {
      // (squared norm, raster index): the lexicographic order makes the
      // rank-5 element unique, implementing the raster tie-break.
      std::array<std::pair<double, int>, 9> ranked;
      for (int k = 0; k < 9; ++k) {
        const int px = x + 1 + kOffX[k];
        const int py = y + 1 + kOffY[k];
        ranked[k] = {keys[static_cast<std::size_t>(py) * pw + px], k};
      }
      std::nth_element(ranked.begin(), ranked.begin() + 4, ranked.end());
      const int k = ranked[4].second;
      out.at(x, y) = padded.at(x + 1 + kOffX[k], y + 1 + kOffY[k]);
    }
  return out;
}

enum class Extremum { Min, Max };

// Separable per-channel 3x3 min/max: a horizontal triple pass over the
// padded rows, then a vertical triple pass.
template <Extremum E>
ColorImage morph_marginal(const ColorImage& img) {
  const auto pick = [](double a, double b) {
    if constexpr (E == Extremum::Min) return a < b ? a : b;
    else return a > b ? a : b;
  };
  const ColorImage padded = pad_replicate(img, 1);
  const int w = img.width(), h = img.height();

  std::vector<Pixel> tmp(static_cast<std::size_t>(w) * (h + 2));
  for (int y = 0; y < h + 2; ++y)
    for (int x = 0; x < w; ++x) {
      const Pixel& p0 = padded.at(x, y);
      const Pixel& p1 = padded.at(x + 1, y);
      const Pixel& p2 = padded.at(x + 2, y);
      tmp[static_cast<std::size_t>(y) * w + x] = {
          pick(pick(p0.c0, p1.c0), p2.c0), pick(pick(p0.c1, p1.c1), p2.c1),
          pick(pick(p0.c2, p1.c2), p2.c2)};
    }

  ColorImage out(w, h, img.space());
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const Pixel& p0 = tmp[static_cast<std::size_t>(y) * w + x];
      const Pixel& p1 = tmp[static_cast<std::size_t>(y + 1) * w + x];
      const Pixel& p2 = tmp[static_cast<std::size_t>(y + 2) * w + x];
      out.at(x, y) = {pick(pick(p0.c0, p1.c0), p2.c0),
                      pick(pick(p0.c1, p1.c1), p2.c1),
                      pick(pick(p0.c2, p1.c2), p2.c2)};
    }
  return out;
}

// Separable vector-norm selection. Strict comparisons keep the earlier
// candidate on ties: leftmost in the horizontal pass, then topmost in the
// vertical pass, which together reproduce the full-window raster tie-break.
template <Extremum E>
ColorImage morph_vector(const ColorImage& img) {
  const auto better = [](double cand, double best) {
    if constexpr (E == Extremum::Min) return cand < best;
    else return cand > best;
  };
  const ColorImage padded = pad_replicate(img, 1);
  const std::vector<double> keys = norm_keys(padded);
  const int w = img.width(), h = img.height();
  const int pw = padded.width();

  std::vector<Pixel> hpix(static_cast<std::size_t>(w) * (h + 2));
  std::vector<double> hkey(hpix.size());
  for (int y = 0; y < h + 2; ++y)
    for (int x = 0; x < w; ++x) {
      const std::size_t base = static_cast<std::size_t>(y) * pw + x;
      int best = 0;
      for (int dx = 1; dx < 3; ++dx)
        if (better(keys[base + dx], keys[base + best])) best = dx;
      const std::size_t o = static_cast<std::size_t>(y) * w + x;
      hkey[o] = keys[base + best];
      hpix[o] = padded.at(x + best, y);
    }

  ColorImage out(w, h, img.space());
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const std::size_t base = static_cast<std::size_t>(y) * w + x;
      std::size_t best = base;
      for (int dy = 1; dy < 3; ++dy) {
        const std::size_t cand = base + static_cast<std::size_t>(dy) * w;
        if (better(hkey[cand], hkey[best])) best = cand;
      }
      out.at(x, y) = hpix[best];
    }
  return out;
}

ColorImage single_denoise_pass(const ColorImage& img, FilterKind kind,
                               Approach approach) {
  switch (kind) {
    case FilterKind::Mean: return mean_filter(img, approach);
    case FilterKind::Median: return median_filter(img, approach);
    case FilterKind::MorphDenoise: return morph_denoise(img, approach);
    default:
      throw std::invalid_argument("apply_denoise: " + filter_kind_name(kind) +
                                  " is an edge filter");
  }
}

}  // namespace

ColorImage mean_filter(const ColorImage& img, Approach approach) {
  if (is_dual(approach))
    throw std::invalid_argument(
        "mean_filter: dual approaches are meaningless for a linear filter");
  return approach == Approach::Marginal ? mean_filter_marginal(img)
                                        : mean_filter_vector(img);
}

ColorImage median_filter(const ColorImage& img, Approach approach) {
  switch (approach) {
    case Approach::Marginal: return median_marginal(img);
    case Approach::Vector: return median_vector(img);
    case Approach::MarginalThenVector:
      return median_vector(median_marginal(img));
    case Approach::VectorThenMarginal:
      return median_marginal(median_vector(img));
  }
  throw std::invalid_argument("median_filter: bad approach");
}

ColorImage erode(const ColorImage& img, Approach approach) {
  require_single_pass(approach, "erode");
  return approach == Approach::Marginal ? morph_marginal<Extremum::Min>(img)
                                        : morph_vector<Extremum::Min>(img);
}

ColorImage dilate(const ColorImage& img, Approach approach) {
  require_single_pass(approach, "dilate");
  return approach == Approach::Marginal ? morph_marginal<Extremum::Max>(img)
                                        : morph_vector<Extremum::Max>(img);
}

ColorImage opening(const ColorImage& img, Approach approach) {
  return dilate(erode(img, approach), approach);
}

ColorImage closing(const ColorImage& img, Approach approach) {
  return erode(dilate(img, approach), approach);
}

ColorImage morph_denoise(const ColorImage& img, Approach approach) {
  return opening(closing(img, approach), approach);
}

ColorImage apply_denoise(const ColorImage& img, const FilterSpec& spec) {
  if (is_edge_kind(spec.kind))
    throw std::invalid_argument("apply_denoise: " +
                                filter_kind_name(spec.kind) +
                                " is an edge filter");
  switch (spec.approach) {
    case Approach::Marginal:
    case Approach::Vector:
      return single_denoise_pass(img, spec.kind, spec.approach);
    case Approach::MarginalThenVector:
      return single_denoise_pass(
          single_denoise_pass(img, spec.kind, Approach::Marginal), spec.kind,
          Approach::Vector);
    case Approach::VectorThenMarginal:
      return single_denoise_pass(
          single_denoise_pass(img, spec.kind, Approach::Vector), spec.kind,
          Approach::Marginal);
  }
  throw std::invalid_argument("apply_denoise: bad approach");
}

ScalarImage laplacian(const ColorImage& img, Approach approach) {
  require_single_pass(approach, "laplacian");
  const ColorImage padded = pad_replicate(img, 1);
  ScalarImage out(img.width(), img.height());

  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) {
      const Pixel& c = padded.at(x + 1, y + 1);
      const Pixel& up = padded.at(x + 1, y);
      const Pixel& dn = padded.at(x + 1, y + 2);
      const Pixel& lf = padded.at(x, y + 1);
      const Pixel& rt = padded.at(x + 2, y + 1);
      if (approach == Approach::Marginal) {
        const double r0 = up.c0 + dn.c0 + lf.c0 + rt.c0 - 4.0 * c.c0;
        const double r1 = up.c1 + dn.c1 + lf.c1 + rt.c1 - 4.0 * c.c1;
        const double r2 = up.c2 + dn.c2 + lf.c2 + rt.c2 - 4.0 * c.c2;
        out.at(x, y) = std::sqrt(r0 * r0 + r1 * r1 + r2 * r2);
      } else {
        double acc = 0.0;
        for (const Pixel* n : {&up, &dn, &lf, &rt}) {
          acc += squared_norm(*n - c);
        }
        out.at(x, y) = std::sqrt(acc);
      }
    }
  return out;
}

ScalarImage sobel(const ColorImage& img, Approach approach) {
  require_single_pass(approach, "sobel");
  const ColorImage padded = pad_replicate(img, 1);
  ScalarImage out(img.width(), img.height());

  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x) {
      const Pixel& tl = padded.at(x, y);
      const Pixel& tm = padded.at(x + 1, y);
      const Pixel& tr = padded.at(x + 2, y);
      const Pixel& ml = padded.at(x, y + 1);
      const Pixel& mr = padded.at(x + 2, y + 1);
      const Pixel& bl = padded.at(x, y + 2);
      const Pixel& bm = padded.at(x + 1, y + 2);
      const Pixel& br = padded.at(x + 2, y + 2);

      double acc = 0.0;
      if (approach == Approach::Marginal) {
        const Pixel gh = (tr - tl) + ((mr - ml) * 2.0) + (br - bl);
        const Pixel gv = (bl - tl) + ((bm - tm) * 2.0) + (br - tr);
        acc = squared_norm(gh) + squared_norm(gv);
      } else {
        // The factor 2 weights the squared middle differences.
        acc = squared_norm(tr - tl) + 2.0 * squared_norm(mr - ml) +
              squared_norm(br - bl) + squared_norm(bl - tl) +
              2.0 * squared_norm(bm - tm) + squared_norm(br - tr);
      }
      out.at(x, y) = std::sqrt(acc);
    }
  return out;
}

ScalarImage morph_gradient(const ColorImage& img, Approach approach) {
  require_single_pass(approach, "morph_gradient");
  const ColorImage hi = dilate(img, approach);
  const ColorImage lo = erode(img, approach);
  ScalarImage out(img.width(), img.height());
  for (std::size_t i = 0; i < out.values().size(); ++i)
    out.values()[i] = pixel_norm(hi.pixels()[i] - lo.pixels()[i]);
  return out;
}

ScalarImage apply_edge(const ColorImage& img, const FilterSpec& spec) {
  if (!is_edge_kind(spec.kind))
    throw std::invalid_argument("apply_edge: " + filter_kind_name(spec.kind) +
                                " is a denoising filter");
  if (is_dual(spec.approach))
    throw std::invalid_argument(
        "apply_edge: dual approaches are invalid for edge filters");
  switch (spec.kind) {
    case FilterKind::Laplacian: return laplacian(img, spec.approach);
    case FilterKind::Sobel: return sobel(img, spec.approach);
    default: return morph_gradient(img, spec.approach);
  }
}

}  // namespace docfilter
