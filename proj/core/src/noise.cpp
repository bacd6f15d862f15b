#include "docfilter/noise.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "docfilter/rng.hpp"

namespace docfilter {

namespace {

double clamp255(double v) { return std::clamp(v, 0.0, 255.0); }

void require_rgb(const ColorImage& img, const char* op) {
  if (img.space() != ColorSpace::Rgb)
    throw std::invalid_argument(std::string(op) +
                                ": noise is applied in RGB only");
}

}  // namespace

std::string noise_kind_name(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::Gaussian: return "gaussian";
    case NoiseKind::Speckle: return "speckle";
    case NoiseKind::SaltPepper: return "salt_pepper";
  }
  return "?";
}

NoiseKind parse_noise_kind(const std::string& name) {
  if (name == "gaussian") return NoiseKind::Gaussian;
  if (name == "speckle") return NoiseKind::Speckle;
  if (name == "salt_pepper") return NoiseKind::SaltPepper;
  throw std::invalid_argument("unknown noise kind: '" + name + "'");
}

std::string noise_strength_name(NoiseStrength s) {
  return s == NoiseStrength::Weak ? "weak" : "strong";
}

NoiseStrength parse_noise_strength(const std::string& name) {
  if (name == "weak") return NoiseStrength::Weak;
  if (name == "strong") return NoiseStrength::Strong;
  throw std::invalid_argument("unknown noise strength: '" + name + "'");
}

double default_noise_parameter(NoiseKind kind, NoiseStrength strength) {
  const bool weak = strength == NoiseStrength::Weak;
  switch (kind) {
    case NoiseKind::Gaussian: return weak ? 10.0 : 30.0;
    case NoiseKind::Speckle: return weak ? 0.04 : 0.16;
    case NoiseKind::SaltPepper: return weak ? 0.02 : 0.10;
  }
  throw std::invalid_argument("bad noise kind");
}

int noise_id(const NoiseSpec& spec) {
  const int base = spec.kind == NoiseKind::Gaussian  ? 1
                   : spec.kind == NoiseKind::Speckle ? 3
                                                     : 5;
  return base + (spec.strength == NoiseStrength::Strong ? 1 : 0);
}

NoiseSpec noise_from_id(int id, std::uint64_t seed) {
  if (id < 1 || id > 6)
    throw std::invalid_argument("noise id must be in 1..6, got " +
                                std::to_string(id));
  const NoiseKind kind = id <= 2   ? NoiseKind::Gaussian
                         : id <= 4 ? NoiseKind::Speckle
                                   : NoiseKind::SaltPepper;
  const NoiseStrength strength =
      id % 2 == 1 ? NoiseStrength::Weak : NoiseStrength::Strong;
  return {kind, strength, default_noise_parameter(kind, strength), seed};
}

std::string noise_label(const NoiseSpec& spec) {
  return "noise" + std::to_string(noise_id(spec));
}

std::string noise_spec_to_json_text(const NoiseSpec& spec) {
  nlohmann::json j{{"kind", noise_kind_name(spec.kind)},
                   {"strength", noise_strength_name(spec.strength)},
                   {"parameter", spec.parameter},
                   {"seed", spec.seed}};
  return j.dump();
}

NoiseSpec noise_spec_from_json_text(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  NoiseSpec spec;
  spec.kind = parse_noise_kind(j.at("kind").get<std::string>());
  spec.strength = parse_noise_strength(j.at("strength").get<std::string>());
  spec.parameter = j.contains("parameter")
                       ? j.at("parameter").get<double>()
                       : default_noise_parameter(spec.kind, spec.strength);
  spec.seed = j.value("seed", std::uint64_t{0});
  return spec;
}

ColorImage add_gaussian(const ColorImage& img, double sigma,
                        std::uint64_t seed) {
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian sigma must be > 0");
  Rng rng(seed);
  ColorImage out = img;
  for (Pixel& p : out.pixels()) {
    p.c0 = clamp255(p.c0 + sigma * rng.normal());
    p.c1 = clamp255(p.c1 + sigma * rng.normal());
    p.c2 = clamp255(p.c2 + sigma * rng.normal());
  }
  return out;
}

ColorImage add_speckle(const ColorImage& img, double variance,
                       std::uint64_t seed) {
  if (!(variance > 0.0 && variance < 1.0))
    throw std::invalid_argument("speckle variance must be in (0, 1)");
  const double sd = std::sqrt(variance);
  Rng rng(seed);
  ColorImage out = img;
  for (Pixel& p : out.pixels()) {
    p.c0 = clamp255(p.c0 + p.c0 * sd * rng.normal());
    p.c1 = clamp255(p.c1 + p.c1 * sd * rng.normal());
    p.c2 = clamp255(p.c2 + p.c2 * sd * rng.normal());
  }
  return out;
}

ColorImage add_salt_pepper(const ColorImage& img, double density,
                           std::uint64_t seed) {
  if (!(density > 0.0 && density < 1.0))
    throw std::invalid_argument("salt & pepper density must be in (0, 1)");
  const std::int64_t n = img.pixel_count();
  const auto corrupt_count =
      static_cast<std::int64_t>(std::llround(density * static_cast<double>(n)));

  Rng rng(seed);
  // Partial Fisher-Yates: the first corrupt_count entries are a uniform
  // draw without replacement.
  std::vector<std::int64_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  ColorImage out = img;
  for (std::int64_t i = 0; i < corrupt_count; ++i) {
    const auto j = i + static_cast<std::int64_t>(
                           rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(order[i], order[j]);
    const bool salt = rng.uniform() < 0.5;
    const double v = salt ? 255.0 : 0.0;
    out.pixels()[static_cast<std::size_t>(order[i])] = {v, v, v};
  }
  return out;
}

ColorImage apply_noise(const ColorImage& img, const NoiseSpec& spec) {
  require_rgb(img, "apply_noise");
  switch (spec.kind) {
    case NoiseKind::Gaussian:
      return add_gaussian(img, spec.parameter, spec.seed);
    case NoiseKind::Speckle:
      return add_speckle(img, spec.parameter, spec.seed);
    case NoiseKind::SaltPepper:
      return add_salt_pepper(img, spec.parameter, spec.seed);
  }
  throw std::invalid_argument("apply_noise: unknown noise kind");
}

}  // namespace docfilter
