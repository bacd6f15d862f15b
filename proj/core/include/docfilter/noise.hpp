#pragma once

#include <cstdint>
#include <string>

#include "docfilter/image.hpp"

namespace docfilter {

enum class NoiseKind { Gaussian, Speckle, SaltPepper };
enum class NoiseStrength { Weak, Strong };

std::string noise_kind_name(NoiseKind kind);
NoiseKind parse_noise_kind(const std::string& name);
std::string noise_strength_name(NoiseStrength s);
NoiseStrength parse_noise_strength(const std::string& name);

/// One degradation model instance. (kind, strength) maps to exactly one of
/// the six catalog identifiers noise1..noise6; `parameter` is sigma for
/// Gaussian (intensity levels), variance for speckle, pixel density for
/// salt & pepper.
struct NoiseSpec {
  NoiseKind kind = NoiseKind::Gaussian;
  NoiseStrength strength = NoiseStrength::Weak;
  double parameter = 0.0;
  std::uint64_t seed = 0;
};

/// Default parameters: Gaussian sigma 10/30, speckle variance 0.04/0.16,
/// salt & pepper density 0.02/0.10 (weak/strong).
double default_noise_parameter(NoiseKind kind, NoiseStrength strength);

/// Catalog id 1..6 in (gaussian, speckle, salt_pepper) x (weak, strong) order.
int noise_id(const NoiseSpec& spec);
NoiseSpec noise_from_id(int id, std::uint64_t seed);
std::string noise_label(const NoiseSpec& spec);  // "noise1".."noise6"

/// JSON round-trip:
/// {"kind": "gaussian"|"speckle"|"salt_pepper", "strength": "weak"|"strong",
///  "parameter": number, "seed": integer}
std::string noise_spec_to_json_text(const NoiseSpec& spec);
NoiseSpec noise_spec_from_json_text(const std::string& text);

/// Adds iid N(0, sigma^2) to every component, clamped to [0, 255].
/// Deterministic for a given seed.
ColorImage add_gaussian(const ColorImage& img, double sigma,
                        std::uint64_t seed);

/// Multiplicative: out = in + in * n, n ~ N(0, variance) per component,
/// clamped to [0, 255].
ColorImage add_speckle(const ColorImage& img, double variance,
                       std::uint64_t seed);

/// Replaces exactly round(density * N) pixel positions, chosen without
/// replacement, by whole-vector (0,0,0) or (255,255,255) with equal
/// probability. Remaining pixels are untouched.
ColorImage add_salt_pepper(const ColorImage& img, double density,
                           std::uint64_t seed);

/// Dispatches on spec.kind using spec.parameter and spec.seed. Noise models
/// acquisition physics, so the input must be RGB; convert afterwards for
/// HSB experiments. Throws std::invalid_argument on invalid specs.
ColorImage apply_noise(const ColorImage& img, const NoiseSpec& spec);

}  // namespace docfilter
