#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "docfilter/filters.hpp"
#include "docfilter/image.hpp"
#include "docfilter/metrics.hpp"
#include "docfilter/noise.hpp"

namespace docfilter {

/// One input image: either a file on disk or a synthetic document spec.
struct ImageSource {
  std::string id;
  std::string path;  // file-backed when non-empty
  int synth_width = 0;
  int synth_height = 0;
  std::uint64_t synth_seed = 0;
};

/// One noise column of the experiment matrix. `clean` rows apply no
/// degradation; otherwise the parameter defaults from (kind, strength).
struct NoiseEntry {
  bool clean = false;
  NoiseKind kind = NoiseKind::Gaussian;
  NoiseStrength strength = NoiseStrength::Weak;
  std::optional<double> parameter;

  std::string label() const;  // "clean" or "noise1".."noise6"
};

/// The experiment matrix. Corruption always happens in RGB; each space
/// column converts the same corrupted pixels afterwards.
struct ExperimentConfig {
  std::vector<ImageSource> images;
  std::vector<ColorSpace> spaces;
  std::vector<FilterSpec> denoise_filters;  // scored with PSNR and SR
  std::vector<FilterSpec> edge_filters;     // scored with R_SC
  std::vector<NoiseEntry> noises;
  std::vector<std::uint64_t> seeds;
  RscOptions rsc_options;
  bool record_timing = false;  // keep false for byte-reproducible output
  int threads = 0;             // 0 = hardware concurrency
  std::string output_csv = "results.csv";
  std::string output_json = "results.json";

  /// The stock desk-scale corpus: five synthetic 512x512 documents, three
  /// seeds, all six noise models, both spaces, the median and morphological
  /// denoisers under all four approaches, and the three edge filters under
  /// marginal/vector.
  static ExperimentConfig default_corpus();

  static ExperimentConfig from_json_text(const std::string& text);
  static ExperimentConfig from_file(const std::string& path);
  std::string to_json_text() const;
};

/// One matrix cell. Rows are never silently dropped: a failed cell carries
/// the error text and empty metrics.
struct BenchResult {
  std::string image_id;
  ColorSpace space = ColorSpace::Rgb;
  FilterKind filter = FilterKind::Median;
  Approach approach = Approach::Marginal;
  std::string noise_label;
  std::uint64_t seed = 0;
  MetricReport metrics;
  double ms = 0.0;  // written as 0 unless record_timing is set
  std::string error;
};

/// Runs every (image, space, noise, seed, filter) cell. Denoise rows score
/// PSNR/SR against the clean image in the same space; edge rows score R_SC
/// on the edge map of the corrupted image. Cells run on a worker pool and
/// are sorted by (image, space, filter, approach, noise, seed) before
/// returning, so the output is deterministic for a fixed config.
///
/// Per-cell noise seeds derive from mix_seed(matrix seed, image index,
/// noise id) so no two cells share an RNG stream.
std::vector<BenchResult> run_matrix(const ExperimentConfig& config);

/// CSV with the fixed header
/// image,space,filter,approach,noise,seed,psnr_db,sr,rsc,ms,error
/// Floats carry 6 significant digits; +inf PSNR is written as "inf";
/// inapplicable metrics are empty fields.
void emit_csv(const std::vector<BenchResult>& results,
              const std::string& path);
std::string results_to_csv(const std::vector<BenchResult>& results);

/// JSON mirroring the BenchResult fields (nulls for inapplicable metrics),
/// wrapped with the RNG algorithm name and the noise parameter defaults so
/// runs are self-describing.
void emit_json(const std::vector<BenchResult>& results,
               const std::string& path);
std::string results_to_json_text(const std::vector<BenchResult>& results);

/// Aggregates of one (filter, noise, space) cell of the summary.
struct SummaryCell {
  FilterKind filter = FilterKind::Median;
  std::string noise_label;
  ColorSpace space = ColorSpace::Rgb;
  bool edge = false;
  std::map<Approach, double> mean_psnr;
  std::map<Approach, double> mean_sr;
  std::map<Approach, double> mean_rsc;
  std::optional<Approach> psnr_winner;  // highest mean PSNR
  std::optional<Approach> sr_winner;    // lowest mean SR
  std::optional<Approach> rsc_winner;   // highest mean R_SC
};

struct Summary {
  std::vector<SummaryCell> cells;
  std::map<Approach, double> psnr_win_fraction;
  std::map<Approach, double> sr_win_fraction;
  std::map<Approach, double> rsc_win_fraction;
};

/// Means per approach across images and seeds for every (filter, noise,
/// space) cell, the winning approach per cell and metric (ties broken
/// toward marginal, then vector, then mv, then vm), and each approach's
/// fraction of won cells. Error rows are excluded from the averages.
Summary summarize(const std::vector<BenchResult>& results);

std::string format_summary(const Summary& summary);

}  // namespace docfilter
