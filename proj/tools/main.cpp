// docfilter: command-line front end for the color document-image filtering
// library. Subcommands: filter, noise, metric, bench, synth.
//
// Exit codes: 0 success, 2 bad arguments, 1 I/O or processing failure.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "docfilter/bench.hpp"
#include "docfilter/colorspace.hpp"
#include "docfilter/filters.hpp"
#include "docfilter/image_io.hpp"
#include "docfilter/metrics.hpp"
#include "docfilter/noise.hpp"
#include "docfilter/synth.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitBadArgs = 2;

struct FilterArgs {
  std::string in, out, kind, approach;
  std::string space = "rgb";
};

struct NoiseArgs {
  std::string in, out, model;
  std::uint64_t seed = 0;
  double param = 0.0;
  bool has_param = false;
};

struct MetricArgs {
  std::string metric, ref, test;
};

struct BenchArgs {
  std::string config, out_csv, out_json;
  int threads = -1;
  bool timing = false;
};

struct SynthArgs {
  int width = 512, height = 512;
  std::uint64_t seed = 0;
  std::string out;
};

int parse_noise_model(const std::string& model) {
  std::string s = model;
  if (s.rfind("noise", 0) == 0) s = s.substr(5);
  if (s.size() == 1 && s[0] >= '1' && s[0] <= '6') return s[0] - '0';
  throw std::invalid_argument("unknown noise model '" + model +
                              "' (expected 1..6 or noise1..noise6)");
}

int run_filter(const FilterArgs& args) {
  docfilter::FilterSpec spec;
  docfilter::ColorSpace space;
  try {
    spec.kind = docfilter::parse_filter_kind(args.kind);
    spec.approach = docfilter::parse_approach(args.approach);
    space = docfilter::parse_colorspace(args.space);
    if (docfilter::is_edge_kind(spec.kind) && docfilter::is_dual(spec.approach))
      throw std::invalid_argument(
          "dual approaches (mv, vm) are invalid for edge filters");
    if (spec.kind == docfilter::FilterKind::Mean &&
        docfilter::is_dual(spec.approach))
      throw std::invalid_argument(
          "dual approaches are meaningless for the mean filter");
  } catch (const std::exception& e) {
    std::cerr << "docfilter filter: " << e.what() << "\n";
    return kExitBadArgs;
  }

  try {
    const docfilter::ColorImage input = docfilter::load_image(args.in);
    const docfilter::ColorImage working = docfilter::convert_to(input, space);

    if (docfilter::is_edge_kind(spec.kind)) {
      const docfilter::ScalarImage edge_map =
          docfilter::apply_edge(working, spec);
      // Linear rescale to [0, 255] for the 8-bit file; metrics must use the
      // raw map, so the factor is reported for reproducibility.
      const double peak =
          *std::max_element(edge_map.values().begin(), edge_map.values().end());
      const double scale = peak > 0.0 ? 255.0 / peak : 1.0;
      docfilter::ScalarImage scaled = edge_map;
      for (double& v : scaled.values()) v *= scale;
      docfilter::save_scalar_image(scaled, args.out);
      std::printf("scale %.6g\n", scale);
    } else {
      const docfilter::ColorImage filtered =
          docfilter::apply_denoise(working, spec);
      docfilter::save_image(
          docfilter::convert_to(filtered, docfilter::ColorSpace::Rgb),
          args.out);
    }
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "docfilter filter: " << e.what() << "\n";
    return kExitFailure;
  }
}

int run_noise(const NoiseArgs& args) {
  docfilter::NoiseSpec spec;
  try {
    spec = docfilter::noise_from_id(parse_noise_model(args.model), args.seed);
    if (args.has_param) spec.parameter = args.param;
  } catch (const std::exception& e) {
    std::cerr << "docfilter noise: " << e.what() << "\n";
    return kExitBadArgs;
  }

  try {
    const docfilter::ColorImage input = docfilter::load_image(args.in);
    docfilter::save_image(docfilter::apply_noise(input, spec), args.out);
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "docfilter noise: " << e.what() << "\n";
    return kExitFailure;
  }
}

int run_metric(const MetricArgs& args) {
  const bool needs_ref = args.metric != "rsc";
  if (args.metric != "psnr" && args.metric != "mse" && args.metric != "sr" &&
      args.metric != "rsc") {
    std::cerr << "docfilter metric: unknown metric '" << args.metric
              << "' (expected psnr, mse, sr or rsc)\n";
    return kExitBadArgs;
  }
  if (needs_ref && args.ref.empty()) {
    std::cerr << "docfilter metric: --ref is required for " << args.metric
              << "\n";
    return kExitBadArgs;
  }

  try {
    double value = 0.0;
    if (args.metric == "rsc") {
      docfilter::ScalarImage map(1, 1);
      try {
        map = docfilter::load_scalar_image(args.test);
      } catch (const std::exception&) {
        // Color input: reduce to the per-pixel vector norm.
        const docfilter::ColorImage img = docfilter::load_image(args.test);
        map = docfilter::ScalarImage(img.width(), img.height());
        for (std::size_t i = 0; i < map.values().size(); ++i)
          map.values()[i] = docfilter::pixel_norm(img.pixels()[i]);
      }
      value = docfilter::rsc(map);
    } else {
      const docfilter::ColorImage ref = docfilter::load_image(args.ref);
      const docfilter::ColorImage test = docfilter::load_image(args.test);
      if (args.metric == "psnr")
        value = docfilter::psnr(ref, test);
      else if (args.metric == "mse")
        value = docfilter::mse(ref, test);
      else
        value = docfilter::sr(ref, test);
    }
    std::printf("%.6g\n", value);
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "docfilter metric: " << e.what() << "\n";
    return kExitFailure;
  }
}

int run_bench(const BenchArgs& args) {
  try {
    docfilter::ExperimentConfig config =
        docfilter::ExperimentConfig::from_file(args.config);
    if (args.threads >= 0) config.threads = args.threads;
    if (args.timing) config.record_timing = true;
    if (!args.out_csv.empty()) config.output_csv = args.out_csv;
    if (!args.out_json.empty()) config.output_json = args.out_json;

    const std::vector<docfilter::BenchResult> results =
        docfilter::run_matrix(config);
    docfilter::emit_csv(results, config.output_csv);
    docfilter::emit_json(results, config.output_json);
    std::cout << docfilter::format_summary(docfilter::summarize(results));
    std::cout << "wrote " << config.output_csv << " and " << config.output_json
              << " (" << results.size() << " rows)\n";
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "docfilter bench: " << e.what() << "\n";
    return kExitFailure;
  }
}

int run_synth(const SynthArgs& args) {
  try {
    const docfilter::SyntheticDocument doc =
        docfilter::generate_synthetic_document(args.width, args.height,
                                               args.seed);
    docfilter::save_image(doc.image, args.out);
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "docfilter synth: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Color document-image filtering, degradation and evaluation"};
  app.require_subcommand(1);

  FilterArgs filter_args;
  CLI::App* filter_cmd =
      app.add_subcommand("filter", "Apply a denoising or edge filter");
  filter_cmd->add_option("--in", filter_args.in, "Input image (.png or .ppm)")
      ->required();
  filter_cmd->add_option("--out", filter_args.out, "Output image path")
      ->required();
  filter_cmd
      ->add_option("--kind", filter_args.kind,
                   "Filter kind: mean, median, morph_denoise, laplacian, "
                   "sobel, morph_gradient")
      ->required();
  filter_cmd
      ->add_option("--approach", filter_args.approach,
                   "Approach: marginal, vector, mv, vm (mv/vm denoise only)")
      ->required();
  filter_cmd->add_option("--space", filter_args.space,
                         "Working color space: rgb or hsb (default rgb)");

  NoiseArgs noise_args;
  CLI::App* noise_cmd =
      app.add_subcommand("noise", "Degrade an image with a noise model");
  noise_cmd->add_option("--in", noise_args.in, "Input image")->required();
  noise_cmd->add_option("--out", noise_args.out, "Output image")->required();
  noise_cmd
      ->add_option("--model", noise_args.model,
                   "Noise model: noise1..noise6 (1/2 gaussian weak/strong, "
                   "3/4 speckle, 5/6 salt & pepper)")
      ->required();
  noise_cmd->add_option("--seed", noise_args.seed, "RNG seed")->required();
  CLI::Option* param_opt = noise_cmd->add_option(
      "--param", noise_args.param,
      "Override the model parameter (sigma, variance or density)");

  MetricArgs metric_args;
  CLI::App* metric_cmd =
      app.add_subcommand("metric", "Evaluate a quality metric");
  metric_cmd
      ->add_option("--metric", metric_args.metric,
                   "Metric: psnr, mse, sr (need --ref) or rsc (edge map only)")
      ->required();
  metric_cmd->add_option("--ref", metric_args.ref, "Reference image");
  metric_cmd->add_option("--test", metric_args.test, "Image under test")
      ->required();

  BenchArgs bench_args;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Run an experiment matrix from a config");
  bench_cmd->add_option("--config", bench_args.config, "JSON config path")
      ->required();
  bench_cmd->add_option("--out-csv", bench_args.out_csv,
                        "Override the CSV output path");
  bench_cmd->add_option("--out-json", bench_args.out_json,
                        "Override the JSON output path");
  bench_cmd->add_option("--threads", bench_args.threads,
                        "Worker threads (0 = hardware)");
  bench_cmd->add_flag("--timing", bench_args.timing,
                      "Record per-cell wall-clock ms (breaks byte-identical "
                      "reruns)");

  SynthArgs synth_args;
  CLI::App* synth_cmd =
      app.add_subcommand("synth", "Generate a synthetic document image");
  synth_cmd->add_option("--width", synth_args.width, "Width in pixels (>= 64)");
  synth_cmd->add_option("--height", synth_args.height,
                        "Height in pixels (>= 64)");
  synth_cmd->add_option("--seed", synth_args.seed, "RNG seed")->required();
  synth_cmd->add_option("--out", synth_args.out, "Output image path")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadArgs;
  }

  noise_args.has_param = param_opt->count() > 0;

  if (filter_cmd->parsed()) return run_filter(filter_args);
  if (noise_cmd->parsed()) return run_noise(noise_args);
  if (metric_cmd->parsed()) return run_metric(metric_args);
  if (bench_cmd->parsed()) return run_bench(bench_args);
  if (synth_cmd->parsed()) return run_synth(synth_args);
  return kExitBadArgs;
}
