#include "docfilter/bench.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "docfilter/colorspace.hpp"
#include "docfilter/image_io.hpp"
#include "docfilter/rng.hpp"
#include "docfilter/synth.hpp"

namespace docfilter {

namespace {

using nlohmann::json;

// 6 significant digits, the precision contract for CSV and JSON output.
std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

double round6(double v) { return std::stod(fmt6(v)); }

json metric_field(const std::optional<double>& v) {
  if (!v) return nullptr;
  if (std::isinf(*v)) return "inf";
  return round6(*v);
}

int noise_rank(const std::string& label) {
  if (label == "clean") return 0;
  if (label.size() == 6 && label.rfind("noise", 0) == 0)
    return label[5] - '0';
  return 99;
}

std::tuple<std::string, int, int, int, int, std::uint64_t> sort_key(
    const BenchResult& r) {
  return {r.image_id, static_cast<int>(r.space), static_cast<int>(r.filter),
          static_cast<int>(r.approach), noise_rank(r.noise_label), r.seed};
}

FilterSpec filter_spec_from_json(const json& j) {
  return {parse_filter_kind(j.at("kind").get<std::string>()),
          parse_approach(j.at("approach").get<std::string>())};
}

json filter_spec_to_json(const FilterSpec& spec) {
  return {{"kind", filter_kind_name(spec.kind)},
          {"approach", approach_name(spec.approach)}};
}

NoiseEntry noise_entry_from_json(const json& j) {
  NoiseEntry entry;
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "clean") {
      entry.clean = true;
      return entry;
    }
    const int rank = noise_rank(s);
    if (rank < 1 || rank > 6)
      throw std::invalid_argument("unknown noise entry: '" + s + "'");
    const NoiseSpec spec = noise_from_id(rank, 0);
    entry.kind = spec.kind;
    entry.strength = spec.strength;
    return entry;
  }
  entry.kind = parse_noise_kind(j.at("kind").get<std::string>());
  entry.strength = parse_noise_strength(j.at("strength").get<std::string>());
  if (j.contains("parameter") && !j.at("parameter").is_null())
    entry.parameter = j.at("parameter").get<double>();
  return entry;
}

json noise_entry_to_json(const NoiseEntry& entry) {
  if (entry.clean && !entry.parameter) return "clean";
  if (!entry.parameter) return entry.label();
  return {{"kind", noise_kind_name(entry.kind)},
          {"strength", noise_strength_name(entry.strength)},
          {"parameter", *entry.parameter}};
}

std::string sanitize_csv(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  return out;
}

// Materialized input image with its id.
struct CorpusImage {
  std::string id;
  ColorImage rgb;
};

CorpusImage materialize(const ImageSource& src, std::size_t index) {
  std::string id = src.id;
  if (id.empty()) id = "img" + std::to_string(index);
  if (!src.path.empty()) return {id, load_image(src.path)};
  return {id,
          generate_synthetic_document(src.synth_width, src.synth_height,
                                      src.synth_seed)
              .image};
}

}  // namespace

std::string NoiseEntry::label() const {
  if (clean) return "clean";
  return noise_label(NoiseSpec{kind, strength, 0.0, 0});
}

ExperimentConfig ExperimentConfig::default_corpus() {
  ExperimentConfig cfg;
  for (int i = 0; i < 5; ++i) {
    ImageSource src;
    src.id = "doc" + std::to_string(i);
    src.synth_width = 512;
    src.synth_height = 512;
    src.synth_seed = 101 + static_cast<std::uint64_t>(i);
    cfg.images.push_back(src);
  }
  cfg.spaces = {ColorSpace::Rgb, ColorSpace::Hsb};
  for (FilterKind kind : {FilterKind::Median, FilterKind::MorphDenoise})
    for (Approach a : {Approach::Marginal, Approach::Vector,
                       Approach::MarginalThenVector,
                       Approach::VectorThenMarginal})
      cfg.denoise_filters.push_back({kind, a});
  for (FilterKind kind :
       {FilterKind::Laplacian, FilterKind::Sobel, FilterKind::MorphGradient})
    for (Approach a : {Approach::Marginal, Approach::Vector})
      cfg.edge_filters.push_back({kind, a});
  cfg.noises.push_back(NoiseEntry{.clean = true});
  for (int id = 1; id <= 6; ++id) {
    const NoiseSpec spec = noise_from_id(id, 0);
    cfg.noises.push_back(NoiseEntry{false, spec.kind, spec.strength, {}});
  }
  cfg.seeds = {1, 2, 3};
  return cfg;
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
  const json j = json::parse(text);
  ExperimentConfig cfg;

  for (const json& ji : j.at("images")) {
    ImageSource src;
    src.id = ji.value("id", std::string{});
    if (ji.contains("path")) {
      src.path = ji.at("path").get<std::string>();
    } else {
      const json& js = ji.at("synthetic");
      src.synth_width = js.at("width").get<int>();
      src.synth_height = js.at("height").get<int>();
      src.synth_seed = js.value("seed", std::uint64_t{0});
    }
    cfg.images.push_back(src);
  }

  if (j.contains("spaces"))
    for (const json& js : j.at("spaces"))
      cfg.spaces.push_back(parse_colorspace(js.get<std::string>()));
  else
    cfg.spaces = {ColorSpace::Rgb};

  if (j.contains("denoise_filters"))
    for (const json& jf : j.at("denoise_filters"))
      cfg.denoise_filters.push_back(filter_spec_from_json(jf));
  if (j.contains("edge_filters"))
    for (const json& jf : j.at("edge_filters"))
      cfg.edge_filters.push_back(filter_spec_from_json(jf));

  for (const json& jn : j.at("noises"))
    cfg.noises.push_back(noise_entry_from_json(jn));

  if (j.contains("seeds"))
    for (const json& js : j.at("seeds"))
      cfg.seeds.push_back(js.get<std::uint64_t>());
  else
    cfg.seeds = {1};

  if (j.contains("rsc")) {
    const json& jr = j.at("rsc");
    cfg.rsc_options.segment_length = jr.value("segment_length", 3);
    cfg.rsc_options.lee = jr.value("lee", false);
    cfg.rsc_options.lee_window = jr.value("lee_window", 5);
    if (jr.contains("lee_noise_variance") &&
        !jr.at("lee_noise_variance").is_null())
      cfg.rsc_options.lee_noise_variance =
          jr.at("lee_noise_variance").get<double>();
  }

  cfg.record_timing = j.value("record_timing", false);
  cfg.threads = j.value("threads", 0);
  cfg.output_csv = j.value("output_csv", std::string{"results.csv"});
  cfg.output_json = j.value("output_json", std::string{"results.json"});

  if (cfg.images.empty()) throw std::invalid_argument("config: no images");
  if (cfg.denoise_filters.empty() && cfg.edge_filters.empty())
    throw std::invalid_argument("config: no filters");
  if (cfg.noises.empty()) throw std::invalid_argument("config: no noises");
  if (cfg.spaces.empty()) throw std::invalid_argument("config: no spaces");
  if (cfg.seeds.empty()) throw std::invalid_argument("config: no seeds");
  for (const FilterSpec& f : cfg.denoise_filters)
    if (is_edge_kind(f.kind))
      throw std::invalid_argument("config: " + filter_kind_name(f.kind) +
                                  " listed under denoise_filters");
  for (const FilterSpec& f : cfg.edge_filters) {
    if (!is_edge_kind(f.kind))
      throw std::invalid_argument("config: " + filter_kind_name(f.kind) +
                                  " listed under edge_filters");
    if (is_dual(f.approach))
      throw std::invalid_argument(
          "config: dual approaches are invalid for edge filters");
  }
  return cfg;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

std::string ExperimentConfig::to_json_text() const {
  json j;
  for (const ImageSource& src : images) {
    json ji{{"id", src.id}};
    if (!src.path.empty())
      ji["path"] = src.path;
    else
      ji["synthetic"] = {{"width", src.synth_width},
                         {"height", src.synth_height},
                         {"seed", src.synth_seed}};
    j["images"].push_back(ji);
  }
  for (ColorSpace s : spaces) j["spaces"].push_back(colorspace_name(s));
  for (const FilterSpec& f : denoise_filters)
    j["denoise_filters"].push_back(filter_spec_to_json(f));
  for (const FilterSpec& f : edge_filters)
    j["edge_filters"].push_back(filter_spec_to_json(f));
  for (const NoiseEntry& n : noises) j["noises"].push_back(noise_entry_to_json(n));
  j["seeds"] = seeds;
  j["rsc"] = {{"segment_length", rsc_options.segment_length},
              {"lee", rsc_options.lee},
              {"lee_window", rsc_options.lee_window},
              {"lee_noise_variance", rsc_options.lee_noise_variance
                                         ? json(*rsc_options.lee_noise_variance)
                                         : json(nullptr)}};
  j["record_timing"] = record_timing;
  j["threads"] = threads;
  j["output_csv"] = output_csv;
  j["output_json"] = output_json;
  return j.dump(2);
}

namespace {

struct Combo {
  std::size_t image_idx;
  std::size_t noise_idx;
  std::uint64_t seed;
};

std::vector<BenchResult> run_combo(const ExperimentConfig& config,
                                   const std::vector<CorpusImage>& corpus,
                                   const std::vector<std::vector<ColorImage>>&
                                       references_by_space,
                                   const Combo& combo) {
  using clock = std::chrono::steady_clock;
  std::vector<BenchResult> rows;
  const CorpusImage& img = corpus[combo.image_idx];
  const NoiseEntry& entry = config.noises[combo.noise_idx];

  BenchResult proto;
  proto.image_id = img.id;
  proto.noise_label = entry.label();
  proto.seed = combo.seed;

  std::string corruption_error;
  ColorImage corrupted_rgb(1, 1, ColorSpace::Rgb);
  if (entry.clean) {
    corrupted_rgb = img.rgb;
  } else {
    try {
      NoiseSpec spec{entry.kind, entry.strength,
                     entry.parameter ? *entry.parameter
                                     : default_noise_parameter(entry.kind,
                                                               entry.strength),
                     mix_seed(combo.seed, combo.image_idx,
                              static_cast<std::uint64_t>(
                                  noise_id(NoiseSpec{entry.kind, entry.strength,
                                                     0.0, 0})))};
      corrupted_rgb = apply_noise(img.rgb, spec);
    } catch (const std::exception& e) {
      corruption_error = e.what();
    }
  }

  for (std::size_t si = 0; si < config.spaces.size(); ++si) {
    const ColorSpace space = config.spaces[si];
    proto.space = space;

    std::string space_error = corruption_error;
    ColorImage corrupted(1, 1, space);
    if (space_error.empty()) {
      try {
        corrupted = convert_to(corrupted_rgb, space);
      } catch (const std::exception& e) {
        space_error = e.what();
      }
    }
    const ColorImage& reference = references_by_space[combo.image_idx][si];

    for (const FilterSpec& spec : config.denoise_filters) {
      BenchResult row = proto;
      row.filter = spec.kind;
      row.approach = spec.approach;
      if (!space_error.empty()) {
        row.error = space_error;
      } else {
        try {
          const auto t0 = clock::now();
          const ColorImage filtered = apply_denoise(corrupted, spec);
          row.metrics.psnr = psnr(reference, filtered);
          row.metrics.sr = sr(reference, filtered);
          const auto t1 = clock::now();
          row.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        } catch (const std::exception& e) {
          row.error = e.what();
          row.metrics = {};
        }
      }
      rows.push_back(std::move(row));
    }

    for (const FilterSpec& spec : config.edge_filters) {
      BenchResult row = proto;
      row.filter = spec.kind;
      row.approach = spec.approach;
      if (!space_error.empty()) {
        row.error = space_error;
      } else {
        try {
          const auto t0 = clock::now();
          const ScalarImage edge_map = apply_edge(corrupted, spec);
          row.metrics.rsc = rsc(edge_map, config.rsc_options);
          const auto t1 = clock::now();
          row.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        } catch (const std::exception& e) {
          row.error = e.what();
          row.metrics = {};
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

std::vector<BenchResult> run_matrix(const ExperimentConfig& config) {
  std::vector<CorpusImage> corpus;
  corpus.reserve(config.images.size());
  for (std::size_t i = 0; i < config.images.size(); ++i)
    corpus.push_back(materialize(config.images[i], i));

  // References converted once per (image, space): the denoise score is
  // always against the clean image in the scored space.
  std::vector<std::vector<ColorImage>> references_by_space;
  references_by_space.reserve(corpus.size());
  for (const CorpusImage& img : corpus) {
    std::vector<ColorImage> per_space;
    for (ColorSpace space : config.spaces)
      per_space.push_back(convert_to(img.rgb, space));
    references_by_space.push_back(std::move(per_space));
  }

  std::vector<Combo> combos;
  for (std::size_t ii = 0; ii < corpus.size(); ++ii)
    for (std::size_t ni = 0; ni < config.noises.size(); ++ni)
      for (std::uint64_t seed : config.seeds)
        combos.push_back({ii, ni, seed});

  std::vector<std::vector<BenchResult>> per_combo(combos.size());
  const int requested = config.threads > 0
                            ? config.threads
                            : static_cast<int>(
                                  std::thread::hardware_concurrency());
  const int nthreads = std::max(
      1, std::min<int>(requested, static_cast<int>(combos.size())));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= combos.size()) break;
      per_combo[i] =
          run_combo(config, corpus, references_by_space, combos[i]);
    }
  };
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::vector<BenchResult> results;
  for (std::vector<BenchResult>& rows : per_combo)
    for (BenchResult& row : rows) results.push_back(std::move(row));

  if (!config.record_timing)
    for (BenchResult& row : results) row.ms = 0.0;

  std::sort(results.begin(), results.end(),
            [](const BenchResult& a, const BenchResult& b) {
              return sort_key(a) < sort_key(b);
            });
  return results;
}

std::string results_to_csv(const std::vector<BenchResult>& results) {
  std::ostringstream out;
  out << "image,space,filter,approach,noise,seed,psnr_db,sr,rsc,ms,error\n";
  for (const BenchResult& r : results) {
    out << sanitize_csv(r.image_id) << ',' << colorspace_name(r.space) << ','
        << filter_kind_name(r.filter) << ',' << approach_name(r.approach)
        << ',' << r.noise_label << ',' << r.seed << ',';
    if (r.metrics.psnr)
      out << (std::isinf(*r.metrics.psnr) ? "inf" : fmt6(*r.metrics.psnr));
    out << ',';
    if (r.metrics.sr) out << fmt6(*r.metrics.sr);
    out << ',';
    if (r.metrics.rsc) out << fmt6(*r.metrics.rsc);
    out << ',' << fmt6(r.ms) << ',' << sanitize_csv(r.error) << '\n';
  }
  return out.str();
}

void emit_csv(const std::vector<BenchResult>& results,
              const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write CSV: " + path);
  out << results_to_csv(results);
  if (!out) throw std::runtime_error("CSV write failed: " + path);
}

std::string results_to_json_text(const std::vector<BenchResult>& results) {
  json rows = json::array();
  for (const BenchResult& r : results) {
    rows.push_back({{"image", r.image_id},
                    {"space", colorspace_name(r.space)},
                    {"filter", filter_kind_name(r.filter)},
                    {"approach", approach_name(r.approach)},
                    {"noise", r.noise_label},
                    {"seed", r.seed},
                    {"psnr_db", metric_field(r.metrics.psnr)},
                    {"sr", metric_field(r.metrics.sr)},
                    {"rsc", metric_field(r.metrics.rsc)},
                    {"ms", round6(r.ms)},
                    {"error", r.error.empty() ? json(nullptr) : json(r.error)}});
  }
  json j{{"rng", Rng::algorithm()},
         {"seed_derivation", "mix_seed(seed, image_index, noise_id)"},
         {"salt_pepper_mode", "whole-pixel"},
         {"noise_defaults",
          {{"gaussian",
            {{"weak", default_noise_parameter(NoiseKind::Gaussian,
                                              NoiseStrength::Weak)},
             {"strong", default_noise_parameter(NoiseKind::Gaussian,
                                                NoiseStrength::Strong)}}},
           {"speckle",
            {{"weak", default_noise_parameter(NoiseKind::Speckle,
                                              NoiseStrength::Weak)},
             {"strong", default_noise_parameter(NoiseKind::Speckle,
                                                NoiseStrength::Strong)}}},
           {"salt_pepper",
            {{"weak", default_noise_parameter(NoiseKind::SaltPepper,
                                              NoiseStrength::Weak)},
             {"strong", default_noise_parameter(NoiseKind::SaltPepper,
                                                NoiseStrength::Strong)}}}}},
         {"results", std::move(rows)}};
  return j.dump(2);
}

void emit_json(const std::vector<BenchResult>& results,
               const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write JSON: " + path);
  out << results_to_json_text(results) << '\n';
  if (!out) throw std::runtime_error("JSON write failed: " + path);
}

namespace {

constexpr Approach kApproachOrder[] = {
    Approach::Marginal, Approach::Vector, Approach::MarginalThenVector,
    Approach::VectorThenMarginal};

// Strictly-better comparison per metric; ties keep the earlier approach.
std::optional<Approach> pick_winner(const std::map<Approach, double>& means,
                                    bool higher_is_better) {
  std::optional<Approach> winner;
  double best = 0.0;
  for (Approach a : kApproachOrder) {
    const auto it = means.find(a);
    if (it == means.end()) continue;
    if (!winner || (higher_is_better ? it->second > best : it->second < best)) {
      winner = a;
      best = it->second;
    }
  }
  return winner;
}

}  // namespace

Summary summarize(const std::vector<BenchResult>& results) {
  if (results.empty())
    throw std::invalid_argument("summarize: no results");

  struct Accum {
    std::map<Approach, std::pair<double, int>> psnr, sr, rsc;
  };
  std::map<std::tuple<int, std::string, int>, Accum> groups;
  for (const BenchResult& r : results) {
    if (!r.error.empty()) continue;
    Accum& acc = groups[{static_cast<int>(r.filter), r.noise_label,
                         static_cast<int>(r.space)}];
    if (r.metrics.psnr) {
      auto& [sum, n] = acc.psnr[r.approach];
      sum += *r.metrics.psnr;
      ++n;
    }
    if (r.metrics.sr) {
      auto& [sum, n] = acc.sr[r.approach];
      sum += *r.metrics.sr;
      ++n;
    }
    if (r.metrics.rsc) {
      auto& [sum, n] = acc.rsc[r.approach];
      sum += *r.metrics.rsc;
      ++n;
    }
  }

  Summary summary;
  std::map<Approach, int> psnr_wins, sr_wins, rsc_wins;
  int psnr_cells = 0, sr_cells = 0, rsc_cells = 0;

  for (const auto& [key, acc] : groups) {
    SummaryCell cell;
    cell.filter = static_cast<FilterKind>(std::get<0>(key));
    cell.noise_label = std::get<1>(key);
    cell.space = static_cast<ColorSpace>(std::get<2>(key));
    cell.edge = is_edge_kind(cell.filter);
    for (const auto& [a, sn] : acc.psnr) cell.mean_psnr[a] = sn.first / sn.second;
    for (const auto& [a, sn] : acc.sr) cell.mean_sr[a] = sn.first / sn.second;
    for (const auto& [a, sn] : acc.rsc) cell.mean_rsc[a] = sn.first / sn.second;

    cell.psnr_winner = pick_winner(cell.mean_psnr, /*higher_is_better=*/true);
    cell.sr_winner = pick_winner(cell.mean_sr, /*higher_is_better=*/false);
    cell.rsc_winner = pick_winner(cell.mean_rsc, /*higher_is_better=*/true);

    if (cell.psnr_winner) {
      ++psnr_wins[*cell.psnr_winner];
      ++psnr_cells;
    }
    if (cell.sr_winner) {
      ++sr_wins[*cell.sr_winner];
      ++sr_cells;
    }
    if (cell.rsc_winner) {
      ++rsc_wins[*cell.rsc_winner];
      ++rsc_cells;
    }
    summary.cells.push_back(std::move(cell));
  }

  for (const auto& [a, n] : psnr_wins)
    summary.psnr_win_fraction[a] = static_cast<double>(n) / psnr_cells;
  for (const auto& [a, n] : sr_wins)
    summary.sr_win_fraction[a] = static_cast<double>(n) / sr_cells;
  for (const auto& [a, n] : rsc_wins)
    summary.rsc_win_fraction[a] = static_cast<double>(n) / rsc_cells;
  return summary;
}

std::string format_summary(const Summary& summary) {
  std::ostringstream out;
  auto print_metric = [&](const char* name, const SummaryCell& cell,
                          const std::map<Approach, double>& means,
                          const std::optional<Approach>& winner) {
    if (means.empty()) return;
    out << filter_kind_name(cell.filter) << "  " << cell.noise_label << "  "
        << colorspace_name(cell.space) << "  " << name << " ";
    for (Approach a : kApproachOrder) {
      const auto it = means.find(a);
      if (it == means.end()) continue;
      out << ' ' << approach_name(a) << '=' << fmt6(it->second);
    }
    if (winner) out << "  winner=" << approach_name(*winner);
    out << '\n';
  };

  for (const SummaryCell& cell : summary.cells) {
    print_metric("psnr", cell, cell.mean_psnr, cell.psnr_winner);
    print_metric("sr  ", cell, cell.mean_sr, cell.sr_winner);
    print_metric("rsc ", cell, cell.mean_rsc, cell.rsc_winner);
  }

  auto print_fractions = [&](const char* name,
                             const std::map<Approach, double>& fractions) {
    if (fractions.empty()) return;
    out << name << " wins:";
    for (Approach a : kApproachOrder) {
      const auto it = fractions.find(a);
      if (it == fractions.end()) continue;
      out << ' ' << approach_name(a) << '=' << fmt6(it->second);
    }
    out << '\n';
  };
  print_fractions("psnr", summary.psnr_win_fraction);
  print_fractions("sr", summary.sr_win_fraction);
  print_fractions("rsc", summary.rsc_win_fraction);
  return out.str();
}

}  // namespace docfilter
