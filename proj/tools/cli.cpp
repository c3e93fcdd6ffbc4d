#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "animst/dataset.hpp"
#include "animst/error.hpp"
#include "animst/mst.hpp"
#include "animst/pipeline.hpp"
#include "animst/query.hpp"
#include "animst/report.hpp"

namespace animst::cli {
namespace fs = std::filesystem;

namespace {

constexpr const char* kCatalogFile = "catalog.jsonl";
constexpr const char* kPairCacheFile = "pairs.bin";
constexpr const char* kTreeFile = "tree.bin";
constexpr const char* kReportFile = "centrality.tsv";
constexpr const char* kDistributionFile = "distributions.tsv";
constexpr const char* kManifestFile = "build.json";
constexpr const char* kManifestFormat = "animst-build-v1";

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::usage: return kUsage;
    case ErrorKind::validation:
    case ErrorKind::io: return kDataValidation;
    case ErrorKind::computation:
    case ErrorKind::contract: return kComputation;
  }
  return kComputation;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  std::istringstream in(value);
  T v{};
  in >> v;
  if (!in || !in.eof())
    throw Error(ErrorKind::usage, "config key '" + key + "': bad value '" + value + "'");
  return v;
}

bool parse_switch(const std::string& key, const std::string& value) {
  if (value == "on" || value == "true" || value == "1") return true;
  if (value == "off" || value == "false" || value == "0") return false;
  throw Error(ErrorKind::usage, "config key '" + key + "': expected on or off, got '" + value + "'");
}

fs::path require_file(const fs::path& dir, const char* name) {
  const auto p = dir / name;
  if (!fs::exists(p))
    throw Error(ErrorKind::io, "missing build artifact '" + p.string() + "' (run build first)");
  return p;
}

void write_text_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw Error(ErrorKind::io, "cannot write '" + path.string() + "'");
}

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open '" + path.string() + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Output to a file when a path is given, otherwise to `fallback`.
template <typename Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::io, "cannot write '" + path + "'");
  write(out);
  if (!out) throw Error(ErrorKind::io, "write failed for '" + path + "'");
}

/// Everything a query needs from a build directory.
struct BuildArtifacts {
  Catalog catalog;
  SpanningTree tree;
};

BuildArtifacts load_build(const fs::path& dir) {
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(read_text_file(require_file(dir, kManifestFile)));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::io, std::string("unreadable build manifest: ") + e.what());
  }
  if (manifest.value("format", "") != kManifestFormat)
    throw Error(ErrorKind::io, "unsupported build manifest in '" + dir.string() + "'");
  auto catalog =
      load_catalog(require_file(dir, kCatalogFile), manifest.at("n_categories").get<std::size_t>());
  auto tree = load_tree(require_file(dir, kTreeFile));
  if (tree.size() != catalog.size())
    throw Error(ErrorKind::io, "tree and catalog in '" + dir.string() + "' disagree on size");
  return {std::move(catalog), std::move(tree)};
}

TreeQuery make_query(BuildArtifacts artifacts) {
  std::vector<std::string> ids;
  ids.reserve(artifacts.catalog.size());
  for (const auto& r : artifacts.catalog.records()) ids.push_back(r.id);
  return TreeQuery(std::move(artifacts.tree), std::move(ids));
}

std::string format_real(double v) {
  std::ostringstream s;
  s.precision(6);
  s << std::fixed << v;
  return s.str();
}

nlohmann::ordered_json range_json(const MeasureRange& r) {
  return {{"min", r.min}, {"max", r.max}};
}

}  // namespace

void apply_config_file(const fs::path& path, PipelineConfig& config,
                       const std::vector<std::string>& locked) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::usage, "cannot open config file '" + path.string() + "'");
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::usage, "config line " + std::to_string(line_no) + ": expected key=value");
    const auto key = trim(std::string_view(line).substr(0, eq));
    const auto value = trim(std::string_view(line).substr(eq + 1));
    if (std::find(locked.begin(), locked.end(), key) != locked.end()) continue;
    if (key == "n_categories") {
      config.n_categories = parse_number<std::size_t>(key, value);
    } else if (key == "eigen_tol") {
      config.eigen_tol = parse_number<double>(key, value);
    } else if (key == "eigen_max_iter") {
      config.eigen_max_iter = parse_number<std::size_t>(key, value);
    } else if (key == "seed") {
      config.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "pair_cache") {
      config.pair_cache = parse_switch(key, value);
    } else if (key == "workers") {
      config.workers = parse_number<unsigned>(key, value);
    } else {
      throw Error(ErrorKind::usage, "config line " + std::to_string(line_no) + ": unknown key '" +
                                        key + "'");
    }
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum-spanning-tree similarity analytics for anime catalogs", "animst"};
  app.require_subcommand(1);

  PipelineConfig config;
  std::string config_path;
  std::string pair_cache_switch;
  auto add_pipeline_options = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "key=value config file (flags take precedence)");
    cmd->add_option("--n-categories", config.n_categories, "number of vote categories")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", config.seed, "seed for synthetic catalogs");
  };

  // generate
  auto* generate = app.add_subcommand("generate", "write a synthetic catalog");
  std::size_t gen_k = 0;
  std::string gen_out;
  generate->add_option("--k", gen_k, "number of records")->required();
  generate->add_option("--out,-o", gen_out, "output file (default: stdout)");
  add_pipeline_options(generate);

  // build
  auto* build = app.add_subcommand("build", "compute similarities, spanning tree and centralities");
  std::string build_input;
  std::size_t build_synthetic = 0;
  std::string build_out;
  auto* input_opt = build->add_option("--input,-i", build_input, "catalog file (JSON lines)");
  auto* synth_opt =
      build->add_option("--synthetic", build_synthetic, "use a synthetic catalog of this size");
  input_opt->excludes(synth_opt);
  build->add_option("--out-dir,-o", build_out, "artifact directory")->required();
  add_pipeline_options(build);
  build->add_option("--eigen-tol", config.eigen_tol, "eigenvector residual tolerance");
  build->add_option("--eigen-max-iter", config.eigen_max_iter, "power iteration limit");
  build->add_option("--pair-cache", pair_cache_switch, "write the raw pair cache (on|off)")
      ->check(CLI::IsMember({"on", "off"}));
  build->add_option("--workers,-j", config.workers, "worker threads (default: all cores)");

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "write the spanning tree as a graphviz DOT file");
  std::string dir;
  std::string dot_out;
  bool dot_titles = false;
  dot->add_option("--dir,-d", dir, "build directory")->required();
  dot->add_option("--out,-o", dot_out, "output file (default: stdout)");
  dot->add_flag("--titles", dot_titles, "label nodes with titles instead of ids");

  // top
  auto* top = app.add_subcommand("top", "rank items by a centrality measure");
  std::string top_by_name = "total";
  std::size_t top_n = 3;
  top->add_option("--dir,-d", dir, "build directory")->required();
  top->add_option("--by", top_by_name, "degree|eigenvector|betweenness|closeness|total");
  top->add_option("--n,-n", top_n, "number of rows");

  // recommend
  auto* recommend = app.add_subcommand("recommend", "list items most similar to one item");
  std::string item_id;
  std::size_t nearest = 0;
  recommend->add_option("--dir,-d", dir, "build directory")->required();
  recommend->add_option("--id", item_id, "item id")->required();
  recommend->add_option("--k", nearest, "k nearest by tree hops (default: tree neighbors)");

  // path
  auto* path_cmd = app.add_subcommand("path", "walk between two items along the tree");
  std::string from_id;
  std::string to_id;
  path_cmd->add_option("--dir,-d", dir, "build directory")->required();
  path_cmd->add_option("--from", from_id, "start id")->required();
  path_cmd->add_option("--to", to_id, "end id")->required();

  // distributions
  auto* dist = app.add_subcommand("distributions", "per-item centrality table, unsorted");
  std::string dist_out;
  dist->add_option("--dir,-d", dir, "build directory")->required();
  dist->add_option("--out,-o", dist_out, "output file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!config_path.empty()) {
      CLI::App* cmd = app.get_subcommands().front();
      std::vector<std::string> locked;
      const std::pair<const char*, const char*> flag_keys[] = {
          {"--n-categories", "n_categories"}, {"--eigen-tol", "eigen_tol"},
          {"--eigen-max-iter", "eigen_max_iter"}, {"--seed", "seed"},
          {"--pair-cache", "pair_cache"}, {"--workers", "workers"}};
      for (const auto& [flag, key] : flag_keys) {
        const auto* opt = cmd->get_option_no_throw(flag);
        if (opt != nullptr && opt->count() > 0) locked.emplace_back(key);
      }
      apply_config_file(config_path, config, locked);
    }
    if (!pair_cache_switch.empty()) config.pair_cache = pair_cache_switch == "on";
    if (config.workers == 0) config.workers = std::max(1u, std::thread::hardware_concurrency());

    if (*generate) {
      const auto catalog = generate_synthetic(gen_k, config.seed, config.n_categories);
      emit(gen_out, out, [&](std::ostream& o) { write_catalog(o, catalog); });
      return kOk;
    }

    if (*build) {
      if (build_input.empty() && build_synthetic == 0)
        throw Error(ErrorKind::usage, "build needs --input or --synthetic");
      const auto catalog = build_input.empty()
                               ? generate_synthetic(build_synthetic, config.seed, config.n_categories)
                               : load_catalog(build_input, config.n_categories);
      const fs::path out_dir = build_out;
      fs::create_directories(out_dir);
      if (!config.pair_cache) fs::remove(out_dir / kPairCacheFile);

      PipelineOptions options;
      options.workers = config.workers;
      if (config.pair_cache) options.pair_cache = out_dir / kPairCacheFile;
      options.eigen = {config.eigen_tol, config.eigen_max_iter};
      const auto result = run_pipeline(catalog, options);

      save_catalog(out_dir / kCatalogFile, catalog);
      save_tree(out_dir / kTreeFile, result.tree);
      std::ostringstream report;
      write_centrality_report(report, catalog, result.centrality);
      write_text_file(out_dir / kReportFile, report.str());
      std::ostringstream distributions;
      write_distributions(distributions, catalog, result.centrality);
      write_text_file(out_dir / kDistributionFile, distributions.str());

      nlohmann::ordered_json manifest;
      manifest["format"] = kManifestFormat;
      manifest["n_categories"] = config.n_categories;
      manifest["eigen_tol"] = config.eigen_tol;
      manifest["eigen_max_iter"] = config.eigen_max_iter;
      manifest["seed"] = config.seed;
      manifest["pair_cache"] = config.pair_cache;
      manifest["k"] = catalog.size();
      manifest["pairs"] = result.pairs;
      manifest["total_weight"] = result.tree.total_weight();
      manifest["eigenvalue"] = result.centrality.eigenvalue;
      manifest["eigen_residual"] = result.centrality.eigen_residual;
      manifest["normalization"] = {{"crew", range_json(result.stats.crew)},
                                   {"score", range_json(result.stats.score)},
                                   {"topic", range_json(result.stats.topic)}};
      write_text_file(out_dir / kManifestFile, manifest.dump(2) + "\n");

      std::istringstream report_in(report.str());
      const auto best = top_by(read_centrality_report(report_in), Measure::total, 3);
      out << "items\t" << catalog.size() << '\n'
          << "edges considered\t" << result.pairs << '\n'
          << "mst total weight\t" << format_real(result.tree.total_weight()) << '\n';
      for (std::size_t r = 0; r < best.size(); ++r)
        out << "top " << r + 1 << "\t" << best[r].id << '\t' << best[r].title << '\t'
            << format_real(best[r].total) << '\n';
      return kOk;
    }

    const fs::path build_dir = dir;

    if (*dot) {
      const auto artifacts = load_build(build_dir);
      emit(dot_out, out,
           [&](std::ostream& o) { write_dot(o, artifacts.tree, artifacts.catalog, dot_titles); });
      return kOk;
    }

    if (*top) {
      const auto measure = parse_measure(top_by_name);
      std::ifstream in(require_file(build_dir, kReportFile));
      const auto rows = top_by(read_centrality_report(in), measure, top_n);
      for (std::size_t r = 0; r < rows.size(); ++r)
        out << r + 1 << '\t' << rows[r].id << '\t' << rows[r].title << '\t'
            << format_real(measure_value(rows[r], measure)) << '\n';
      return kOk;
    }

    if (*recommend) {
      auto artifacts = load_build(build_dir);
      const auto catalog = std::move(artifacts.catalog);
      const auto query = make_query({catalog, std::move(artifacts.tree)});
      if (nearest == 0) {
        for (const auto& n : query.neighbors(item_id))
          out << n.id << "\t1\t" << format_real(n.delta) << '\t'
              << catalog[catalog.index_of(n.id)].title << '\n';
      } else {
        for (const auto& n : query.k_nearest(item_id, nearest))
          out << n.id << '\t' << n.hops << '\t' << catalog[catalog.index_of(n.id)].title << '\n';
      }
      return kOk;
    }

    if (*path_cmd) {
      const auto query = make_query(load_build(build_dir));
      const auto p = query.path(from_id, to_id);
      out << p.hops << (p.hops == 1 ? " walk" : " walks");
      if (!p.via.empty()) {
        out << " via ";
        for (std::size_t n = 0; n < p.via.size(); ++n) out << (n ? ", " : "") << p.via[n];
      }
      out << '\n';
      return kOk;
    }

    if (*dist) {
      const auto text = read_text_file(require_file(build_dir, kDistributionFile));
      emit(dist_out, out, [&](std::ostream& o) { o << text; });
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kDataValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kComputation;
  }
  return kUsage;
}

}  // namespace animst::cli
