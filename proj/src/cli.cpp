#include "depthcut/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "depthcut/bench.hpp"
#include "depthcut/cutters.hpp"
#include "depthcut/depth_graph.hpp"
#include "depthcut/io.hpp"
#include "depthcut/render.hpp"
#include "depthcut/scenes.hpp"
#include "depthcut/validation.hpp"

namespace depthcut {

namespace {

using nlohmann::json;

constexpr int kExitCyclic = 1;
constexpr int kExitError = 2;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("DEPTHCUT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, std::string("DEPTHCUT_SEED is not an integer: ") + env);
    }
  }
  return 0;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << text;
  else
    write_text_file(out_path, text);
}

json report_to_json(const ValidationReport& report) {
  json violations = json::array();
  for (const Violation& v : report.violations) violations.push_back({{"code", to_string(v.code)}, {"ids", v.ids}});
  return {{"ok", report.ok}, {"violations", violations}};
}

struct PartitionFlags {
  std::optional<int> degree;
  std::optional<std::size_t> leaf_threshold;
  std::optional<std::uint64_t> seed;
  std::string config;

  void attach(CLI::App* app) {
    app->add_option("--degree", degree, "number of partition planes D");
    app->add_option("--leaf-threshold", leaf_threshold, "largest subproblem cut naively");
    app->add_option("--seed", seed, "random seed (falls back to DEPTHCUT_SEED)");
    app->add_option("--config", config, "JSON file with a partition parameter block");
  }

  PartitionParams resolve() const {
    PartitionParams p;
    if (!config.empty()) {
      const json j = read_json_file(config);
      p = params_from_json(j.contains("partition") ? j.at("partition") : j, p);
    }
    if (degree) p.degree = *degree;
    if (leaf_threshold) p.leaf_threshold = *leaf_threshold;
    if (seed || config.empty() || std::getenv("DEPTHCUT_SEED")) p.seed = resolve_seed(seed ? seed : std::nullopt);
    return params_from_json(json::object(), p);
  }
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"depthcut: eliminate depth cycles among lines and segments in 3-space"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;

  // validate
  auto* validate = app.add_subcommand("validate", "check general position");
  std::string scene_path;
  validate->add_option("scene", scene_path, "scene JSON")->required();

  // gen
  auto* gen = app.add_subcommand("gen", "generate a scene");
  std::string kind = "random-lines";
  std::size_t size = 10;
  std::optional<std::uint64_t> gen_seed;
  long bound = 1000;
  std::string epsilon = "1/64";
  long max_extent = 0;
  gen->add_option("--kind", kind, "random-lines | random-segments | grid-lower-bound | grid-pattern");
  gen->add_option("--size,-n", size, "n for random scenes, m or k for grids");
  gen->add_option("--seed", gen_seed, "random seed (falls back to DEPTHCUT_SEED)");
  gen->add_option("--bound", bound, "coordinate bound B");
  gen->add_option("--epsilon", epsilon, "grid perturbation as a fraction of joint spacing");
  gen->add_option("--max-extent", max_extent, "random segments: per-axis extent limit (0 = none)");
  gen->add_option("--out,-o", out_path, "output file (default stdout)");

  // cut
  auto* cut = app.add_subcommand("cut", "compute a cut set");
  std::string strategy_name = "partition";
  PartitionFlags cut_flags;
  cut->add_option("scene", scene_path, "scene JSON")->required();
  cut->add_option("--strategy", strategy_name, "naive | greedy | partition | segment-sensitive");
  cut_flags.attach(cut);
  cut->add_option("--out,-o", out_path, "CutSet output file (default stdout)");
  cut->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  // verify
  auto* verify = app.add_subcommand("verify", "exit 0 iff the cut pieces admit a depth order");
  std::string cuts_path;
  verify->add_option("scene", scene_path, "scene JSON")->required();
  verify->add_option("cuts", cuts_path, "CutSet JSON")->required();
  verify->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  // bench
  auto* bench = app.add_subcommand("bench", "strategy x size x seed benchmark");
  std::vector<std::size_t> sizes{64, 128, 256, 512};
  std::size_t seeds = 5;
  std::vector<std::string> strategies{"naive", "greedy", "partition"};
  bool segments = false;
  std::string svg_path;
  PartitionFlags bench_flags;
  bench->add_option("--sizes", sizes, "scene sizes")->delimiter(',');
  bench->add_option("--seeds", seeds, "seeds per size");
  bench->add_option("--strategies", strategies, "strategies to run")->delimiter(',');
  bench->add_flag("--segments", segments, "random segment scenes instead of lines");
  bench_flags.attach(bench);
  bench->add_option("--out,-o", out_path, "CSV output file");
  bench->add_option("--svg", svg_path, "scatter plot output file");
  bench->add_option("--format", format, "stdout format: csv | svg | json")
      ->check(CLI::IsMember({"json", "csv", "svg"}));

  // render-svg
  auto* render = app.add_subcommand("render-svg", "painter's-algorithm drawing of the cut pieces");
  render->add_option("scene", scene_path, "scene JSON")->required();
  render->add_option("cuts", cuts_path, "CutSet JSON (default: no cuts)");
  render->add_option("--out,-o", out_path, "SVG output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*validate) {
      const Scene scene = read_scene(scene_path);
      const ValidationReport report = validate_scene(scene);
      out << dump(report_to_json(report));
      return report.ok ? 0 : 1;
    }

    if (*gen) {
      GeneratorSpec spec;
      spec.kind = parse_generator_kind(kind);
      spec.size = size;
      spec.seed = resolve_seed(gen_seed);
      spec.bound = bound;
      spec.epsilon = parse_scalar(epsilon);
      spec.segment_length = max_extent;
      emit(dump(scene_to_json(generate(spec))), out_path, out);
      return 0;
    }

    if (*cut) {
      const Scene scene = read_scene(scene_path);
      const Strategy strategy = parse_strategy(strategy_name);
      const CutSet cuts = run_strategy(scene, strategy, cut_flags.resolve());
      std::string body;
      if (format == "csv") {
        std::ostringstream csv;
        csv << "id,t\n";
        for (const Cut& c : cuts) csv << c.object << ',' << format_scalar(c.t) << '\n';
        body = csv.str();
      } else {
        body = dump(cutset_to_json(cuts));
      }
      emit(body, out_path, out);
      std::ostream& summary = out_path.empty() ? err : out;
      summary << "strategy=" << to_string(strategy) << " objects=" << scene.size() << " cuts=" << cuts.size()
              << " pieces=" << scene.size() + cuts.size() << '\n';
      return 0;
    }

    if (*verify) {
      const Scene scene = read_scene(scene_path);
      const CutSet cuts = read_cutset(cuts_path);
      const DepthGraph g = build_graph(scene, apply_cuts(scene, cuts));
      if (depth_order(g)) {
        out << "acyclic: " << g.node_count() << " pieces, " << g.edges.size() << " depth relations\n";
        return 0;
      }
      const auto cycle = find_simple_cycle(scene, g);
      out << "cyclic: " << g.node_count() << " pieces\n" << dump(cycle_to_json(scene, g.pieces, *cycle));
      return kExitCyclic;
    }

    if (*bench) {
      BenchConfig config;
      config.sizes = sizes;
      config.seeds = seeds;
      config.segments = segments;
      config.strategies.clear();
      for (const auto& s : strategies) config.strategies.push_back(parse_strategy(s));
      config.params = bench_flags.resolve();
      config.base_seed = config.params.seed;
      const auto rows = run_bench(config);
      const std::string csv = bench_csv(rows);
      if (!out_path.empty()) write_text_file(out_path, csv);
      if (!svg_path.empty()) write_text_file(svg_path, bench_svg(rows));
      if (format == "csv" && out_path.empty()) out << csv;
      if (format == "svg" && svg_path.empty()) out << bench_svg(rows);
      json fits = json::object();
      for (Strategy s : config.strategies) {
        const double e = fit_exponent(rows, s);
        fits[to_string(s)] = std::isnan(e) ? json(nullptr) : json(e);
        err << "fitted exponent " << to_string(s) << ": " << e << '\n';
      }
      if (format == "json") out << dump({{"rows", rows.size()}, {"exponents", fits}});
      const bool all_acyclic = std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.acyclic; });
      return all_acyclic ? 0 : kExitCyclic;
    }

    if (*render) {
      const Scene scene = read_scene(scene_path);
      const CutSet cuts = cuts_path.empty() ? CutSet{} : read_cutset(cuts_path);
      emit(render_svg(scene, cuts), out_path, out);
      return 0;
    }
  } catch (const Error& e) {
    err << "depthcut: " << e.what() << '\n';
    return e.code() == ErrorCode::CyclicInput ? kExitCyclic : kExitError;
  } catch (const std::exception& e) {
    err << "depthcut: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace depthcut
