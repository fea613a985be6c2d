#include "depthcut/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "depthcut/scenes.hpp"

namespace depthcut {

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (Strategy strategy : config.strategies) {
    if (strategy == Strategy::SegmentSensitive && !config.segments) continue;
    for (std::size_t n : config.sizes)
      for (std::size_t s = 0; s < config.seeds; ++s) {
        BenchRow row;
        row.n = n;
        row.seed = config.base_seed + s;
        row.strategy = strategy;
        const Scene scene = config.segments ? gen_random_segments(n, row.seed) : gen_random(n, row.seed);
        PartitionParams params = config.params;
        params.seed = row.seed;
        const auto start = std::chrono::steady_clock::now();
        const CutSet cuts = run_strategy(scene, strategy, params);
        row.wall_time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        row.cut_count = cuts.size();
        row.piece_count = scene.size() + cuts.size();
        row.acyclic = cuts_eliminate_cycles(scene, cuts);
        rows.push_back(row);
      }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "n,seed,strategy,cut_count,piece_count,wall_time_ms,acyclic\n";
  for (const BenchRow& r : rows)
    out << r.n << ',' << r.seed << ',' << to_string(r.strategy) << ',' << r.cut_count << ',' << r.piece_count << ','
        << r.wall_time_ms << ',' << (r.acyclic ? "true" : "false") << '\n';
  return out.str();
}

double fit_exponent(const std::vector<BenchRow>& rows, Strategy strategy) {
  std::vector<std::pair<double, double>> pts;
  for (const BenchRow& r : rows)
    if (r.strategy == strategy && r.cut_count > 0)
      pts.emplace_back(std::log(static_cast<double>(r.n)), std::log(static_cast<double>(r.cut_count)));
  double mx = 0, my = 0;
  for (auto [x, y] : pts) {
    mx += x;
    my += y;
  }
  if (pts.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxx = 0, sxy = 0;
  for (auto [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0) return std::numeric_limits<double>::quiet_NaN();
  return sxy / sxx;
}

std::string bench_svg(const std::vector<BenchRow>& rows) {
  const double w = 640, h = 480, pad = 60;
  double nmin = 1, nmax = 2, cmin = 1, cmax = 2;
  if (!rows.empty()) {
    nmin = cmin = std::numeric_limits<double>::infinity();
    nmax = cmax = 0;
    for (const BenchRow& r : rows) {
      const double n = static_cast<double>(r.n);
      nmin = std::min(nmin, n);
      nmax = std::max(nmax, n);
      cmin = std::min({cmin, std::max(1.0, static_cast<double>(r.cut_count)), std::pow(n, 1.5)});
      cmax = std::max({cmax, static_cast<double>(r.cut_count), n * (n - 1)});
    }
    if (nmax <= nmin) nmax = nmin * 2;
    if (cmax <= cmin) cmax = cmin * 2;
  }
  const double lx0 = std::log(nmin), lx1 = std::log(nmax), ly0 = std::log(cmin), ly1 = std::log(cmax);
  auto px = [&](double n) { return pad + (std::log(n) - lx0) / (lx1 - lx0) * (w - 2 * pad); };
  auto py = [&](double c) { return h - pad - (std::log(std::max(c, 1.0)) - ly0) / (ly1 - ly0) * (h - 2 * pad); };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<line x1=\"" << pad << "\" y1=\"" << h - pad << "\" x2=\"" << w - pad << "\" y2=\"" << h - pad
      << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << pad << "\" y1=\"" << pad << "\" x2=\"" << pad << "\" y2=\"" << h - pad
      << "\" stroke=\"black\"/>\n"
      << "<text x=\"" << w / 2 << "\" y=\"" << h - 15 << "\" text-anchor=\"middle\">n (log)</text>\n"
      << "<text x=\"15\" y=\"" << h / 2 << "\" transform=\"rotate(-90 15 " << h / 2
      << ")\" text-anchor=\"middle\">cuts (log)</text>\n";

  auto curve = [&](const char* name, const char* color, auto f) {
    svg << "<polyline class=\"reference\" data-name=\"" << name << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-dasharray=\"6 4\" points=\"";
    for (int k = 0; k <= 32; ++k) {
      const double n = std::exp(lx0 + (lx1 - lx0) * k / 32.0);
      svg << px(n) << ',' << py(f(n)) << ' ';
    }
    svg << "\"/>\n";
  };
  curve("n(n-1)", "#999999", [](double n) { return n * (n - 1); });
  curve("n^1.5", "#555555", [](double n) { return std::pow(n, 1.5); });

  static const std::map<Strategy, const char*> colors{{Strategy::Naive, "#d62728"},
                                                      {Strategy::Greedy, "#2ca02c"},
                                                      {Strategy::Partition, "#1f77b4"},
                                                      {Strategy::SegmentSensitive, "#9467bd"}};
  int legend = 0;
  for (const auto& [strategy, color] : colors) {
    bool any = false;
    for (const BenchRow& r : rows) {
      if (r.strategy != strategy) continue;
      any = true;
      svg << "<circle class=\"row\" data-strategy=\"" << to_string(strategy) << "\" cx=\"" << px(static_cast<double>(r.n))
          << "\" cy=\"" << py(static_cast<double>(r.cut_count)) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    if (any)
      svg << "<text x=\"" << pad + 10 << "\" y=\"" << pad + 16 * legend++ << "\" fill=\"" << color << "\">"
          << to_string(strategy) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace depthcut
