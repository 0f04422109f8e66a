// Command-line front end: cliques, delta-cliques, transform, check, bench, stats.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linkstream/linkstream.hpp"

namespace ls = linkstream;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kVerifyFailed = 2;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ls::Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Output file or stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw ls::Error("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw ls::Error("write failure");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

ls::io::CliqueFormat parse_format(const std::string& f) {
  if (f == "plain") return ls::io::CliqueFormat::plain;
  return ls::io::CliqueFormat::json_lines;
}

ls::LinkStream load_duration(const std::string& text) {
  auto in = ls::io::parse_duration_stream(text);
  return ls::build_stream(in.records, in.horizon);
}

ls::InstantStream load_instant(const std::string& text) {
  auto in = ls::io::parse_instant_stream(text);
  return ls::build_instant_stream(in.records, in.horizon);
}

std::vector<ls::TimePoint> parse_grid(const std::string& s) {
  std::vector<ls::TimePoint> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used != tok.size() || v < 0) throw ls::Error("bad delta grid entry '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

// ---- cliques / delta-cliques / transform / stats ---------------------------

int cmd_cliques(const std::string& input, const std::string& format, const std::string& output) {
  const auto t0 = Clock::now();
  const auto stream = load_duration(read_input(input));
  const auto cliques = ls::enumerate_maximal_cliques(stream);
  Sink sink(output);
  ls::io::write_cliques(cliques, stream.nodes(), parse_format(format), sink.stream());
  sink.finish();
  std::cerr << "n " << stream.node_count() << " m " << stream.link_count() << " cliques "
            << cliques.size() << " elapsed_ms " << static_cast<long long>(ms_since(t0)) << '\n';
  return kOk;
}

int cmd_delta_cliques(const std::string& input, ls::TimePoint delta, const std::string& format,
                      const std::string& output) {
  const auto t0 = Clock::now();
  const auto instant = load_instant(read_input(input));
  const auto cliques = ls::enumerate_maximal_delta_cliques(instant, ls::DeltaParam(delta));
  Sink sink(output);
  ls::io::write_cliques(cliques, instant.nodes(), parse_format(format), sink.stream());
  sink.finish();
  std::cerr << "n " << instant.node_count() << " m " << instant.event_count() << " delta " << delta
            << " cliques " << cliques.size() << " elapsed_ms "
            << static_cast<long long>(ms_since(t0)) << '\n';
  return kOk;
}

int cmd_transform(const std::string& input, ls::TimePoint delta, const std::string& output) {
  const auto instant = load_instant(read_input(input));
  const auto stream = ls::transform(instant, ls::DeltaParam(delta));
  Sink sink(output);
  ls::io::write_stream(stream, sink.stream());
  sink.finish();
  std::cerr << "events " << instant.event_count() << " links " << stream.link_count() << '\n';
  return kOk;
}

int cmd_stats(const std::string& input) {
  const auto text = read_input(input);
  if (ls::io::detect_kind(text) == ls::io::StreamKind::instant) {
    const auto s = load_instant(text);
    std::cout << "kind instant\n"
              << "n " << s.node_count() << '\n'
              << "events " << s.event_count() << '\n'
              << "horizon " << s.horizon().begin << ' ' << s.horizon().end << '\n'
              << "pairs " << s.pairs().size() << '\n';
    return kOk;
  }
  const auto st = ls::stream_stats(load_duration(text));
  std::cout << "kind duration\n"
            << "n " << st.n << '\n'
            << "m " << st.m << '\n'
            << "horizon " << st.horizon.begin << ' ' << st.horizon.end << '\n'
            << "pairs " << st.pair_count << '\n'
            << "total_duration " << st.total_link_duration << '\n'
            << "isolated " << st.isolated << '\n';
  return kOk;
}

// ---- check ------------------------------------------------------------------

struct CheckConfig {
  std::string kind = "duration";
  std::size_t trials = 1000;
  std::size_t max_nodes = 6;
  std::size_t max_links = 30;
  std::uint64_t seed = 42;
  ls::TimePoint max_horizon = 100;
  std::string delta_grid = "0,1,2,5";
};

// Random trial shape derived from one seed.
ls::GeneratorSpec trial_spec(const CheckConfig& cfg, std::uint64_t trial_seed, ls::TimePoint min_span) {
  std::mt19937_64 rng(trial_seed);
  const auto pick = [&](auto lo, auto hi) {
    return std::uniform_int_distribution<decltype(lo)>(lo, hi)(rng);
  };
  ls::GeneratorSpec g;
  g.n = pick(std::size_t{2}, std::max<std::size_t>(2, cfg.max_nodes));
  g.m = pick(std::size_t{1}, std::max<std::size_t>(1, cfg.max_links));
  g.horizon = {0, pick(std::max<ls::TimePoint>(1, min_span), std::max(min_span, cfg.max_horizon))};
  g.seed = rng();
  return g;
}

int cmd_check(const CheckConfig& cfg) {
  if (cfg.kind != "duration" && cfg.kind != "delta") throw ls::Error("--kind must be duration or delta");
  const auto grid = parse_grid(cfg.delta_grid);
  const ls::TimePoint min_span = grid.empty() ? 1 : *std::max_element(grid.begin(), grid.end());
  const ls::oracle::OracleLimits limits{cfg.max_nodes, std::max<std::size_t>(cfg.max_links, 1)};
  std::size_t failures = 0, comparisons = 0;
  const auto t0 = Clock::now();

  for (std::size_t k = 0; k < cfg.trials; ++k) {
    const std::uint64_t trial_seed = cfg.seed * 1000003ULL + k;
    const auto spec = trial_spec(cfg, trial_seed, cfg.kind == "delta" ? min_span : 1);
    if (cfg.kind == "duration") {
      const auto stream = ls::generate_duration_stream(spec);
      const auto fast = ls::sorted(ls::enumerate_maximal_cliques(stream));
      const auto truth = ls::oracle::oracle_maximal_cliques(stream, limits);
      ++comparisons;
      if (fast != truth) {
        ++failures;
        std::cerr << "FAIL trial " << k << " seed " << trial_seed << ": fast " << fast.size()
                  << " cliques, oracle " << truth.size() << '\n';
      }
    } else {
      const auto instant = ls::generate_instant_stream(spec);
      for (ls::TimePoint d : grid) {
        const ls::DeltaParam delta(d);
        const auto fast = ls::sorted(ls::enumerate_maximal_delta_cliques(instant, delta));
        const auto truth = ls::oracle::oracle_maximal_delta_cliques(instant, delta, limits);
        ++comparisons;
        if (fast != truth) {
          ++failures;
          std::cerr << "FAIL trial " << k << " seed " << trial_seed << " delta " << d << ": fast "
                    << fast.size() << " cliques, oracle " << truth.size() << '\n';
        }
      }
    }
  }
  std::cerr << "check " << cfg.kind << ": " << comparisons << " comparisons, " << failures
            << " failures, elapsed_ms " << static_cast<long long>(ms_since(t0)) << '\n';
  return failures == 0 ? kOk : kVerifyFailed;
}

// ---- bench ------------------------------------------------------------------

struct BenchRecord {
  std::string dataset;
  std::string delta;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t clique_count = 0;
  long long transform_ms = 0;
  long long enum_ms = 0;
  long long total_ms = 0;
};

struct Cell {
  double transform_ms = 0;
  double enum_ms = 0;
  double total_ms = 0;
  std::size_t cliques = 0;
};

// One measured run; the caller discards a warm-up run.
Cell run_instant_cell(const ls::InstantStream& s, ls::TimePoint d, bool transform_only) {
  Cell c;
  const auto t0 = Clock::now();
  const auto ld = ls::transform(s, ls::DeltaParam(d));
  c.transform_ms = ms_since(t0);
  if (!transform_only) {
    const auto t1 = Clock::now();
    ls::EnumOptions opt;
    opt.keep_results = false;
    opt.on_maximal = [&](const ls::Clique&) { ++c.cliques; };
    ls::enumerate_maximal_cliques(ld, opt);
    c.enum_ms = ms_since(t1);
  }
  c.total_ms = ms_since(t0);
  return c;
}

Cell run_duration_cell(const ls::LinkStream& s) {
  Cell c;
  const auto t0 = Clock::now();
  ls::EnumOptions opt;
  opt.keep_results = false;
  opt.on_maximal = [&](const ls::Clique&) { ++c.cliques; };
  ls::enumerate_maximal_cliques(s, opt);
  c.enum_ms = ms_since(t0);
  c.total_ms = ms_since(t0);
  return c;
}

// `synthetic:instant:N:M:SPAN:SEED` or `synthetic:duration:N:M:SPAN:SEED`.
bool parse_synthetic(const std::string& input, std::string& kind, ls::GeneratorSpec& g) {
  if (!input.starts_with("synthetic:")) return false;
  std::vector<std::string> parts;
  std::stringstream ss(input);
  std::string tok;
  while (std::getline(ss, tok, ':')) parts.push_back(tok);
  if (parts.size() != 6 || (parts[1] != "instant" && parts[1] != "duration")) {
    throw ls::Error("synthetic input must be synthetic:instant|duration:N:M:SPAN:SEED");
  }
  kind = parts[1];
  g.n = std::stoull(parts[2]);
  g.m = std::stoull(parts[3]);
  g.horizon = {0, std::stoll(parts[4])};
  g.seed = std::stoull(parts[5]);
  return true;
}

BenchRecord to_record(std::string dataset, std::string delta, std::size_t n, std::size_t m, const Cell& c) {
  return {std::move(dataset), std::move(delta), n, m, c.cliques,
          static_cast<long long>(c.transform_ms), static_cast<long long>(c.enum_ms),
          static_cast<long long>(c.total_ms)};
}

int cmd_bench(const std::vector<std::string>& inputs, const std::string& grid_text,
              const std::string& csv_path, bool transform_only) {
  const auto grid = parse_grid(grid_text);
  std::vector<BenchRecord> rows;
  for (const auto& input : inputs) {
    std::string kind;
    ls::GeneratorSpec g;
    const bool synthetic = parse_synthetic(input, kind, g);
    std::string text;
    if (!synthetic) {
      text = read_input(input);
      kind = ls::io::detect_kind(text) == ls::io::StreamKind::instant ? "instant" : "duration";
    }
    const std::string name = synthetic ? input : std::filesystem::path(input).filename().string();

    if (kind == "instant") {
      if (grid.empty()) throw ls::Error("instant input '" + input + "' needs --delta-grid");
      const auto s = synthetic ? ls::generate_instant_stream(g) : load_instant(text);
      for (ls::TimePoint d : grid) {
        run_instant_cell(s, d, transform_only);
        const Cell c = run_instant_cell(s, d, transform_only);
        rows.push_back(to_record(name, std::to_string(d), s.node_count(), s.event_count(), c));
        std::cerr << name << " delta " << d << " cliques " << c.cliques << " total_ms "
                  << rows.back().total_ms << '\n';
      }
    } else {
      const auto s = synthetic ? ls::generate_duration_stream(g) : load_duration(text);
      run_duration_cell(s);
      const Cell c = run_duration_cell(s);
      rows.push_back(to_record(name, "n/a", s.node_count(), s.link_count(), c));
      std::cerr << name << " cliques " << c.cliques << " total_ms " << rows.back().total_ms << '\n';
    }
  }

  Sink sink(csv_path);
  auto& out = sink.stream();
  out << "dataset,delta,n,m,clique_count,transform_ms,enum_ms,total_ms\n";
  for (const auto& r : rows) {
    out << r.dataset << ',' << r.delta << ',' << r.n << ',' << r.m << ',' << r.clique_count << ','
        << r.transform_ms << ',' << r.enum_ms << ',' << r.total_ms << '\n';
  }
  sink.finish();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal cliques in link streams with durations and Δ-cliques in instantaneous link streams"};
  app.require_subcommand(1);

  std::string input, format = "plain", output;
  ls::TimePoint delta = 0;
  const std::map<std::string, std::string> formats{{"plain", "plain"}, {"json", "json"},
                                                   {"json-lines", "json"}};

  auto* cliques = app.add_subcommand("cliques", "Maximal cliques of a duration stream");
  cliques->add_option("input", input, "Duration-stream file ('-' for stdin)")->required();
  cliques->add_option("--format", format, "plain | json-lines")->transform(CLI::CheckedTransformer(formats));
  cliques->add_option("-o,--output", output, "Output file (default stdout)");

  auto* dcl = app.add_subcommand("delta-cliques", "Maximal Δ-cliques of an instant stream");
  dcl->add_option("input", input, "Instant-stream file ('-' for stdin)")->required();
  dcl->add_option("--delta", delta, "Window length Δ")->required();
  dcl->add_option("--format", format, "plain | json-lines")->transform(CLI::CheckedTransformer(formats));
  dcl->add_option("-o,--output", output, "Output file (default stdout)");

  auto* tr = app.add_subcommand("transform", "Write L_Δ as a duration-stream file");
  tr->add_option("input", input, "Instant-stream file ('-' for stdin)")->required();
  tr->add_option("--delta", delta, "Window length Δ")->required();
  tr->add_option("-o,--output", output, "Output file (default stdout)");

  CheckConfig cfg;
  auto* check = app.add_subcommand("check", "Randomised cross-check against the brute-force oracle");
  check->add_option("--kind", cfg.kind, "duration | delta")->check(CLI::IsMember({"duration", "delta"}));
  check->add_option("--trials", cfg.trials, "Number of random streams")->capture_default_str();
  check->add_option("--max-nodes", cfg.max_nodes, "Max nodes per stream")->capture_default_str();
  check->add_option("--max-links", cfg.max_links, "Max links/events per stream")->capture_default_str();
  check->add_option("--seed", cfg.seed, "Base seed")->capture_default_str();
  check->add_option("--max-horizon", cfg.max_horizon, "Max horizon span")->capture_default_str();
  check->add_option("--delta-grid", cfg.delta_grid, "Comma-separated Δ values (delta kind)")
      ->capture_default_str();

  std::vector<std::string> bench_inputs;
  std::string grid, csv;
  bool transform_only = false;
  auto* bench = app.add_subcommand("bench", "Time transform and enumeration, one CSV row per input × Δ");
  bench->add_option("inputs", bench_inputs, "Stream files or synthetic:instant|duration:N:M:SPAN:SEED")
      ->required();
  bench->add_option("--delta-grid", grid, "Comma-separated Δ values (required for instant inputs)");
  bench->add_option("--csv", csv, "CSV output file (default stdout)");
  bench->add_flag("--transform-only", transform_only, "Skip enumeration for instant inputs");

  auto* stats = app.add_subcommand("stats", "Print stream statistics");
  stats->add_option("input", input, "Stream file ('-' for stdin)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*cliques) return cmd_cliques(input, format, output);
    if (*dcl) return cmd_delta_cliques(input, delta, format, output);
    if (*tr) return cmd_transform(input, delta, output);
    if (*check) return cmd_check(cfg);
    if (*bench) return cmd_bench(bench_inputs, grid, csv, transform_only);
    if (*stats) return cmd_stats(input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
