#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "nigpart/io.hpp"

namespace nigpart::cli {

namespace {

using Clock = std::chrono::steady_clock;
using json = nlohmann::json;

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto logger = std::make_shared<spdlog::logger>("nigpart", sink);
  logger->set_pattern("nigpart: %l: %v");
  logger->set_level(spdlog::level::warn);
  if (const char* level = std::getenv("NIGPART_LOG")) {
    const std::string l = level;
    if (l == "error") {
      logger->set_level(spdlog::level::err);
    } else if (l == "info") {
      logger->set_level(spdlog::level::info);
    } else if (l == "debug") {
      logger->set_level(spdlog::level::debug);
    } else {
      logger->warn("ignoring NIGPART_LOG={} (expected error, info or debug)", l);
    }
  }
  return logger;
}

struct InputOptions {
  std::string path;
  std::string format;  // empty: inferred from the file extension
  std::string model = "colnet";
  bool unit_weights = false;
};

void add_input_options(CLI::App& cmd, InputOptions& in) {
  cmd.add_option("--input", in.path, "Input file")->required();
  cmd.add_option("--format", in.format, "Input format (default: mm for .mtx/.mm, else hg)")
      ->check(CLI::IsMember({"mm", "hg"}));
  cmd.add_option("--model", in.model, "Hypergraph model of a Matrix Market input")
      ->check(CLI::IsMember({"colnet", "rownet"}))
      ->capture_default_str();
  cmd.add_flag("--unit-weights", in.unit_weights,
               "Unit vertex weights instead of nonzero counts (mm only)");
}

Hypergraph load(const InputOptions& in) {
  std::string format = in.format;
  if (format.empty()) {
    const auto ext = std::filesystem::path(in.path).extension();
    format = (ext == ".mtx" || ext == ".mm") ? "mm" : "hg";
  }
  if (format == "hg") return read_hypergraph_text(std::filesystem::path(in.path));
  SparseMatrixPattern m = read_matrix_market(std::filesystem::path(in.path));
  return in.model == "rownet" ? row_net_model(m, in.unit_weights)
                              : column_net_model(m, in.unit_weights);
}

// Writes through a temporary file so a failed run never leaves a partial
// output behind.
void write_atomically(const std::string& path, const std::string& contents) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw ConfigError("write to " + tmp.string() + " failed");
    }
  }
  std::filesystem::rename(tmp, target);
}

std::vector<PartId> read_partition_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open partition file " + path);
  std::vector<PartId> parts;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    long long p = 0;
    if (!(ls >> p)) throw FormatError("partition file: bad line '" + line + "'");
    parts.push_back(static_cast<PartId>(p));
  }
  return parts;
}

const char* metric_name(Metric m) { return m == Metric::kCutnet ? "cutnet" : "conn"; }
const char* scheme_name(WeightScheme s) { return s == WeightScheme::kUnit ? "unit" : "shared"; }

double finite(double x) { return std::isfinite(x) ? x : 0.0; }

void print_report_text(const CutReport& r, std::ostream& out) {
  out << "cutnet cost:                 " << r.cutnet_cost << '\n'
      << "connectivity-1 cost:         " << r.connectivity_minus1_cost << '\n'
      << "vertex imbalance:            " << r.max_imbalance_vertex << '\n'
      << "internal-net imbalance:      " << r.max_imbalance_internal_nets << '\n'
      << "part weights:               ";
  for (Weight w : r.part_weights) out << ' ' << w;
  out << "\ninternal nets per part:     ";
  for (auto c : r.internal_nets_per_part) out << ' ' << c;
  out << '\n';
}

struct PartitionOptions {
  InputOptions input;
  PartId k = 2;
  std::string metric = "conn";
  std::string scheme = "unit";
  double epsilon = 0.10;
  std::uint64_t seed = 1;
  bool no_postprocess = false;
  double allow_cut_degrade = 0.0;
  std::string out;
  std::string stats = "text";
  std::string stats_out;
  int threads = 1;
  bool no_timings = false;
  std::size_t drop_degree = 0;
  std::uint64_t max_clique_work = std::uint64_t{1} << 31;
  std::int64_t weight_scale = 1024;
};

int cmd_partition(const PartitionOptions& o, std::ostream& out, spdlog::logger& log) {
  const auto start = Clock::now();
  Hypergraph h = load(o.input);
  const double ingest_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (h.duplicate_pins() > 0) log.warn("collapsed {} duplicate pins", h.duplicate_pins());
  log.info("loaded {} vertices, {} nets, {} pins", h.num_vertices(), h.num_nets(), h.num_pins());

  RbConfig cfg;
  cfg.k = o.k;
  cfg.metric = o.metric == "cutnet" ? Metric::kCutnet : Metric::kConnectivity;
  cfg.scheme = o.scheme == "shared" ? WeightScheme::kShared : WeightScheme::kUnit;
  cfg.epsilon = o.epsilon;
  cfg.rng_seed = o.seed;
  cfg.postprocess = !o.no_postprocess;
  cfg.allow_cut_degrade = o.allow_cut_degrade;
  cfg.threads = o.threads;
  cfg.weight_scale = o.weight_scale;
  cfg.nig.drop_degree_above = o.drop_degree;
  cfg.nig.max_clique_work = o.max_clique_work;

  PartitionResult res = partition(h, cfg);
  res.partition.canonicalize();
  res.report = evaluate(h, res.partition);
  const double total_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  for (const auto& node : res.tree.nodes) {
    if (!node.leaf()) {
      log.debug("rb node {} depth {}: {} vertices, separator cost {}, imbalance {:.4f}", node.id,
                node.depth, node.nig_vertices.size(), node.separator_cost, node.imbalance);
    }
  }

  std::ostringstream part_text;
  for (PartId p : res.partition.parts()) part_text << p << '\n';

  auto t = [&](double ms) { return o.no_timings ? 0.0 : finite(ms); };
  json stats;
  stats["config"] = {{"k", cfg.k},
                     {"metric", metric_name(cfg.metric)},
                     {"scheme", scheme_name(cfg.scheme)},
                     {"epsilon", cfg.epsilon},
                     {"seed", cfg.rng_seed},
                     {"postprocess", cfg.postprocess},
                     {"allow_cut_degrade", cfg.allow_cut_degrade}};
  stats["input"] = {{"vertices", h.num_vertices()},
                    {"nets", h.num_nets()},
                    {"pins", h.num_pins()},
                    {"duplicate_pins", h.duplicate_pins()}};
  stats["timings_ms"] = {{"ingest", t(ingest_ms)},
                         {"nig_build", t(res.stats.nig_build_ms)},
                         {"rb", t(res.stats.rb_ms)},
                         {"assign", t(res.stats.assign_ms)},
                         {"postprocess", t(res.stats.postprocess_ms)},
                         {"total", t(total_ms)}};
  stats["nig"] = {{"vertices", res.stats.nig_vertices},
                  {"edges", res.stats.nig_edges},
                  {"dropped_vertices", res.stats.dropped_vertices}};
  json nodes = json::array();
  for (const auto& node : res.tree.nodes) {
    if (node.leaf()) continue;
    nodes.push_back({{"id", node.id},
                     {"depth", node.depth},
                     {"parts", node.num_parts},
                     {"vertices", node.nig_vertices.size()},
                     {"edges", node.num_edges},
                     {"separator_cost", node.separator_cost},
                     {"weight_a", node.weight_a},
                     {"weight_b", node.weight_b},
                     {"weight_s", node.weight_s},
                     {"imbalance", finite(node.imbalance)},
                     {"balanced", node.balanced}});
  }
  stats["rb"] = {{"separator_cost_total", res.tree.total_separator_cost()},
                 {"free_vertices", res.stats.free_vertices},
                 {"postprocess_moves", res.stats.postprocess_moves},
                 {"nodes", std::move(nodes)}};
  stats["report"] = report_to_json(res.report);

  std::string stats_text;
  if (o.stats == "json") {
    stats_text = stats.dump(2) + "\n";
  } else {
    std::ostringstream s;
    s << "parts: " << cfg.k << "  metric: " << metric_name(cfg.metric)
      << "  scheme: " << scheme_name(cfg.scheme) << "  epsilon: " << cfg.epsilon
      << "  seed: " << cfg.rng_seed << '\n';
    s << "hypergraph: " << h.num_vertices() << " vertices, " << h.num_nets() << " nets, "
      << h.num_pins() << " pins\n";
    s << "nig: " << res.stats.nig_vertices << " vertices, " << res.stats.nig_edges << " edges\n";
    s << "separator cost over rb tree:  " << res.tree.total_separator_cost() << '\n';
    print_report_text(res.report, s);
    s << std::fixed << std::setprecision(2) << "timings (ms): ingest " << t(ingest_ms)
      << ", nig " << t(res.stats.nig_build_ms) << ", rb " << t(res.stats.rb_ms) << ", assign "
      << t(res.stats.assign_ms) << ", postprocess " << t(res.stats.postprocess_ms)
      << ", total " << t(total_ms) << '\n';
    stats_text = s.str();
  }

  if (!o.out.empty()) {
    write_atomically(o.out, part_text.str());
  } else if (o.stats_out.empty()) {
    log.info("no --out given; partition not written");
  }
  if (!o.stats_out.empty()) {
    write_atomically(o.stats_out, stats_text);
  } else {
    out << stats_text;
  }
  return kOk;
}

struct EvaluateOptions {
  InputOptions input;
  std::string partition;
  PartId k = 2;
  std::string stats = "text";
};

int cmd_evaluate(const EvaluateOptions& o, std::ostream& out) {
  Hypergraph h = load(o.input);
  auto parts = read_partition_file(o.partition);
  if (parts.size() != static_cast<std::size_t>(h.num_vertices())) {
    throw FormatError("partition file has " + std::to_string(parts.size()) +
                      " entries, hypergraph has " + std::to_string(h.num_vertices()) +
                      " vertices");
  }
  PartitionVector pv = PartitionVector::from_parts(h, o.k, std::move(parts));
  CutReport r = evaluate(h, pv);
  if (o.stats == "json") {
    out << report_to_json(r).dump(2) << '\n';
  } else {
    print_report_text(r, out);
  }
  return kOk;
}

}  // namespace

json report_to_json(const CutReport& r) {
  return {{"cutnet", r.cutnet_cost},
          {"connectivity_minus1", r.connectivity_minus1_cost},
          {"max_imbalance_vertex", finite(r.max_imbalance_vertex)},
          {"max_imbalance_internal_nets", finite(r.max_imbalance_internal_nets)},
          {"part_weights", r.part_weights},
          {"internal_nets_per_part", r.internal_nets_per_part}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto log = make_logger(err);

  CLI::App app{"Hypergraph partitioning through vertex separators on the net intersection graph"};
  app.name("nigpart");
  app.require_subcommand(1);

  PartitionOptions po;
  auto* part = app.add_subcommand("partition", "Partition a hypergraph or sparse matrix");
  add_input_options(*part, po.input);
  part->add_option("-k", po.k, "Number of parts")->check(CLI::PositiveNumber)->capture_default_str();
  part->add_option("--metric", po.metric, "Cutsize metric")
      ->check(CLI::IsMember({"cutnet", "conn"}))
      ->capture_default_str();
  part->add_option("--scheme", po.scheme, "NIG vertex weighting")
      ->check(CLI::IsMember({"unit", "shared"}))
      ->capture_default_str();
  part->add_option("--epsilon", po.epsilon, "Allowed imbalance per bisection")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  part->add_option("--seed", po.seed, "Random seed")->capture_default_str();
  part->add_flag("--no-postprocess", po.no_postprocess, "Skip the balance pass");
  part->add_option("--allow-cut-degrade", po.allow_cut_degrade,
                   "Relative cutsize increase the balance pass may spend")
      ->check(CLI::NonNegativeNumber);
  part->add_option("--out", po.out, "Partition output file");
  part->add_option("--stats", po.stats, "Statistics format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  part->add_option("--stats-out", po.stats_out, "Write statistics here instead of stdout");
  part->add_option("--threads", po.threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  part->add_flag("--no-timings", po.no_timings, "Report zero for all timings");
  part->add_option("--drop-degree", po.drop_degree,
                   "Keep vertices with more nets than this out of the NIG (0 = off)");
  part->add_option("--max-clique-work", po.max_clique_work, "NIG construction cap");
  part->add_option("--weight-scale", po.weight_scale, "Fixed-point scale of the shared scheme")
      ->check(CLI::PositiveNumber);

  EvaluateOptions eo;
  auto* eval = app.add_subcommand("evaluate", "Report cutsizes of an existing partition");
  add_input_options(*eval, eo.input);
  eval->add_option("--partition", eo.partition, "Partition file")->required();
  eval->add_option("-k", eo.k, "Number of parts")->check(CLI::PositiveNumber)->required();
  eval->add_option("--stats", eo.stats, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string suite;
  std::size_t count = 100;
  int max_size = 10;
  std::uint64_t vseed = 1;
  auto* verify = app.add_subcommand("verify", "Run randomized oracle checks");
  verify->add_option("--suite", suite, "nig, gpvs or hp")
      ->check(CLI::IsMember({"nig", "gpvs", "hp"}))
      ->required();
  verify->add_option("--count", count, "Instances")->capture_default_str();
  verify->add_option("--max-size", max_size, "Largest instance size")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_option("--seed", vseed, "Random seed")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (part->parsed()) return cmd_partition(po, out, *log);
    if (eval->parsed()) return cmd_evaluate(eo, out);
    if (verify->parsed()) {
      VerifyOutcome r = run_verify_suite(suite, count, max_size, vseed);
      for (const auto& f : r.failures) err << "FAIL " << f << '\n';
      out << suite << ": " << r.passed << "/" << r.total << " passed\n";
      return r.passed == r.total ? kOk : kVerifyFailed;
    }
  } catch (const FormatError& e) {
    log->error("{}", e.what());
    return kFormatError;
  } catch (const InvalidPin& e) {
    log->error("{}", e.what());
    return kFormatError;
  } catch (const InvalidWeight& e) {
    log->error("{}", e.what());
    return kFormatError;
  } catch (const IncompletePartition& e) {
    log->error("{}", e.what());
    return kFormatError;
  } catch (const ConfigError& e) {
    log->error("{}", e.what());
    return kConfigError;
  } catch (const CliqueBlowup& e) {
    log->error("{} (see --drop-degree / --max-clique-work)", e.what());
    return kConfigError;
  } catch (const std::exception& e) {
    log->error("{}", e.what());
    return kInternalError;
  }
  return kConfigError;
}

}  // namespace nigpart::cli
