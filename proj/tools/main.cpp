// nucleus: (r,s)-nucleus decomposition of undirected simple graphs.
//
// Subcommands: decompose (kappa values + summary), forest (laminar forest as
// JSON/DOT), metrics (density/size/overlap CSVs), validate (brute-force
// oracle cross-check on small or generated graphs).

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nucleus/io.hpp"
#include "nucleus/nucleus.hpp"
#include "nucleus/validate.hpp"

namespace fs = std::filesystem;
using namespace nucleus;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitInternal = 4;

struct RunConfig {
  std::string input;
  int r = 3;
  int s = 4;
  Count min_size = 10;
  std::vector<std::string> formats;
  std::string output = ".";
  bool vertices = false;
  std::uint64_t memory_budget = kDefaultMemoryBudget;
  std::uint64_t seed = 0;
  Count min_overlap = 1;
  double bin_width = 0.05;
  std::vector<std::string> random_spec;  // validate: n p trials
};

struct Pipeline {
  Graph g;
  LoadStats stats;
  CliqueIndex idx;
  KappaAssignment ka;
  CostPrediction predictor;
  double seconds = 0;
};

void check_rs(const RunConfig& cfg) {
  if (!(cfg.r >= 1 && cfg.r < cfg.s && cfg.s <= 4))
    throw UnsupportedParameterError("need 1 <= r < s <= 4");
  if (cfg.min_size < 1) throw UnsupportedParameterError("--min-size must be >= 1");
}

Pipeline run_pipeline(const RunConfig& cfg) {
  check_rs(cfg);
  Pipeline p;
  auto t0 = std::chrono::steady_clock::now();
  LoadResult lr = load_graph_file(cfg.input);
  p.g = std::move(lr.graph);
  p.stats = lr.stats;
  p.idx = enumerate_r_cliques(p.g, cfg.r);
  SetKOptions opt;
  opt.memory_budget = cfg.memory_budget;
  p.ka = set_k(p.g, p.idx, cfg.s, opt);
  p.predictor = cost_predictor(p.g, p.idx, cfg.s);
  p.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cerr << "loaded " << cfg.input << ": n=" << p.g.vertex_count() << " m=" << p.g.edge_count()
            << " (dropped " << p.stats.self_loops_dropped << " self-loops, "
            << p.stats.duplicate_edges_dropped << " duplicate edges); ct_" << cfg.r << "="
            << p.idx.size() << " max_kappa=" << p.ka.max_kappa << "\n";
  return p;
}

fs::path ensure_output_dir(const RunConfig& cfg) {
  fs::path dir(cfg.output);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::ios_base::failure("cannot create output directory '" + cfg.output + "'");
  return dir;
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write '" + p.string() + "'");
  return out;
}

nlohmann::ordered_json summary_json(const RunConfig& cfg, const Pipeline& p) {
  nlohmann::ordered_json j;
  j["n"] = p.g.vertex_count();
  j["m"] = p.g.edge_count();
  j["ct_r"] = p.idx.size();
  j["max_kappa"] = p.ka.max_kappa;
  j["predictor"] = p.predictor.value;
  j["seconds"] = p.seconds;
  j["r"] = cfg.r;
  j["s"] = cfg.s;
  j["predictor_saturated"] = p.predictor.saturated;
  j["self_loops_dropped"] = p.stats.self_loops_dropped;
  j["duplicate_edges_dropped"] = p.stats.duplicate_edges_dropped;
  return j;
}

int cmd_decompose(const RunConfig& cfg) {
  for (const auto& f : cfg.formats)
    if (f != "csv" && f != "json")
      throw UnsupportedParameterError("decompose always writes kappa.csv and summary.json");
  Pipeline p = run_pipeline(cfg);
  fs::path dir = ensure_output_dir(cfg);
  {
    auto out = open_out(dir / "kappa.csv");
    write_kappa_csv(out, p.g, p.idx, p.ka);
  }
  {
    auto out = open_out(dir / "summary.json");
    out << summary_json(cfg, p).dump(2) << "\n";
  }
  std::cerr << "decompose: predictor=" << p.predictor.value
            << (p.predictor.saturated ? " (saturated)" : "") << " seconds=" << p.seconds << "\n";
  return kExitOk;
}

int cmd_forest(const RunConfig& cfg) {
  for (const auto& f : cfg.formats)
    if (f != "json" && f != "dot")
      throw UnsupportedParameterError("forest supports --format json|dot");
  Pipeline p = run_pipeline(cfg);
  NucleusForest forest = build_forest(p.g, p.idx, p.ka, cfg.memory_budget);
  ForestView view = filter_by_size(forest, cfg.min_size);
  fs::path dir = ensure_output_dir(cfg);

  std::vector<std::string> formats = cfg.formats.empty() ? std::vector<std::string>{"json"}
                                                         : cfg.formats;
  for (const auto& f : formats) {
    if (f == "json") {
      auto out = open_out(dir / "forest.json");
      out << forest_to_json(view, p.g, cfg.vertices).dump(2) << "\n";
    } else {
      ContractedForest cf = contract_chains(view);
      auto out = open_out(dir / "forest.dot");
      write_forest_dot(out, view, cf);
    }
  }
  Count leaves = 0;
  for (std::uint32_t id : view.nodes)
    if (view.children[view.pos[id]].empty()) ++leaves;
  std::cerr << "forest: " << forest.node_count() << " nuclei total, " << view.size()
            << " of size >= " << cfg.min_size << " (" << view.roots.size() << " roots, " << leaves
            << " leaves); density inversions: " << forest.density_inversions() << "\n";
  return kExitOk;
}

int cmd_metrics(const RunConfig& cfg) {
  for (const auto& f : cfg.formats)
    if (f != "csv") throw UnsupportedParameterError("metrics writes CSV only");
  Pipeline p = run_pipeline(cfg);
  NucleusForest forest = build_forest(p.g, p.idx, p.ka, cfg.memory_budget);
  ForestView view = filter_by_size(forest, cfg.min_size);
  fs::path dir = ensure_output_dir(cfg);
  {
    auto out = open_out(dir / "density_histogram.csv");
    write_histogram_csv(out, density_histogram(view, cfg.bin_width));
  }
  {
    auto out = open_out(dir / "size_density.csv");
    write_scatter_csv(out, size_density_scatter(view));
  }
  {
    auto out = open_out(dir / "overlaps.csv");
    write_overlaps_csv(out, overlap_analysis(view, cfg.min_overlap));
  }
  std::cerr << "metrics: wrote density_histogram.csv, size_density.csv, overlaps.csv\n";
  return kExitOk;
}

int cmd_validate(const RunConfig& cfg) {
  std::vector<std::pair<std::string, Graph>> graphs;
  if (!cfg.random_spec.empty()) {
    if (cfg.random_spec.size() != 3)
      throw UnsupportedParameterError("--random needs N P TRIALS");
    Count n = std::stoull(cfg.random_spec[0]);
    double prob = std::stod(cfg.random_spec[1]);
    Count trials = std::stoull(cfg.random_spec[2]);
    if (n > kOracleMaxVertices)
      throw GuardError("--random n must be <= " + std::to_string(kOracleMaxVertices));
    for (Count t = 0; t < trials; ++t)
      graphs.emplace_back("g" + std::to_string(t) + " ",
                          gnp(n, prob, cfg.seed + t * 1000003));
  } else {
    if (cfg.input.empty()) throw UnsupportedParameterError("validate needs --input or --random");
    LoadResult lr = load_graph_file(cfg.input);
    if (lr.graph.vertex_count() > kOracleMaxVertices)
      throw GuardError("validate accepts at most " + std::to_string(kOracleMaxVertices) +
                       " vertices; use --random for property runs");
    graphs.emplace_back("", std::move(lr.graph));
  }

  bool all = true;
  Count done = 0;
  for (const auto& [label, g] : graphs) {
    ValidationReport rep = validate_graph(g, cfg.seed + 17, 5, label);
    for (const auto& c : rep.checks) {
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
                << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
      all &= c.pass;
    }
    ++done;
  }
  std::cout << (all ? "validate: all checks passed (" : "validate: FAILURES (") << done
            << " graph" << (done == 1 ? "" : "s") << ")\n";
  return all ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(r,s)-nucleus decomposition of undirected simple graphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool input_required) {
    auto* in = sub->add_option("--input", cfg.input, "edge-list file (u w per line, #/% comments)");
    if (input_required) in->required();
    sub->add_option("--r", cfg.r, "clique size r (peeling unit)");
    sub->add_option("--s", cfg.s, "clique size s (degree unit), r < s <= 4");
    sub->add_option("--min-size", cfg.min_size, "hide nuclei with fewer vertices (default 10)");
    sub->add_option("--format", cfg.formats, "output format(s); forest: json|dot")
        ->allow_extra_args(false);
    sub->add_option("--output", cfg.output, "output directory (created if missing)");
    sub->add_flag("--vertices", cfg.vertices, "include per-nucleus vertex lists in forest JSON");
    sub->add_option("--memory-budget", cfg.memory_budget, "materialization budget in bytes");
    sub->add_option("--seed", cfg.seed, "seed for validate's generated graphs and tie-break runs");
  };

  auto* dec = app.add_subcommand("decompose", "peel r-cliques and export kappa values");
  add_common(dec, true);

  auto* fo = app.add_subcommand("forest", "build and export the forest of nuclei");
  add_common(fo, true);

  auto* me = app.add_subcommand("metrics", "density histogram, size/density scatter, overlaps");
  add_common(me, true);
  me->add_option("--min-overlap", cfg.min_overlap, "minimum shared vertices for overlap rows");
  me->add_option("--bin-width", cfg.bin_width, "histogram bin width; must divide 1 (default 0.05)");

  auto* va = app.add_subcommand("validate", "cross-check peeling and forest against the oracle");
  add_common(va, false);
  va->add_option("--random", cfg.random_spec, "N P TRIALS: validate on random G(N,P) graphs")
      ->expected(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (dec->parsed()) return cmd_decompose(cfg);
    if (fo->parsed()) return cmd_forest(cfg);
    if (me->parsed()) return cmd_metrics(cfg);
    if (va->parsed()) return cmd_validate(cfg);
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const UnsupportedParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
