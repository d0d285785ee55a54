#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ftspan/base_spanners.hpp"
#include "ftspan/experiment.hpp"
#include "ftspan/ft_blocks.hpp"
#include "ftspan/generate.hpp"
#include "ftspan/graph.hpp"
#include "ftspan/oracle.hpp"
#include "ftspan/sourcewise_augment.hpp"

namespace {

using namespace ftspan;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    if (!cell.empty()) out.push_back(std::stoi(cell));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct GraphSource {
  std::string graph_file;
  GeneratorSpec gen;

  void add_flags(CLI::App* cmd, bool allow_file) {
    if (allow_file) {
      cmd->add_option("--graph", graph_file, "edge-list file to load");
    }
    cmd->add_option("--generator", gen.kind,
                    "gnp|random_regular|grid|path|cycle|complete|petersen");
    cmd->add_option("--n", gen.n, "vertex count");
    cmd->add_option("--prob", gen.prob, "gnp edge probability");
    cmd->add_option("--degree", gen.degree, "random_regular degree");
    cmd->add_option("--rows", gen.rows, "grid rows");
    cmd->add_option("--cols", gen.cols, "grid cols");
    cmd->add_option("--seed", gen.seed, "generator seed");
    cmd->add_flag("--connected", gen.connected,
                  "gnp: keep only the largest component");
  }

  GraphPtr load() const {
    if (!graph_file.empty()) {
      return std::make_shared<const Graph>(read_edge_list_file(graph_file));
    }
    if (gen.kind.empty()) {
      throw std::runtime_error("need --graph or --generator");
    }
    return std::make_shared<const Graph>(generate(gen));
  }
};

int cmd_gen(const GraphSource& src, const std::string& out) {
  Graph g = generate(src.gen);
  const std::string text = write_edge_list(g, generator_metadata(src.gen));
  if (out.empty()) {
    std::cout << text;
  } else {
    spill(out, text);
    std::cerr << "wrote " << out << " (n=" << g.num_vertices()
              << " m=" << g.num_edges() << ")\n";
  }
  return 0;
}

int cmd_build(const GraphSource& src, ExperimentSpec spec, bool instrument,
              const std::string& out, const std::string& graph_out) {
  GraphPtr g = src.load();
  spec.generator = src.gen;
  Spanner h = [&] {
    if (instrument && (spec.pipeline == "alg1-preserver" ||
                       spec.pipeline == "alg1-2additive")) {
      const SourcewiseKind kind = spec.pipeline == "alg1-preserver"
                                      ? SourcewiseKind::Preserver
                                      : SourcewiseKind::Augmented2Additive;
      SourcewiseFactory factory(kind, spec.fault_kind);
      SourcewiseParams params;
      params.p = spec.p > 0
                     ? spec.p
                     : recommended_p(g->num_vertices(), kind, spec.fault_kind);
      params.faults = spec.faults;
      params.fault_kind = spec.fault_kind;
      SourcewiseInstrumentation instr;
      Spanner built = build_sourcewise_spanner(g, params, factory, &instr);
      std::cout << instr.to_json() << "\n";
      return built;
    }
    return build_pipeline(g, spec);
  }();
  if (!graph_out.empty()) {
    write_edge_list_file(*g, graph_out, generator_metadata(src.gen));
  }
  std::cerr << "n=" << g->num_vertices() << " m=" << g->num_edges()
            << " spanner_edges=" << h.edge_count()
            << " claim=" << h.claim().describe() << "\n";
  if (out.empty()) {
    std::cout << h.to_json();
  } else {
    spill(out, h.to_json());
  }
  return 0;
}

int cmd_verify(const std::string& graph_file, const std::string& spanner_file,
               const std::string& sources_text, int sample,
               uint64_t sample_seed, int threads, uint64_t budget,
               const std::string& out) {
  GraphPtr g = std::make_shared<const Graph>(read_edge_list_file(graph_file));
  Spanner h = Spanner::from_json(slurp(spanner_file), g);
  VerifyOptions opts;
  if (sample > 0) {
    opts.mode = VerifyOptions::Mode::Sampled;
    opts.sample_count = sample;
    opts.sample_seed = sample_seed;
  }
  opts.threads = threads;
  opts.budget = budget;
  StretchReport rep;
  if (sources_text.empty()) {
    rep = verify_claim(*g, h, opts);
  } else {
    rep = verify_sourcewise(*g, h, parse_int_list(sources_text), opts);
  }
  const std::string text = rep.to_json();
  if (out.empty()) {
    std::cout << text << "\n";
  } else {
    spill(out, text);
  }
  std::cerr << (rep.pass ? "PASS" : "FAIL") << " claim "
            << h.claim().describe() << " max_additive="
            << (rep.disconnected ? std::string("disconnected")
                                 : std::to_string(rep.max_additive))
            << "\n";
  return rep.pass ? 0 : 1;
}

int cmd_experiment(const GraphSource& src, ExperimentSpec spec, int count,
                   bool no_timing, const std::string& out) {
  if (count < 1) throw std::runtime_error("--count must be >= 1");
  spec.generator = src.gen;
  std::vector<ResultRow> rows;
  for (int i = 0; i < count; ++i) {
    ExperimentSpec cell = spec;
    cell.generator.seed = spec.generator.seed + static_cast<uint64_t>(i);
    rows.push_back(run_experiment(cell));
  }
  if (!out.empty()) spill(out, rows_to_csv(rows, !no_timing));
  std::cout << summarize(rows);
  for (const ResultRow& r : rows) {
    if (!r.pass) return 1;
  }
  return 0;
}

int cmd_report(const std::string& csv_file, const std::string& filter) {
  std::vector<ResultRow> rows = rows_from_csv(slurp(csv_file));
  if (!filter.empty()) {
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [&](const ResultRow& r) {
                                return r.construction != filter;
                              }),
               rows.end());
  }
  if (rows.empty()) {
    std::cerr << "no rows\n";
    return 2;
  }
  std::cout << summarize(rows);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fault-tolerant additive spanner toolkit"};
  app.require_subcommand(1);

  GraphSource gen_src;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "generate a graph edge list");
  gen_src.add_flags(gen, false);
  gen->add_option("--out", gen_out, "output file (default stdout)");

  GraphSource build_src;
  ExperimentSpec build_spec;
  std::string build_out, build_graph_out, build_fault_kind = "edge";
  bool build_instrument = false;
  CLI::App* build = app.add_subcommand("build", "run a construction pipeline");
  build_src.add_flags(build, true);
  build->add_option("--pipeline", build_spec.pipeline,
                    "alg1-preserver|alg1-2additive|alg2-bkmp6|union-f")
      ->required();
  build->add_option("--p", build_spec.p, "sourcewise degree threshold");
  build->add_option("--k", build_spec.k, "multiplicative stretch parameter");
  build->add_option("--faults", build_spec.faults, "fault budget");
  build->add_option("--fault-kind", build_fault_kind, "edge|vertex");
  build->add_option("--base", build_spec.base, "clustered stage: acim2|bkmp6");
  build->add_flag("--instrument", build_instrument,
                  "print sourcewise instrumentation JSON");
  build->add_option("--out", build_out, "spanner JSON file (default stdout)");
  build->add_option("--graph-out", build_graph_out,
                    "also write the (generated) graph");

  std::string verify_graph, verify_spanner, verify_sources, verify_out;
  int verify_sample = 0;
  uint64_t verify_sample_seed = 1;
  int verify_threads = 0;
  uint64_t verify_budget = 5'000'000'000ULL;
  CLI::App* verify =
      app.add_subcommand("verify", "fault-enumeration stretch check");
  verify->add_option("--graph", verify_graph, "edge-list file")->required();
  verify->add_option("--spanner", verify_spanner, "spanner JSON file")
      ->required();
  verify->add_option("--sources", verify_sources,
                     "comma-separated source vertices (sourcewise check)");
  verify->add_option("--sample", verify_sample,
                     "sampled mode with this many fault sets");
  verify->add_option("--sample-seed", verify_sample_seed, "sampling seed");
  verify->add_option("--threads", verify_threads, "worker threads (0=auto)");
  verify->add_option("--budget", verify_budget,
                     "exhaustive work limit (fault sets * n * m)");
  verify->add_option("--out", verify_out, "report JSON file (default stdout)");

  GraphSource exp_src;
  ExperimentSpec exp_spec;
  std::string exp_out, exp_fault_kind = "edge";
  int exp_count = 1;
  bool exp_no_timing = false;
  CLI::App* experiment =
      app.add_subcommand("experiment", "generate/build/verify a suite");
  exp_src.add_flags(experiment, false);
  experiment
      ->add_option("--pipeline", exp_spec.pipeline,
                   "alg1-preserver|alg1-2additive|alg2-bkmp6|union-f")
      ->required();
  experiment->add_option("--p", exp_spec.p, "sourcewise degree threshold");
  experiment->add_option("--k", exp_spec.k, "multiplicative stretch parameter");
  experiment->add_option("--faults", exp_spec.faults, "fault budget");
  experiment->add_option("--fault-kind", exp_fault_kind, "edge|vertex");
  experiment->add_option("--base", exp_spec.base,
                         "clustered stage: acim2|bkmp6");
  experiment->add_option("--count", exp_count,
                         "instances (seeds seed..seed+count-1)");
  experiment->add_option("--verify", exp_spec.verify,
                         "exhaustive|sampled|none");
  experiment->add_option("--sample", exp_spec.sample_count,
                         "sampled-mode fault sets");
  experiment->add_option("--sample-seed", exp_spec.sample_seed,
                         "sampling seed");
  experiment->add_option("--threads", exp_spec.threads,
                         "verifier threads (0=auto)");
  experiment->add_option("--budget", exp_spec.budget,
                         "exhaustive work limit");
  experiment->add_flag("--no-timing", exp_no_timing,
                       "write wall_time as 0.000 for byte-stable output");
  experiment->add_option("--out", exp_out, "CSV output file");

  std::string report_csv, report_filter;
  CLI::App* report = app.add_subcommand("report", "summarize an experiment CSV");
  report->add_option("--csv", report_csv, "CSV produced by experiment")
      ->required();
  report->add_option("--filter", report_filter,
                     "keep only this construction");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_gen(gen_src, gen_out);
    if (*build) {
      build_spec.fault_kind = fault_kind_from_string(build_fault_kind);
      return cmd_build(build_src, build_spec, build_instrument, build_out,
                       build_graph_out);
    }
    if (*verify) {
      return cmd_verify(verify_graph, verify_spanner, verify_sources,
                        verify_sample, verify_sample_seed, verify_threads,
                        verify_budget, verify_out);
    }
    if (*experiment) {
      exp_spec.fault_kind = fault_kind_from_string(exp_fault_kind);
      return cmd_experiment(exp_src, exp_spec, exp_count, exp_no_timing,
                            exp_out);
    }
    if (*report) return cmd_report(report_csv, report_filter);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
