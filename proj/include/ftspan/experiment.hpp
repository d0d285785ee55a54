#ifndef FTSPAN_EXPERIMENT_HPP_
#define FTSPAN_EXPERIMENT_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ftspan/generate.hpp"
#include "ftspan/graph.hpp"
#include "ftspan/spanner.hpp"

namespace ftspan {

// One experiment cell: generate a graph, run a named construction pipeline,
// verify its claim. Fully deterministic given the seeds.
struct ExperimentSpec {
  GeneratorSpec generator;
  std::string pipeline;  // alg1-preserver | alg1-2additive | alg2-bkmp6 | union-f
  std::string base;      // clustered stage override: acim2 | bkmp6 (empty = pipeline default)
  int p = 0;             // sourcewise threshold; 0 = recommended for n
  int k = 0;             // multiplicative stretch parameter; 0 = pipeline default
  int faults = 1;
  FaultKind fault_kind = FaultKind::Edge;
  std::string verify = "exhaustive";  // exhaustive | sampled | none
  int sample_count = 200;
  uint64_t sample_seed = 1;
  int threads = 0;
  uint64_t budget = 5'000'000'000ULL;
};

struct ResultRow {
  int n = 0;
  int m = 0;
  std::string construction;
  std::string params;
  long long spanner_edges = 0;
  int claimed_beta = 0;
  long long observed = 0;  // meaningful iff verified && !disconnected
  bool verified = false;
  bool disconnected = false;
  bool pass = true;
  double wall_time = 0.0;  // seconds, build + verify
  std::string witness;     // summary diagnostics only, not a CSV column
};

// The construction stage alone (no generation, no verification).
Spanner build_pipeline(GraphPtr g, const ExperimentSpec& spec);

// Generate + build + verify one cell. An exhaustive run that overflows the
// verification budget falls back to sampled mode and marks the row's params
// with ";mode=sampled".
ResultRow run_experiment(const ExperimentSpec& spec);

// Fixed column order: n,m,construction,params,spanner_edges,claimed_beta,
// observed_max_additive,pass,wall_time. With include_timing false the
// wall_time column is written as 0.000 so reruns are byte-identical.
std::string rows_to_csv(const std::vector<ResultRow>& rows,
                        bool include_timing);
std::vector<ResultRow> rows_from_csv(const std::string& text);

// Failures first (with witnesses), then per-construction worst observed
// additive stretch vs claim, then a total.
std::string summarize(const std::vector<ResultRow>& rows);

// Least-squares slope of log(y) against log(x).
double fit_loglog_exponent(const std::vector<std::pair<double, double>>& pts);

}  // namespace ftspan

#endif  // FTSPAN_EXPERIMENT_HPP_
