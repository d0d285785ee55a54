#include "ftspan/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ftspan/base_spanners.hpp"
#include "ftspan/cluster_augment.hpp"
#include "ftspan/ft_blocks.hpp"
#include "ftspan/oracle.hpp"
#include "ftspan/sourcewise_augment.hpp"
#include "ftspan/union_compose.hpp"

namespace ftspan {

namespace {

std::string resolved_base(const ExperimentSpec& spec) {
  if (!spec.base.empty()) {
    if (spec.base != "acim2" && spec.base != "bkmp6") {
      throw std::invalid_argument("experiment: base must be acim2 or bkmp6");
    }
    return spec.base;
  }
  return spec.pipeline == "alg2-bkmp6" ? "bkmp6" : "acim2";
}

int resolved_k(const ExperimentSpec& spec) {
  if (spec.k > 0) return spec.k;
  return spec.pipeline == "alg2-bkmp6" ? 3 : 2;
}

int resolved_p(const ExperimentSpec& spec, int n) {
  if (spec.p > 0) return spec.p;
  const SourcewiseKind kind = spec.pipeline == "alg1-preserver"
                                  ? SourcewiseKind::Preserver
                                  : SourcewiseKind::Augmented2Additive;
  return recommended_p(n, kind, spec.fault_kind);
}

std::string pipeline_params(const ExperimentSpec& spec, int n) {
  char buf[160];
  if (spec.pipeline == "alg1-preserver" || spec.pipeline == "alg1-2additive") {
    std::snprintf(buf, sizeof(buf), "p=%d;f=%d;kind=%s;seed=%llu",
                  resolved_p(spec, n), spec.faults,
                  to_string(spec.fault_kind).c_str(),
                  static_cast<unsigned long long>(spec.generator.seed));
  } else if (spec.pipeline == "alg2-bkmp6") {
    std::snprintf(buf, sizeof(buf), "base=%s;k=%d;seed=%llu",
                  resolved_base(spec).c_str(), resolved_k(spec),
                  static_cast<unsigned long long>(spec.generator.seed));
  } else if (spec.pipeline == "union-f") {
    std::snprintf(buf, sizeof(buf), "base=%s;k=%d;f=%d;seed=%llu",
                  resolved_base(spec).c_str(), resolved_k(spec), spec.faults,
                  static_cast<unsigned long long>(spec.generator.seed));
  } else {
    throw std::invalid_argument("experiment: unknown pipeline '" +
                                spec.pipeline + "'");
  }
  return buf;
}

ClusteredSpanner clustered_base(GraphPtr g, const std::string& base) {
  return base == "bkmp6" ? bkmp_6additive(std::move(g))
                         : acim_2additive(std::move(g));
}

}  // namespace

Spanner build_pipeline(GraphPtr g, const ExperimentSpec& spec) {
  const int n = g->num_vertices();
  if (spec.pipeline == "alg1-preserver" || spec.pipeline == "alg1-2additive") {
    const SourcewiseKind kind = spec.pipeline == "alg1-preserver"
                                    ? SourcewiseKind::Preserver
                                    : SourcewiseKind::Augmented2Additive;
    SourcewiseFactory factory(kind, spec.fault_kind);
    SourcewiseParams params;
    params.p = resolved_p(spec, n);
    params.faults = spec.faults;
    params.fault_kind = spec.fault_kind;
    return build_sourcewise_spanner(std::move(g), params, factory);
  }
  if (spec.pipeline == "alg2-bkmp6") {
    ClusteredSpanner a = clustered_base(g, resolved_base(spec));
    Spanner m = eft_multiplicative(g, resolved_k(spec), 1);
    return build_cluster_ft_spanner(a.spanner, a.clustering, m);
  }
  if (spec.pipeline == "union-f") {
    ClusteredSpanner a = clustered_base(g, resolved_base(spec));
    Spanner m = eft_multiplicative(g, resolved_k(spec), spec.faults);
    return union_spanner(a.spanner, m);
  }
  throw std::invalid_argument("experiment: unknown pipeline '" +
                              spec.pipeline + "'");
}

ResultRow run_experiment(const ExperimentSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();
  GraphPtr g = std::make_shared<const Graph>(generate(spec.generator));
  Spanner h = build_pipeline(g, spec);

  ResultRow row;
  row.n = g->num_vertices();
  row.m = g->num_edges();
  row.construction = spec.pipeline;
  row.spanner_edges = h.edge_count();
  row.claimed_beta = h.claim().beta;
  std::string mode_suffix;

  if (spec.verify == "none") {
    mode_suffix = ";mode=none";
  } else if (spec.verify == "exhaustive" || spec.verify == "sampled") {
    VerifyOptions opts;
    opts.mode = spec.verify == "sampled" ? VerifyOptions::Mode::Sampled
                                         : VerifyOptions::Mode::Exhaustive;
    opts.sample_count = spec.sample_count;
    opts.sample_seed = spec.sample_seed;
    opts.threads = spec.threads;
    opts.budget = spec.budget;
    StretchReport rep;
    bool done = false;
    if (opts.mode == VerifyOptions::Mode::Exhaustive) {
      try {
        rep = verify_claim(*g, h, opts);
        done = true;
      } catch (const std::runtime_error& e) {
        if (std::string(e.what()).find("budget") == std::string::npos) throw;
        opts.mode = VerifyOptions::Mode::Sampled;
      }
    }
    if (!done) {
      rep = verify_claim(*g, h, opts);
      mode_suffix = ";mode=sampled";
    }
    row.verified = true;
    row.observed = rep.max_additive;
    row.disconnected = rep.disconnected;
    row.pass = rep.pass;
    if (rep.witness) {
      std::ostringstream os;
      os << "(s=" << rep.witness->s << ",t=" << rep.witness->t << ",F=[";
      for (size_t i = 0; i < rep.witness->faults.size(); ++i) {
        if (i) os << ' ';
        os << rep.witness->faults[i];
      }
      os << "])";
      row.witness = os.str();
    }
  } else {
    throw std::invalid_argument(
        "experiment: verify must be exhaustive, sampled or none");
  }

  row.params = pipeline_params(spec, row.n) + mode_suffix;
  row.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return row;
}

std::string rows_to_csv(const std::vector<ResultRow>& rows,
                        bool include_timing) {
  std::string out =
      "n,m,construction,params,spanner_edges,claimed_beta,"
      "observed_max_additive,pass,wall_time\n";
  char buf[64];
  for (const ResultRow& r : rows) {
    out += std::to_string(r.n);
    out += ',';
    out += std::to_string(r.m);
    out += ',';
    out += r.construction;
    out += ',';
    out += r.params;
    out += ',';
    out += std::to_string(r.spanner_edges);
    out += ',';
    out += std::to_string(r.claimed_beta);
    out += ',';
    if (r.verified && !r.disconnected) out += std::to_string(r.observed);
    out += ',';
    out += r.pass ? '1' : '0';
    out += ',';
    std::snprintf(buf, sizeof(buf), "%.3f",
                  include_timing ? r.wall_time : 0.0);
    out += buf;
    out += '\n';
  }
  return out;
}

std::vector<ResultRow> rows_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("csv: empty input");
  }
  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (cells.size() == 8) cells.push_back("");  // trailing empty field
    if (cells.size() != 9) {
      throw std::runtime_error("csv: malformed row: " + line);
    }
    ResultRow r;
    r.n = std::stoi(cells[0]);
    r.m = std::stoi(cells[1]);
    r.construction = cells[2];
    r.params = cells[3];
    r.spanner_edges = std::stoll(cells[4]);
    r.claimed_beta = std::stoi(cells[5]);
    if (!cells[6].empty()) {
      r.observed = std::stoll(cells[6]);
      r.verified = true;
    }
    r.pass = cells[7] == "1";
    if (!cells[8].empty()) r.wall_time = std::stod(cells[8]);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string summarize(const std::vector<ResultRow>& rows) {
  std::ostringstream os;
  for (const ResultRow& r : rows) {
    if (r.pass) continue;
    os << "FAIL " << r.construction << " n=" << r.n << " " << r.params << ": ";
    if (r.disconnected) {
      os << "pair disconnected in the spanner under faults";
    } else if (r.verified) {
      os << "observed " << r.observed << " > claimed " << r.claimed_beta;
    } else {
      os << "not verified";
    }
    if (!r.witness.empty()) os << " witness=" << r.witness;
    os << '\n';
  }

  struct Agg {
    int total = 0;
    int passed = 0;
    long long worst = -1;
    bool any_verified = false;
    bool any_disconnected = false;
    int claimed = 0;
  };
  std::map<std::string, Agg> by_construction;
  for (const ResultRow& r : rows) {
    Agg& a = by_construction[r.construction];
    ++a.total;
    a.passed += r.pass ? 1 : 0;
    a.claimed = std::max(a.claimed, r.claimed_beta);
    if (r.verified && !r.disconnected) {
      a.any_verified = true;
      a.worst = std::max(a.worst, r.observed);
    }
    a.any_disconnected |= r.disconnected;
  }
  for (const auto& [name, a] : by_construction) {
    os << name << ": " << a.passed << "/" << a.total << " pass, worst observed ";
    if (a.any_disconnected) {
      os << "disconnected";
    } else if (a.any_verified) {
      os << a.worst;
    } else {
      os << "-";
    }
    os << " vs claimed " << a.claimed << '\n';
  }
  int passed = 0;
  for (const ResultRow& r : rows) passed += r.pass ? 1 : 0;
  os << "total: " << passed << "/" << rows.size() << " pass\n";
  return os.str();
}

double fit_loglog_exponent(const std::vector<std::pair<double, double>>& pts) {
  if (pts.size() < 2) {
    throw std::invalid_argument("fit_loglog_exponent: need >= 2 points");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    if (x <= 0 || y <= 0) {
      throw std::invalid_argument("fit_loglog_exponent: positive data only");
    }
    const double lx = std::log(x);
    const double ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(pts.size());
  const double denom = n * sxx - sx * sx;
  if (denom == 0) {
    throw std::invalid_argument("fit_loglog_exponent: degenerate x values");
  }
  return (n * sxy - sx * sy) / denom;
}

}  // namespace ftspan
