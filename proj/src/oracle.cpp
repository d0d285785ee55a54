#include "ftspan/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "ftspan/rng.hpp"
#include "json.hpp"

namespace ftspan {

namespace {

int fault_universe(const Graph& g, FaultKind kind) {
  switch (kind) {
    case FaultKind::Edge: return g.num_edges();
    case FaultKind::Vertex: return g.num_vertices();
    case FaultKind::None: return 0;
  }
  return 0;
}

void append_combinations(int universe, int k,
                         std::vector<std::vector<int>>& out) {
  if (k == 0) {
    out.emplace_back();
    return;
  }
  if (k > universe) return;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == universe - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

// Scan state tracking the maximum residual and its first witness in
// enumeration order. Disconnection beats any finite residual.
struct Best {
  bool any = false;
  bool inf = false;
  int64_t val = 0;
  size_t set_idx = 0;
  int s = -1, t = -1;

  bool better_than(const Best& o) const {
    if (any != o.any) return any;
    if (inf != o.inf) return inf;
    if (val != o.val) return val > o.val;
    // Equal value: earlier enumeration position wins.
    if (set_idx != o.set_idx) return set_idx < o.set_idx;
    if (s != o.s) return s < o.s;
    return t < o.t;
  }

  void update(bool is_inf, int64_t v, size_t idx, int ss, int tt) {
    Best cand{true, is_inf, v, idx, ss, tt};
    if (cand.better_than(*this)) *this = cand;
  }
};

struct WorkerResult {
  Best best;
  uint64_t checked = 0;
  uint64_t skipped = 0;
};

// nullptr sources = all-pairs mode.
WorkerResult scan_range(const Graph& g, const Spanner& h,
                        const std::vector<int>* sources,
                        const std::vector<std::vector<int>>& sets,
                        size_t lo, size_t hi) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  const int64_t alpha = h.claim().alpha;
  const FaultKind kind = h.claim().kind;

  std::vector<uint8_t> g_edge_mask(m, 1);
  std::vector<uint8_t> h_edge_mask = h.mask();
  std::vector<uint8_t> alive(n, 1);
  std::vector<int> dg(n), dh(n);
  BfsBuffers buf;
  WorkerResult res;

  for (size_t idx = lo; idx < hi; ++idx) {
    const auto& fs = sets[idx];
    if (kind == FaultKind::Edge) {
      for (int e : fs) g_edge_mask[e] = 0, h_edge_mask[e] = 0;
    } else if (kind == FaultKind::Vertex) {
      for (int v : fs) alive[v] = 0;
    }

    auto scan_source = [&](int s) {
      bfs_masked(g, s, dg.data(), g_edge_mask.data(), alive.data(), buf);
      bfs_masked(g, s, dh.data(), h_edge_mask.data(), alive.data(), buf);
      auto consider = [&](int t) {
        if (!reachable(dg[t])) {
          ++res.skipped;
          return;
        }
        ++res.checked;
        if (!reachable(dh[t])) {
          res.best.update(true, 0, idx, s, t);
        } else {
          res.best.update(false, dh[t] - alpha * dg[t], idx, s, t);
        }
      };
      if (sources) {
        for (int t = 0; t < n; ++t)
          if (t != s && alive[t]) consider(t);
      } else {
        for (int t = s + 1; t < n; ++t)
          if (alive[t]) consider(t);
      }
    };

    if (sources) {
      for (int s : *sources)
        if (alive[s]) scan_source(s);
    } else {
      for (int s = 0; s < n; ++s)
        if (alive[s]) scan_source(s);
    }

    if (kind == FaultKind::Edge) {
      for (int e : fs) g_edge_mask[e] = 1, h_edge_mask[e] = h.contains(e);
    } else if (kind == FaultKind::Vertex) {
      for (int v : fs) alive[v] = 1;
    }
  }
  return res;
}

StretchReport run_verification(const Graph& g, const Spanner& h,
                               const std::vector<int>* sources,
                               const VerifyOptions& opts) {
  if (g.hash() != h.host().hash())
    throw std::invalid_argument("verify: spanner host does not match graph");
  if (sources)
    for (int s : *sources)
      if (s < 0 || s >= g.num_vertices())
        throw std::invalid_argument("verify: source out of range");

  const Claim& claim = h.claim();
  const int universe = fault_universe(g, claim.kind);

  std::vector<std::vector<int>> sets;
  StretchReport rep;
  rep.claim = claim;
  if (opts.mode == VerifyOptions::Mode::Exhaustive || claim.faults == 0) {
    const uint64_t n_sets = count_fault_sets(g, claim.kind, claim.faults);
    const uint64_t work = n_sets * static_cast<uint64_t>(g.num_vertices()) *
                          std::max(g.num_edges(), 1);
    if (opts.mode == VerifyOptions::Mode::Exhaustive && work > opts.budget)
      throw std::runtime_error(
          "verify: exhaustive budget exceeded (" + std::to_string(work) +
          " > " + std::to_string(opts.budget) + "); use sampled mode");
    sets = enumerate_fault_sets(g, claim.kind, claim.faults);
    rep.mode = "exhaustive";
  } else {
    sets.emplace_back();
    Rng rng(opts.sample_seed);
    for (int i = 0; i < opts.sample_count; ++i)
      sets.push_back(rng.distinct(universe, claim.faults));
    rep.mode = "sampled";
    rep.sample_count = opts.sample_count;
    rep.sample_seed = opts.sample_seed;
  }
  rep.fault_sets = sets.size();

  int threads = opts.threads;
  if (threads <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    threads = static_cast<int>(std::clamp(hw, 1u, 8u));
  }
  threads = std::min<int>(threads, std::max<size_t>(sets.size(), 1));

  std::vector<WorkerResult> results(threads);
  if (threads == 1) {
    results[0] = scan_range(g, h, sources, sets, 0, sets.size());
  } else {
    std::vector<std::thread> pool;
    const size_t chunk = (sets.size() + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
      const size_t lo = std::min(sets.size(), w * chunk);
      const size_t hi = std::min(sets.size(), lo + chunk);
      pool.emplace_back([&, w, lo, hi] {
        results[w] = scan_range(g, h, sources, sets, lo, hi);
      });
    }
    for (auto& th : pool) th.join();
  }

  Best best;
  for (const auto& r : results) {
    // Ranges ascend, so on ties the earlier worker's witness survives.
    if (r.best.better_than(best)) best = r.best;
    rep.pairs_checked += r.checked;
    rep.pairs_skipped += r.skipped;
  }

  if (!best.any) {
    rep.max_additive = 0;
    rep.pass = true;
    return rep;
  }
  rep.disconnected = best.inf;
  rep.max_additive = best.inf ? 0 : best.val;
  rep.witness = StretchWitness{best.s, best.t, sets[best.set_idx]};
  rep.pass = !rep.disconnected && rep.max_additive <= claim.beta;
  return rep;
}

}  // namespace

uint64_t count_fault_sets(const Graph& g, FaultKind kind, int faults) {
  const int universe = fault_universe(g, kind);
  uint64_t total = 0;
  for (int k = 0; k <= faults; ++k) {
    // C(universe, k) with small k; saturate rather than overflow.
    long double c = 1;
    for (int i = 0; i < k; ++i) c = c * (universe - i) / (i + 1);
    if (c > 1e18L) return UINT64_MAX;
    total += static_cast<uint64_t>(c + 0.5L);
  }
  return total;
}

std::vector<std::vector<int>> enumerate_fault_sets(const Graph& g,
                                                   FaultKind kind,
                                                   int faults) {
  const int universe = fault_universe(g, kind);
  std::vector<std::vector<int>> sets;
  for (int k = 0; k <= faults; ++k) append_combinations(universe, k, sets);
  return sets;
}

StretchReport verify_claim(const Graph& g, const Spanner& h,
                           const VerifyOptions& opts) {
  return run_verification(g, h, nullptr, opts);
}

StretchReport verify_sourcewise(const Graph& g, const Spanner& h,
                                const std::vector<int>& sources,
                                const VerifyOptions& opts) {
  std::vector<int> src = sources;
  std::sort(src.begin(), src.end());
  src.erase(std::unique(src.begin(), src.end()), src.end());
  return run_verification(g, h, &src, opts);
}

std::string StretchReport::to_json() const {
  nlohmann::ordered_json j;
  j["claim"] = {{"alpha", claim.alpha},
                {"beta", claim.beta},
                {"faults", claim.faults},
                {"kind", to_string(claim.kind)}};
  if (mode == "sampled") {
    j["mode"] = {{"name", mode}, {"count", sample_count}, {"seed", sample_seed}};
  } else {
    j["mode"] = {{"name", mode}};
  }
  if (disconnected)
    j["max_additive"] = nullptr;
  else
    j["max_additive"] = max_additive;
  j["disconnected"] = disconnected;
  if (witness) {
    j["witness"] = {{"s", witness->s},
                    {"t", witness->t},
                    {"faults", witness->faults}};
  } else {
    j["witness"] = nullptr;
  }
  j["counts"] = {{"fault_sets", fault_sets},
                 {"pairs_checked", pairs_checked},
                 {"pairs_skipped", pairs_skipped}};
  j["pass"] = pass;
  return j.dump(2) + "\n";
}

}  // namespace ftspan
