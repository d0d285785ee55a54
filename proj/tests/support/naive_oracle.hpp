#ifndef FTSPAN_TESTS_SUPPORT_NAIVE_ORACLE_HPP_
#define FTSPAN_TESTS_SUPPORT_NAIVE_ORACLE_HPP_

// From-scratch reimplementation of the verifier's documented enumeration
// contract: recursive fault-set enumeration, Floyd-Warshall distances per
// fault set, one thread, no state reuse. Its reports must compare
// bit-identically (to_json) with the optimized verifier's.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ftspan/oracle.hpp"
#include "ftspan/rng.hpp"
#include "support/brute.hpp"

namespace ftspan::testsupport {

inline void naive_combinations(int universe, int k, int from,
                               std::vector<int>& cur,
                               std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int x = from; x < universe; ++x) {
    cur.push_back(x);
    naive_combinations(universe, k, x + 1, cur, out);
    cur.pop_back();
  }
}

inline StretchReport naive_verify(const Graph& g, const Spanner& h,
                                  const std::vector<int>* sources,
                                  const VerifyOptions& opts) {
  if (g.hash() != h.host().hash()) {
    throw std::invalid_argument("naive verify: host mismatch");
  }
  const Claim& claim = h.claim();
  const int n = g.num_vertices();
  const int m = g.num_edges();
  const int universe = claim.kind == FaultKind::Edge      ? m
                       : claim.kind == FaultKind::Vertex  ? n
                                                          : 0;

  std::vector<std::vector<int>> sets;
  StretchReport rep;
  rep.claim = claim;
  if (opts.mode == VerifyOptions::Mode::Exhaustive || claim.faults == 0) {
    const uint64_t n_sets = count_fault_sets(g, claim.kind, claim.faults);
    const uint64_t work =
        n_sets * static_cast<uint64_t>(n) * static_cast<uint64_t>(std::max(m, 1));
    if (opts.mode == VerifyOptions::Mode::Exhaustive && work > opts.budget) {
      throw std::runtime_error("naive verify: budget exceeded");
    }
    std::vector<int> cur;
    for (int k = 0; k <= claim.faults; ++k) {
      naive_combinations(universe, k, 0, cur, sets);
    }
    rep.mode = "exhaustive";
  } else {
    sets.emplace_back();
    Rng rng(opts.sample_seed);
    for (int i = 0; i < opts.sample_count; ++i) {
      sets.push_back(rng.distinct(universe, claim.faults));
    }
    rep.mode = "sampled";
    rep.sample_count = opts.sample_count;
    rep.sample_seed = opts.sample_seed;
  }
  rep.fault_sets = sets.size();

  bool any = false;
  bool inf = false;
  long long best_val = 0;
  size_t best_set = 0;
  int best_s = -1, best_t = -1;
  const long long alpha = claim.alpha;

  for (size_t idx = 0; idx < sets.size(); ++idx) {
    std::vector<uint8_t> g_mask(m, 1);
    std::vector<uint8_t> h_mask = h.mask();
    std::vector<uint8_t> alive(n, 1);
    if (claim.kind == FaultKind::Edge) {
      for (int e : sets[idx]) g_mask[e] = 0, h_mask[e] = 0;
    } else if (claim.kind == FaultKind::Vertex) {
      for (int v : sets[idx]) alive[v] = 0;
    }
    const auto dg = fw_distances(g, g_mask.data(), alive.data());
    const auto dh = fw_distances(g, h_mask.data(), alive.data());

    auto consider = [&](int s, int t) {
      if (dg[s][t] >= kFwInf) {
        ++rep.pairs_skipped;
        return;
      }
      ++rep.pairs_checked;
      const bool pair_inf = dh[s][t] >= kFwInf;
      const long long val = pair_inf ? 0 : dh[s][t] - alpha * dg[s][t];
      // Strictly-better updates in enumeration order keep the first witness.
      const bool better = !any || (pair_inf && !inf) ||
                          (pair_inf == inf && !pair_inf && val > best_val);
      if (better) {
        any = true;
        inf = pair_inf;
        best_val = val;
        best_set = idx;
        best_s = s;
        best_t = t;
      }
    };

    if (sources) {
      for (int s : *sources) {
        if (!alive[s]) continue;
        for (int t = 0; t < n; ++t) {
          if (t != s && alive[t]) consider(s, t);
        }
      }
    } else {
      for (int s = 0; s < n; ++s) {
        if (!alive[s]) continue;
        for (int t = s + 1; t < n; ++t) {
          if (alive[t]) consider(s, t);
        }
      }
    }
  }

  if (!any) {
    rep.max_additive = 0;
    rep.pass = true;
    return rep;
  }
  rep.disconnected = inf;
  rep.max_additive = inf ? 0 : best_val;
  rep.witness = StretchWitness{best_s, best_t, sets[best_set]};
  rep.pass = !rep.disconnected && rep.max_additive <= claim.beta;
  return rep;
}

inline StretchReport naive_verify_claim(const Graph& g, const Spanner& h,
                                        const VerifyOptions& opts = {}) {
  return naive_verify(g, h, nullptr, opts);
}

inline StretchReport naive_verify_sourcewise(const Graph& g, const Spanner& h,
                                             const std::vector<int>& sources,
                                             const VerifyOptions& opts = {}) {
  std::vector<int> src = sources;
  std::sort(src.begin(), src.end());
  src.erase(std::unique(src.begin(), src.end()), src.end());
  return naive_verify(g, h, &src, opts);
}

}  // namespace ftspan::testsupport

#endif  // FTSPAN_TESTS_SUPPORT_NAIVE_ORACLE_HPP_
