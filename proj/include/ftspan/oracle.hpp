#ifndef FTSPAN_ORACLE_HPP_
#define FTSPAN_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ftspan/spanner.hpp"

namespace ftspan {

// Fault-enumeration stretch verification.
//
// Enumeration contract (any reimplementation must match it exactly so that
// reports compare bit-for-bit):
//   * Fault sets of the claim's kind are enumerated by size 0..faults, and
//     within one size in lexicographic order of the sorted item tuple.
//     Sampled mode verifies the empty set followed by `sample_count` sets of
//     size exactly `faults`, drawn with Rng(sample_seed).
//   * For all-pairs verification, pairs are scanned s = 0..n-1, t = s+1..n-1;
//     for sourcewise verification s runs over the source list (ascending)
//     and t over all other vertices. Vertices in a vertex fault set are
//     skipped entirely.
//   * A pair with d_{G-F}(s,t) unreachable is counted as skipped. Otherwise
//     it is counted as checked and contributes the residual
//     d_{H-F}(s,t) - alpha * d_{G-F}(s,t); an unreachable d_{H-F} marks the
//     report disconnected.
//   * max_additive is the maximum residual; the witness is the first
//     (fault set, s, t) in enumeration order achieving it. Disconnection
//     dominates every finite residual. Zero checked pairs yield a vacuous
//     pass with max_additive 0.

struct VerifyOptions {
  enum class Mode { Exhaustive, Sampled };
  Mode mode = Mode::Exhaustive;
  int sample_count = 200;
  uint64_t sample_seed = 1;
  int threads = 0;  // 0 = pick from hardware
  // Refuse exhaustive runs whose fault_sets * n * m exceeds this.
  uint64_t budget = 5'000'000'000ULL;
};

struct StretchWitness {
  int s = -1;
  int t = -1;
  std::vector<int> faults;
};

struct StretchReport {
  Claim claim;
  std::string mode = "exhaustive";
  int sample_count = 0;      // sampled mode only
  uint64_t sample_seed = 0;  // sampled mode only
  int64_t max_additive = 0;
  bool disconnected = false;  // some surviving pair lost in H-F
  std::optional<StretchWitness> witness;
  uint64_t fault_sets = 0;
  uint64_t pairs_checked = 0;
  uint64_t pairs_skipped = 0;
  bool pass = false;

  std::string to_json() const;
};

// Checks H's own claim against its host. Throws std::runtime_error when an
// exhaustive run exceeds opts.budget.
StretchReport verify_claim(const Graph& g, const Spanner& h,
                           const VerifyOptions& opts = {});

// Same, but only pairs with s in `sources` are quantified.
StretchReport verify_sourcewise(const Graph& g, const Spanner& h,
                                const std::vector<int>& sources,
                                const VerifyOptions& opts = {});

// Number of fault sets the exhaustive enumeration would visit.
uint64_t count_fault_sets(const Graph& g, FaultKind kind, int faults);

// All fault sets in enumeration order (exhaustive) — exposed for tests and
// for the block-decomposition suite.
std::vector<std::vector<int>> enumerate_fault_sets(const Graph& g,
                                                   FaultKind kind, int faults);

}  // namespace ftspan

#endif  // FTSPAN_ORACLE_HPP_
