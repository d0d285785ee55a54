#ifndef FTSPAN_FT_BLOCKS_HPP_
#define FTSPAN_FT_BLOCKS_HPP_

#include <vector>

#include "ftspan/spanner.hpp"

namespace ftspan {

// f+1 greedy passes, each restricted to the edges no pass has kept yet. A
// rejected edge therefore has f+1 pairwise edge-disjoint detours of length
// <= 2k-1, at most f of which any fault set can touch.
Spanner eft_multiplicative(GraphPtr g, int k, int f);

// The individual passes (ascending edge ids per pass); union of the rounds
// equals the spanner above.
std::vector<std::vector<int>> eft_multiplicative_rounds(const Graph& g, int k,
                                                        int f);

// Exact sourcewise distances under one fault: for every source its
// canonical BFS tree, and for every candidate fault the canonical
// replacement parent edge of each vertex whose distance or parent changed.
// Edge faults only need the source's own tree edges probed — any other
// failure leaves the tree, and with it every distance from s, intact.
Spanner sourcewise_ft_preserver(GraphPtr g, const std::vector<int>& sources,
                                FaultKind kind);

// Upgrades a fault-free (alpha,beta) spanner `a` so the bound survives one
// fault for pairs rooted at `sources`: seed each source's canonical BFS
// tree, then repeatedly add canonical replacement paths for every violated
// (source, fault, target) triple until a full sweep is clean.
Spanner sourcewise_ft_augment(const Spanner& a, const std::vector<int>& sources,
                              FaultKind kind);

enum class SourcewiseKind { Preserver, Augmented2Additive };

std::string to_string(SourcewiseKind k);

struct GammaSample {
  int n = 0;
  int num_sources = 0;
  int edges = 0;
};

// Hands out single-fault sourcewise subgraphs and keeps empirical size
// samples of what each invocation produced.
class SourcewiseFactory {
 public:
  SourcewiseFactory(SourcewiseKind kind, FaultKind fault_kind)
      : kind_(kind), fault_kind_(fault_kind) {}

  SourcewiseKind kind() const { return kind_; }
  FaultKind fault_kind() const { return fault_kind_; }
  int fault_budget() const { return 1; }
  int beta() const { return kind_ == SourcewiseKind::Preserver ? 0 : 2; }

  Spanner build(GraphPtr g, const std::vector<int>& sources) const;

  const std::vector<GammaSample>& samples() const { return samples_; }

 private:
  SourcewiseKind kind_;
  FaultKind fault_kind_;
  mutable std::vector<GammaSample> samples_;
};

}  // namespace ftspan

#endif  // FTSPAN_FT_BLOCKS_HPP_
