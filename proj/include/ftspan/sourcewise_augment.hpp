#ifndef FTSPAN_SOURCEWISE_AUGMENT_HPP_
#define FTSPAN_SOURCEWISE_AUGMENT_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ftspan/ft_blocks.hpp"
#include "ftspan/graph.hpp"
#include "ftspan/spanner.hpp"

namespace ftspan {

enum class Color : uint8_t { White, Black, Red };

// Coloring + per-vertex countdown driving source selection. Red vertices
// are the selected sources; a vertex goes black once its counter (started
// at faults+1) has been spent by red selections next to it.
struct ColorState {
  std::vector<Color> color;
  std::vector<int> counter;

  int white_degree(const Graph& g, int v) const;

  // Structural consistency: red <=> listed in sources, black <=> counter 0,
  // counters within [0, faults+1]. Throws std::logic_error.
  void check(const Graph& g, const std::vector<int>& sources, int faults) const;
};

struct SourcewiseParams {
  int p = 1;  // degree threshold, 1 <= p <= n
  int faults = 1;
  FaultKind fault_kind = FaultKind::Edge;
};

struct SourcewiseSelection {
  std::vector<int> sources;   // ascending (selection order coincides)
  std::vector<int> e1_edges;  // host edge ids in insertion order
  ColorState state;
};

// Called after every source selection with the state and the new source.
using SelectionObserver = std::function<void(const ColorState&, int)>;

// While some unselected vertex has >= p white neighbors, the lowest-id such
// vertex turns red; each of its white neighbors pays one counter unit and
// contributes the connecting edge to e1_edges; a spent counter turns its
// vertex black. Internal accounting is asserted (throws std::logic_error):
// every selection drops the counter sum by >= p, |sources| <=
// (faults+1)*n/p, |e1_edges| <= (faults+1)*n.
SourcewiseSelection select_sources(const Graph& g,
                                   const SourcewiseParams& params,
                                   const SelectionObserver& observer = nullptr);

struct SourcewiseInstrumentation {
  int source_count = 0;
  std::int64_t e1_edges = 0;
  std::int64_t white_incident_edges = 0;
  GammaSample gamma;  // size sample of the sourcewise stage

  std::string to_json() const;
};

// Full construction: e1_edges, every edge with a white endpoint, and the
// factory's sourcewise subgraph for the selected sources. The claim is
// (1, factory.beta() + 2, params.faults, params.fault_kind); black vertices
// end up with >= faults+1 red neighbors inside the result, which is what
// lets their distances survive the faults.
Spanner build_sourcewise_spanner(GraphPtr g, const SourcewiseParams& params,
                                 const SourcewiseFactory& factory,
                                 SourcewiseInstrumentation* instr = nullptr);

// Threshold minimizing the size bound for each factory: preserver ->
// smallest p with p^3 >= n^2; augmented 2-additive -> smallest p with
// p^2 >= n for edge faults, ceil(sqrt(n * ln n)) for vertex faults.
int recommended_p(int n, SourcewiseKind kind, FaultKind fault_kind);

}  // namespace ftspan

#endif  // FTSPAN_SOURCEWISE_AUGMENT_HPP_
