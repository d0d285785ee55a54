#ifndef FTSPAN_UNION_COMPOSE_HPP_
#define FTSPAN_UNION_COMPOSE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ftspan/graph.hpp"
#include "ftspan/spanner.hpp"

namespace ftspan {

// One segment of the canonical surviving s-t path. Proper blocks run from
// x1 to y_perp and carry the directed failed edge that the canonical
// subgraph route from x1 first runs into (their class); the tail block runs
// to t with a fault-free class. Special vertices other than x1/y_perp are
// -1 on the tail block.
struct Block {
  std::vector<int> path;  // consecutive slice of pi, x1 .. y_perp
  int x1 = -1;
  int x2 = -1;      // first vertex after x1 whose class from x1 is nonempty
  int y1 = -1;      // lex-last pair on the remaining path with that class
  int y2 = -1;
  int y_perp = -1;  // successor of y1; start of the next block
  std::optional<std::pair<int, int>> cls;  // directed failed edge, or empty
};

struct BlockDecomposition {
  int s = -1;
  int t = -1;
  std::vector<int> pi;        // canonical shortest s-t path avoiding faults
  std::vector<Block> blocks;  // proper blocks then the tail
  int num_proper = 0;

  std::string to_json() const;  // diagnostic dump
};

// First failed edge, directed as traversed, on the canonical shortest u-v
// path inside subgraph a (faults NOT removed from a); empty when the route
// is fault-free. Throws when u cannot reach v inside a.
std::optional<std::pair<int, int>> path_class(const Spanner& a,
                                              const FaultSet& faults, int u,
                                              int v);

// Splits the canonical surviving s-t path into blocks: from the current
// start x1, x2 is the first vertex with a nonempty class; (y1,y2) is the
// positionally last pair on the remaining path sharing that exact class;
// the block ends at y1's successor, where the next one starts. The tail
// block absorbs the rest once every class from the current start is empty.
// Guarantees by construction: consecutive blocks chain, each directed
// failed edge serves as the class of at most one block (so at most 2|F|
// proper blocks), the tail's class is empty, and no pair at or past a
// block's y_perp repeats that block's class.
BlockDecomposition decompose_blocks(const Spanner& a, const FaultSet& faults,
                                    int s, int t);

// Additive bounds for the union of a fault-free (1,beta) spanner with an
// (alpha,0) f-edge-fault spanner: current bound (2beta+alpha-1 when f = 1,
// 2f(beta+alpha-1)+beta otherwise) paired with the earlier
// 2f(2beta+alpha-1)+beta bound it improves on.
std::pair<int, int> stretch_claim(int alpha, int beta, int f);

// Edge union of the two spanners, claiming the improved bound above.
Spanner union_spanner(const Spanner& a, const Spanner& m);

}  // namespace ftspan

#endif  // FTSPAN_UNION_COMPOSE_HPP_
