#ifndef FTSPAN_BASE_SPANNERS_HPP_
#define FTSPAN_BASE_SPANNERS_HPP_

#include <vector>

#include "ftspan/spanner.hpp"

namespace ftspan {

// Kruskal-style greedy (2k-1)-multiplicative spanner: scan edges in id
// order, keep an edge iff the spanner built so far has no path of length
// <= 2k-1 between its endpoints. Output girth exceeds 2k.
Spanner greedy_multiplicative(GraphPtr g, int k);

// One greedy pass restricted to `candidates` (ascending edge ids),
// measuring distances only inside the edges kept by this pass. Building
// block for the fault-tolerant multiplicative construction.
std::vector<int> greedy_spanner_round(const Graph& g, int k,
                                      const std::vector<int>& candidates);

struct ClusteredSpanner {
  Spanner spanner;
  Clustering clustering;
};

// Degree clustering: repeatedly take the lowest-id unclustered vertex with
// at least `delta` unclustered neighbors as a center and cluster it with
// those neighbors.
Clustering degree_clustering(const Graph& g, int delta);

// 2-additive spanner: clustering with delta = ceil(sqrt(n)), star edges,
// every edge incident to an unclustered vertex, and one full BFS tree per
// cluster center.
ClusteredSpanner acim_2additive(GraphPtr g);

// 6-additive spanner: clustering with delta = ceil(n^(1/3)), star +
// unclustered-incident edges, then path buying between cluster centers. A
// candidate center-to-center canonical shortest path is bought iff
//   (# path edges missing from the spanner)
//     <= 2 * (# cluster pairs whose spanner distance the path improves),
// where the distance between clusters is the minimum over member pairs.
ClusteredSpanner bkmp_6additive(GraphPtr g);

struct ClusterCheckResult {
  bool pass = true;
  int u = -1, v = -1;  // first violating pair when !pass
};

// Distance-level gate used before cluster-based augmentation. For every
// vertex u and clustered v at least one of:
//   (1) d_A(u,v) <= d_G(u,v) + beta - 2
//   (2) v is its cluster's center and d_A(u,v) <= d_G(u,v) + beta - 1
//   (3) (center(v),v) is in A and d_A(u,center(v)) + 1 <= d_G(u,v) + beta
ClusterCheckResult check_clustering_property(const Spanner& a,
                                             const Clustering& c, int beta);

// Single-pair version of the rule above, exposed for tests.
bool clustering_pair_ok(int d_a_uv, int d_a_u_center, int d_g_uv, int beta,
                        bool v_is_center, bool center_edge_in_a);

}  // namespace ftspan

#endif  // FTSPAN_BASE_SPANNERS_HPP_
