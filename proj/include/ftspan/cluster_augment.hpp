#ifndef FTSPAN_CLUSTER_AUGMENT_HPP_
#define FTSPAN_CLUSTER_AUGMENT_HPP_

#include <utility>
#include <vector>

#include "ftspan/graph.hpp"
#include "ftspan/spanner.hpp"

namespace ftspan {

// Edges added on top of a clustered additive spanner: one cluster-mate edge
// per non-center vertex plus at most two boundary edges per cluster pair.
struct ClusterAugmentEdges {
  std::vector<int> intra;  // per vertex: host edge id or -1
  std::vector<int> inter;  // host edge ids, grouped by cluster pair

  std::vector<int> all_edge_ids() const;  // sorted, distinct
};

// intra: for every clustered non-center v, the lowest-id neighbor x inside
// v's cluster with x != center gives edge (v,x). inter: per cluster pair
// with boundary delta, prefer the lexicographically first vertex-disjoint
// edge pair, else the two lowest-id distinct edges, else the single edge.
// Total count is capped at n + 2*|clusters|^2 (checked).
ClusterAugmentEdges augment_clusters(const Graph& g, const Clustering& c);

// H = a (clustered (1,beta) spanner) + m (multiplicative (alpha,0,1,edge)
// spanner) + augment_clusters. Claim (1, 2*beta + max(2, alpha-3), 1, edge).
// Refuses to build when a fails check_clustering_property for its beta, or
// when m is not a single-edge-fault multiplicative claim.
Spanner build_cluster_ft_spanner(const Spanner& a, const Clustering& c,
                                 const Spanner& m);

// For a fault edge e on every shortest s-t path of subgraph a (with s,t
// still connected in a-e): returns consecutive vertices (z, z') on the
// canonical shortest s-t path of the host minus e such that no shortest
// s-z path in a uses e and no shortest z'-t path in a uses e. z is the
// last vertex on that path which still has a shortest route to t through
// e; "uses e=(x,y)" is the distance identity
//   d_a(u,w) == min(d_a(u,x)+1+d_a(y,w), d_a(u,y)+1+d_a(x,w)).
std::pair<int, int> find_block_split(const Spanner& a, Edge e, int s, int t);

}  // namespace ftspan

#endif  // FTSPAN_CLUSTER_AUGMENT_HPP_
