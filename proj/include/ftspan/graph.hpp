#ifndef FTSPAN_GRAPH_HPP_
#define FTSPAN_GRAPH_HPP_

#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ftspan {

// Distances are non-negative ints; kUnreachable sorts above every finite
// distance and must never take part in arithmetic.
constexpr int kUnreachable = std::numeric_limits<int>::max();

inline bool reachable(int d) { return d != kUnreachable; }

using Edge = std::pair<int, int>;  // stored with first < second

// Immutable unweighted undirected graph. Vertices are 0..n-1, edges get
// dense ids 0..m-1 in lexicographic endpoint order, so an edge id means the
// same thing in every structure derived from the graph (spanners, fault
// sets, masks).
class Graph {
 public:
  Graph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(int id) const { return edges_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Neighbor ids of v in ascending order; adj_edge_ids()[i] is the edge id
  // of the i-th adjacency entry.
  std::span<const int> neighbors(int v) const {
    return {adj_vertex_.data() + offset_[v],
            adj_vertex_.data() + offset_[v + 1]};
  }
  std::span<const int> incident_edge_ids(int v) const {
    return {adj_edge_.data() + offset_[v], adj_edge_.data() + offset_[v + 1]};
  }
  int degree(int v) const { return offset_[v + 1] - offset_[v]; }

  // -1 when the pair is not an edge.
  int edge_id(int u, int v) const;
  bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }

  // FNV-1a over (n, m, edge list); identifies the host in serialized
  // artifacts. Stable across platforms.
  uint64_t hash() const { return hash_; }
  std::string hash_hex() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<int> offset_;
  std::vector<int> adj_vertex_;
  std::vector<int> adj_edge_;
  uint64_t hash_;
};

using GraphPtr = std::shared_ptr<const Graph>;

enum class FaultKind { None, Edge, Vertex };

std::string to_string(FaultKind k);
FaultKind fault_kind_from_string(const std::string& s);

// A set of failed edges (by edge id) or failed vertices. Items are kept
// sorted and distinct.
struct FaultSet {
  FaultKind kind = FaultKind::Edge;
  std::vector<int> items;

  FaultSet() = default;
  FaultSet(FaultKind k, std::vector<int> xs);

  bool empty() const { return items.empty(); }
  int size() const { return static_cast<int>(items.size()); }
  bool contains(int x) const;

  // Throws std::invalid_argument when an item is out of range for g.
  void validate(const Graph& g) const;
};

// Workspace for repeated BFS runs; reuse to avoid reallocating per call.
struct BfsBuffers {
  std::vector<int> queue;
};

// Single-source BFS. edge_allowed/vertex_alive are optional byte masks over
// edge ids / vertex ids (nullptr = everything allowed). dist must have size
// n; unreached vertices get kUnreachable.
void bfs_masked(const Graph& g, int src, int* dist,
                const uint8_t* edge_allowed, const uint8_t* vertex_alive,
                BfsBuffers& buf);

// Canonical parent assignment: parent[v] is the lowest-id allowed neighbor
// of v at distance dist[v]-1, parent[src] = -1. This makes every
// shortest-path query deterministic.
void canonical_parents(const Graph& g, int src, const int* dist, int* parent,
                       const uint8_t* edge_allowed,
                       const uint8_t* vertex_alive);

std::vector<int> bfs_distances(const Graph& g, int src,
                               const FaultSet& faults = {});

// Distances between all pairs; rows/columns of failed vertices are invalid
// (alive(v) == false) and hold kUnreachable.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int n) : n_(n), d_(static_cast<size_t>(n) * n, kUnreachable),
                          alive_(n, 1) {}

  int n() const { return n_; }
  int at(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
  int& at(int u, int v) { return d_[static_cast<size_t>(u) * n_ + v]; }
  bool alive(int v) const { return alive_[v] != 0; }
  void set_dead(int v) { alive_[v] = 0; }

 private:
  int n_ = 0;
  std::vector<int> d_;
  std::vector<uint8_t> alive_;
};

DistanceMatrix all_pairs_distances(const Graph& g, const FaultSet& faults = {});

// Deterministic shortest path from u to v avoiding faults, built from the
// canonical parent chain of a BFS rooted at u. Throws when v is unreachable
// or an endpoint is a failed vertex.
std::vector<int> canonical_shortest_path(const Graph& g, int u, int v,
                                         const FaultSet& faults = {});

// Edge-list text format: first non-comment line "n m", then m lines "u v"
// with 0 <= u < v < n. Lines starting with '#' are comments.
Graph read_edge_list(const std::string& text);
Graph read_edge_list_file(const std::string& path);
std::string write_edge_list(const Graph& g,
                            const std::vector<std::string>& comments = {});
void write_edge_list_file(const Graph& g, const std::string& path,
                          const std::vector<std::string>& comments = {});

}  // namespace ftspan

#endif  // FTSPAN_GRAPH_HPP_
