#ifndef FTSPAN_SPANNER_HPP_
#define FTSPAN_SPANNER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ftspan/graph.hpp"

namespace ftspan {

// What a subgraph promises: d_{H-F}(s,t) <= alpha * d_{G-F}(s,t) + beta for
// every fault set F of the given kind with |F| <= faults. kind None goes
// with faults == 0.
struct Claim {
  int alpha = 1;
  int beta = 0;
  int faults = 0;
  FaultKind kind = FaultKind::None;

  void validate() const;
  std::string describe() const;
};

// Subgraph of a host graph, stored as host edge ids plus a membership mask
// so fault masking composes in O(|F|).
class Spanner {
 public:
  Spanner(GraphPtr host, std::vector<int> edge_ids, Claim claim,
          std::string provenance);

  const Graph& host() const { return *host_; }
  const GraphPtr& host_ptr() const { return host_; }
  const std::vector<int>& edge_ids() const { return ids_; }
  int edge_count() const { return static_cast<int>(ids_.size()); }
  bool contains(int edge_id) const { return mask_[edge_id] != 0; }
  const std::vector<uint8_t>& mask() const { return mask_; }
  const Claim& claim() const { return claim_; }
  const std::string& provenance() const { return provenance_; }

  void set_claim(Claim c) { c.validate(); claim_ = c; }

  // Union of edge sets over the same host.
  Spanner merged_with(const Spanner& other, Claim claim,
                      std::string provenance) const;

  std::string to_json() const;
  static Spanner from_json(const std::string& text, GraphPtr host);

 private:
  GraphPtr host_;
  std::vector<int> ids_;
  std::vector<uint8_t> mask_;
  Claim claim_;
  std::string provenance_;
};

// Partition of a subset of the vertices into clusters, each with a center.
// cluster_of[v] == -1 for unclustered vertices.
struct Clustering {
  std::vector<int> cluster_of;
  std::vector<int> center_of;  // indexed by cluster id

  int num_clusters() const { return static_cast<int>(center_of.size()); }
  bool clustered(int v) const { return cluster_of[v] >= 0; }
  int center(int v) const { return center_of[cluster_of[v]]; }
  std::vector<std::vector<int>> members() const;

  // Throws when cluster ids/centers are inconsistent or out of range for g.
  void validate(const Graph& g) const;
};

}  // namespace ftspan

#endif  // FTSPAN_SPANNER_HPP_
