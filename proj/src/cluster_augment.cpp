#include "ftspan/cluster_augment.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "ftspan/base_spanners.hpp"

namespace ftspan {

std::vector<int> ClusterAugmentEdges::all_edge_ids() const {
  std::vector<int> ids;
  for (int e : intra) {
    if (e >= 0) ids.push_back(e);
  }
  ids.insert(ids.end(), inter.begin(), inter.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

ClusterAugmentEdges augment_clusters(const Graph& g, const Clustering& c) {
  c.validate(g);
  const int n = g.num_vertices();
  ClusterAugmentEdges out;
  out.intra.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    if (!c.clustered(v)) continue;
    const int cent = c.center(v);
    if (v == cent) continue;
    auto nbrs = g.neighbors(v);
    auto eids = g.incident_edge_ids(v);
    for (size_t i = 0; i < nbrs.size(); ++i) {
      const int x = nbrs[i];
      if (x == cent || c.cluster_of[x] != c.cluster_of[v]) continue;
      out.intra[v] = eids[i];
      break;
    }
  }

  // Boundary edge lists per cluster pair; ids ascend because edges are
  // scanned in id order, and id order is lexicographic endpoint order.
  std::map<std::pair<int, int>, std::vector<int>> delta;
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edge(e);
    if (!c.clustered(u) || !c.clustered(v)) continue;
    const int cu = c.cluster_of[u];
    const int cv = c.cluster_of[v];
    if (cu == cv) continue;
    delta[{std::min(cu, cv), std::max(cu, cv)}].push_back(e);
  }
  for (const auto& [key, edges] : delta) {
    int pick_i = -1;
    int pick_j = -1;
    for (size_t i = 0; i + 1 < edges.size() && pick_i < 0; ++i) {
      const auto [a, b] = g.edge(edges[i]);
      for (size_t j = i + 1; j < edges.size(); ++j) {
        const auto [x, y] = g.edge(edges[j]);
        if (a != x && a != y && b != x && b != y) {
          pick_i = static_cast<int>(i);
          pick_j = static_cast<int>(j);
          break;
        }
      }
    }
    if (pick_i >= 0) {
      out.inter.push_back(edges[pick_i]);
      out.inter.push_back(edges[pick_j]);
    } else if (edges.size() >= 2) {
      out.inter.push_back(edges[0]);
      out.inter.push_back(edges[1]);
    } else {
      out.inter.push_back(edges[0]);
    }
  }

  long long chosen = static_cast<long long>(out.inter.size());
  for (int e : out.intra) chosen += e >= 0 ? 1 : 0;
  const long long cap =
      n + 2LL * c.num_clusters() * static_cast<long long>(c.num_clusters());
  if (chosen > cap) {
    throw std::logic_error("augment_clusters: edge count exceeds n + 2c^2");
  }
  return out;
}

Spanner build_cluster_ft_spanner(const Spanner& a, const Clustering& c,
                                 const Spanner& m) {
  if (a.host().hash() != m.host().hash()) {
    throw std::invalid_argument("cluster ft build: mismatched hosts");
  }
  const Claim& ca = a.claim();
  const Claim& cm = m.claim();
  if (ca.alpha != 1 || ca.faults != 0) {
    throw std::invalid_argument(
        "cluster ft build: base must carry a fault-free additive claim");
  }
  if (cm.beta != 0 || cm.faults != 1 || cm.kind != FaultKind::Edge) {
    throw std::invalid_argument(
        "cluster ft build: companion must carry a (alpha,0) single-edge-fault "
        "claim");
  }
  const ClusterCheckResult check = check_clustering_property(a, c, ca.beta);
  if (!check.pass) {
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "cluster ft build: base spanner fails the clustering "
                  "property at pair (%d,%d)",
                  check.u, check.v);
    throw std::runtime_error(buf);
  }

  const Graph& g = a.host();
  ClusterAugmentEdges aug = augment_clusters(g, c);
  std::vector<int> ids = a.edge_ids();
  ids.insert(ids.end(), m.edge_ids().begin(), m.edge_ids().end());
  const std::vector<int> extra = aug.all_edge_ids();
  ids.insert(ids.end(), extra.begin(), extra.end());

  Claim claim;
  claim.alpha = 1;
  claim.beta = 2 * ca.beta + std::max(2, cm.alpha - 3);
  claim.faults = 1;
  claim.kind = FaultKind::Edge;

  char prov[512];
  std::snprintf(prov, sizeof(prov),
                "cluster-ft(beta=%d,alpha=%d,base=%s,mult=%s)", ca.beta,
                cm.alpha, a.provenance().c_str(), m.provenance().c_str());
  return Spanner(a.host_ptr(), std::move(ids), claim, prov);
}

std::pair<int, int> find_block_split(const Spanner& a, Edge e, int s, int t) {
  const Graph& g = a.host();
  const int n = g.num_vertices();
  if (s < 0 || s >= n || t < 0 || t >= n) {
    throw std::invalid_argument("find_block_split: endpoint out of range");
  }
  if (e.first > e.second) std::swap(e.first, e.second);
  const int eid = g.edge_id(e.first, e.second);
  if (eid < 0) {
    throw std::invalid_argument("find_block_split: fault is not a host edge");
  }
  const int x = e.first;
  const int y = e.second;

  BfsBuffers buf;
  std::vector<int> dt(n), dx(n), dy(n), dte(n);
  bfs_masked(g, t, dt.data(), a.mask().data(), nullptr, buf);
  bfs_masked(g, x, dx.data(), a.mask().data(), nullptr, buf);
  bfs_masked(g, y, dy.data(), a.mask().data(), nullptr, buf);
  std::vector<uint8_t> mask_minus = a.mask();
  mask_minus[eid] = 0;
  bfs_masked(g, t, dte.data(), mask_minus.data(), nullptr, buf);
  if (!reachable(dt[s]) || !reachable(dte[s]) || dt[s] >= dte[s]) {
    throw std::invalid_argument(
        "find_block_split: fault must lie on every shortest s-t path of the "
        "subgraph, with s-t still connected without it");
  }

  // Shortest v-t route in the subgraph through e, by the distance identity.
  auto uses_e_toward_t = [&](int v) {
    if (!reachable(dt[v])) return false;
    long long best = -1;
    if (reachable(dx[v]) && reachable(dt[y])) {
      best = static_cast<long long>(dx[v]) + 1 + dt[y];
    }
    if (reachable(dy[v]) && reachable(dt[x])) {
      const long long cand = static_cast<long long>(dy[v]) + 1 + dt[x];
      if (best < 0 || cand < best) best = cand;
    }
    return best >= 0 && best == dt[v];
  };

  const std::vector<int> pi =
      canonical_shortest_path(g, s, t, FaultSet(FaultKind::Edge, {eid}));
  int last = -1;
  for (size_t i = 0; i < pi.size(); ++i) {
    if (uses_e_toward_t(pi[i])) last = static_cast<int>(i);
  }
  if (last < 0 || last + 1 >= static_cast<int>(pi.size())) {
    throw std::logic_error("find_block_split: no valid split on the path");
  }
  return {pi[last], pi[last + 1]};
}

}  // namespace ftspan
