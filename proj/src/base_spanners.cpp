#include "ftspan/base_spanners.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ftspan {

namespace {

int ceil_sqrt(int n) {
  int d = 1;
  while (static_cast<long long>(d) * d < n) ++d;
  return d;
}

int ceil_cbrt(int n) {
  int d = 1;
  while (static_cast<long long>(d) * d * d < n) ++d;
  return d;
}

// Depth-bounded reachability test on a dynamic adjacency structure; uses
// stamped visit marks so repeated calls stay O(visited).
class BoundedBfs {
 public:
  explicit BoundedBfs(int n) : mark_(n, 0), dist_(n, 0), stamp_(0) {
    queue_.reserve(n);
  }

  bool within(const std::vector<std::vector<int>>& adj, int from, int to,
              int limit) {
    ++stamp_;
    queue_.clear();
    queue_.push_back(from);
    mark_[from] = stamp_;
    dist_[from] = 0;
    for (size_t head = 0; head < queue_.size(); ++head) {
      const int u = queue_[head];
      if (dist_[u] >= limit) break;  // queue is level-ordered
      for (int v : adj[u]) {
        if (mark_[v] == stamp_) continue;
        if (v == to) return true;
        mark_[v] = stamp_;
        dist_[v] = dist_[u] + 1;
        queue_.push_back(v);
      }
    }
    return false;
  }

 private:
  std::vector<int> mark_, dist_, queue_;
  int stamp_;
};

}  // namespace

std::vector<int> greedy_spanner_round(const Graph& g, int k,
                                      const std::vector<int>& candidates) {
  const int limit = 2 * k - 1;
  std::vector<std::vector<int>> adj(g.num_vertices());
  BoundedBfs bfs(g.num_vertices());
  std::vector<int> kept;
  for (int id : candidates) {
    auto [u, v] = g.edge(id);
    if (!bfs.within(adj, u, v, limit)) {
      kept.push_back(id);
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }
  return kept;
}

Spanner greedy_multiplicative(GraphPtr g, int k) {
  if (k < 1) throw std::invalid_argument("greedy: k >= 1 required");
  std::vector<int> all(g->num_edges());
  for (int i = 0; i < g->num_edges(); ++i) all[i] = i;
  std::vector<int> kept = greedy_spanner_round(*g, k, all);
  std::ostringstream prov;
  prov << "greedy(k=" << k << ")";
  return Spanner(std::move(g), std::move(kept),
                 Claim{2 * k - 1, 0, 0, FaultKind::None}, prov.str());
}

Clustering degree_clustering(const Graph& g, int delta) {
  const int n = g.num_vertices();
  Clustering c;
  c.cluster_of.assign(n, -1);
  std::vector<int> free_deg(n);
  for (int v = 0; v < n; ++v) free_deg[v] = g.degree(v);
  // Eligibility only shrinks, so scanning for the lowest-id candidate once
  // per round is enough and centers come out in ascending id order.
  for (int v = 0; v < n; ++v) {
    if (c.cluster_of[v] >= 0 || free_deg[v] < delta) continue;
    const int cid = c.num_clusters();
    c.center_of.push_back(v);
    std::vector<int> grabbed{v};
    for (int u : g.neighbors(v))
      if (c.cluster_of[u] < 0) grabbed.push_back(u);
    for (int u : grabbed) c.cluster_of[u] = cid;
    for (int u : grabbed)
      for (int w : g.neighbors(u)) --free_deg[w];
  }
  return c;
}

namespace {

// Star edges plus every edge with an unclustered endpoint — the part both
// clustering-based constructions share.
std::vector<int> clustering_base_edges(const Graph& g, const Clustering& c) {
  std::vector<int> ids;
  for (int cid = 0; cid < c.num_clusters(); ++cid) {
    const int ctr = c.center_of[cid];
    auto nb = g.neighbors(ctr);
    auto eid = g.incident_edge_ids(ctr);
    for (size_t i = 0; i < nb.size(); ++i)
      if (c.cluster_of[nb[i]] == cid) ids.push_back(eid[i]);
  }
  for (int id = 0; id < g.num_edges(); ++id) {
    auto [u, v] = g.edge(id);
    if (!c.clustered(u) || !c.clustered(v)) ids.push_back(id);
  }
  return ids;
}

}  // namespace

ClusteredSpanner acim_2additive(GraphPtr g) {
  const int n = g->num_vertices();
  const int delta = ceil_sqrt(n);
  Clustering c = degree_clustering(*g, delta);
  std::vector<int> ids = clustering_base_edges(*g, c);

  std::vector<int> dist(n), parent(n);
  BfsBuffers buf;
  for (int ctr : c.center_of) {
    bfs_masked(*g, ctr, dist.data(), nullptr, nullptr, buf);
    canonical_parents(*g, ctr, dist.data(), parent.data(), nullptr, nullptr);
    for (int v = 0; v < n; ++v)
      if (parent[v] >= 0) ids.push_back(g->edge_id(parent[v], v));
  }

  std::ostringstream prov;
  prov << "acim2(delta=" << delta << ",clusters=" << c.num_clusters() << ")";
  Spanner s(std::move(g), std::move(ids), Claim{1, 2, 0, FaultKind::None},
            prov.str());
  return {std::move(s), std::move(c)};
}

ClusteredSpanner bkmp_6additive(GraphPtr g) {
  const int n = g->num_vertices();
  const int m = g->num_edges();
  const int delta = ceil_cbrt(n);
  Clustering c = degree_clustering(*g, delta);
  const int k = c.num_clusters();
  const auto members = c.members();

  std::vector<uint8_t> in_h(m, 0);
  std::vector<std::vector<int>> adj(n);
  auto add_edge = [&](int id) {
    if (in_h[id]) return;
    in_h[id] = 1;
    auto [u, v] = g->edge(id);
    adj[u].push_back(v);
    adj[v].push_back(u);
  };
  for (int id : clustering_base_edges(*g, c)) add_edge(id);

  // Distance from every cluster to every vertex in the current spanner;
  // rebuilt lazily after a purchase.
  std::vector<std::vector<int>> cdist(k);
  bool dirty = true;
  auto multi_source = [&](const std::vector<int>& srcs,
                          const std::vector<std::vector<int>>& a,
                          std::vector<int>& out) {
    out.assign(n, kUnreachable);
    std::vector<int> q;
    q.reserve(n);
    for (int s : srcs) {
      out[s] = 0;
      q.push_back(s);
    }
    for (size_t head = 0; head < q.size(); ++head) {
      const int u = q[head];
      for (int v : a[u])
        if (out[v] == kUnreachable) {
          out[v] = out[u] + 1;
          q.push_back(v);
        }
    }
  };
  auto cluster_gap = [&](const std::vector<int>& dist_from_cluster,
                         int other) {
    int best = kUnreachable;
    for (int v : members[other]) best = std::min(best, dist_from_cluster[v]);
    return best;
  };

  int bought = 0;
  for (int ci = 0; ci < k; ++ci) {
    for (int cj = ci + 1; cj < k; ++cj) {
      const int a = c.center_of[ci], b = c.center_of[cj];
      std::vector<int> path;
      try {
        path = canonical_shortest_path(*g, a, b);
      } catch (const std::invalid_argument&) {
        continue;  // centers in different components
      }
      std::vector<int> missing;
      for (size_t i = 0; i + 1 < path.size(); ++i) {
        const int id = g->edge_id(path[i], path[i + 1]);
        if (!in_h[id]) missing.push_back(id);
      }
      if (missing.empty()) continue;

      if (dirty) {
        for (int cc = 0; cc < k; ++cc)
          multi_source(members[cc], adj, cdist[cc]);
        dirty = false;
      }
      for (int id : missing) {
        auto [u, v] = g->edge(id);
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
      int value = 0;
      std::vector<int> trial;
      for (int cc = 0; cc < k; ++cc) {
        multi_source(members[cc], adj, trial);
        for (int cd = cc + 1; cd < k; ++cd)
          if (cluster_gap(trial, cd) < cluster_gap(cdist[cc], cd)) ++value;
      }
      if (static_cast<int>(missing.size()) <= 2 * value) {
        for (int id : missing) in_h[id] = 1;
        ++bought;
        dirty = true;
      } else {
        for (int id : missing) {
          auto [u, v] = g->edge(id);
          adj[u].pop_back();
          adj[v].pop_back();
        }
      }
    }
  }

  std::vector<int> ids;
  for (int id = 0; id < m; ++id)
    if (in_h[id]) ids.push_back(id);
  std::ostringstream prov;
  prov << "bkmp6(delta=" << delta << ",clusters=" << k << ",bought=" << bought
       << ")";
  Spanner s(std::move(g), std::move(ids), Claim{1, 6, 0, FaultKind::None},
            prov.str());
  return {std::move(s), std::move(c)};
}

bool clustering_pair_ok(int d_a_uv, int d_a_u_center, int d_g_uv, int beta,
                        bool v_is_center, bool center_edge_in_a) {
  if (!reachable(d_g_uv)) return true;
  if (reachable(d_a_uv) && d_a_uv <= d_g_uv + beta - 2) return true;
  if (v_is_center && reachable(d_a_uv) && d_a_uv <= d_g_uv + beta - 1)
    return true;
  if (center_edge_in_a && reachable(d_a_u_center) &&
      d_a_u_center + 1 <= d_g_uv + beta)
    return true;
  return false;
}

ClusterCheckResult check_clustering_property(const Spanner& a,
                                             const Clustering& c, int beta) {
  const Graph& g = a.host();
  c.validate(g);
  const int n = g.num_vertices();

  DistanceMatrix dg = all_pairs_distances(g);
  DistanceMatrix da(n);
  {
    BfsBuffers buf;
    for (int s = 0; s < n; ++s)
      bfs_masked(g, s, &da.at(s, 0), a.mask().data(), nullptr, buf);
  }

  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (!c.clustered(v)) continue;
      const int ctr = c.center(v);
      const int eid = v == ctr ? -1 : g.edge_id(ctr, v);
      const bool center_edge = eid >= 0 && a.contains(eid);
      if (!clustering_pair_ok(da.at(u, v), da.at(u, ctr), dg.at(u, v), beta,
                              v == ctr, center_edge))
        return {false, u, v};
    }
  }
  return {};
}

}  // namespace ftspan
