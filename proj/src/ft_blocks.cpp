#include "ftspan/ft_blocks.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ftspan/base_spanners.hpp"

namespace ftspan {

std::vector<std::vector<int>> eft_multiplicative_rounds(const Graph& g, int k,
                                                        int f) {
  if (k < 1 || f < 0)
    throw std::invalid_argument("eft-mult: k >= 1 and f >= 0 required");
  std::vector<uint8_t> taken(g.num_edges(), 0);
  std::vector<std::vector<int>> rounds;
  for (int r = 0; r <= f; ++r) {
    std::vector<int> candidates;
    for (int id = 0; id < g.num_edges(); ++id)
      if (!taken[id]) candidates.push_back(id);
    if (candidates.empty()) break;
    std::vector<int> kept = greedy_spanner_round(g, k, candidates);
    for (int id : kept) taken[id] = 1;
    rounds.push_back(std::move(kept));
  }
  return rounds;
}

Spanner eft_multiplicative(GraphPtr g, int k, int f) {
  auto rounds = eft_multiplicative_rounds(*g, k, f);
  std::vector<int> ids;
  std::ostringstream sizes;
  for (size_t i = 0; i < rounds.size(); ++i) {
    ids.insert(ids.end(), rounds[i].begin(), rounds[i].end());
    sizes << (i ? "+" : "") << rounds[i].size();
  }
  std::ostringstream prov;
  prov << "eft-mult(k=" << k << ",f=" << f << ",rounds=" << sizes.str() << ")";
  Claim claim{2 * k - 1, 0, f, f == 0 ? FaultKind::None : FaultKind::Edge};
  return Spanner(std::move(g), std::move(ids), claim, prov.str());
}

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void check_sources(const Graph& g, const std::vector<int>& sources) {
  for (int s : sources)
    if (s < 0 || s >= g.num_vertices())
      throw std::invalid_argument("sourcewise: source out of range");
}

struct CanonicalTree {
  std::vector<int> dist;
  std::vector<int> parent;
  std::vector<int> edge_ids;  // ascending tree edge ids
};

CanonicalTree canonical_tree(const Graph& g, int s) {
  CanonicalTree t;
  t.dist.resize(g.num_vertices());
  t.parent.resize(g.num_vertices());
  BfsBuffers buf;
  bfs_masked(g, s, t.dist.data(), nullptr, nullptr, buf);
  canonical_parents(g, s, t.dist.data(), t.parent.data(), nullptr, nullptr);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (t.parent[v] >= 0) t.edge_ids.push_back(g.edge_id(t.parent[v], v));
  std::sort(t.edge_ids.begin(), t.edge_ids.end());
  return t;
}

// Candidate single faults probed for source s: its tree edges for edge
// faults, every other vertex in its component for vertex faults.
std::vector<int> fault_candidates(const Graph& g, int s,
                                  const CanonicalTree& tree, FaultKind kind) {
  if (kind == FaultKind::Edge) return tree.edge_ids;
  std::vector<int> vs;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (v != s && reachable(tree.dist[v])) vs.push_back(v);
  return vs;
}

}  // namespace

Spanner sourcewise_ft_preserver(GraphPtr g, const std::vector<int>& sources,
                                FaultKind kind) {
  if (kind == FaultKind::None)
    throw std::invalid_argument("preserver: fault kind must be edge or vertex");
  check_sources(*g, sources);
  const int n = g->num_vertices();
  const int m = g->num_edges();

  std::vector<int> ids;
  std::vector<int> dist1(n), parent1(n);
  std::vector<uint8_t> edge_mask(m, 1);
  std::vector<uint8_t> alive(n, 1);
  BfsBuffers buf;

  for (int s : sorted_unique(sources)) {
    CanonicalTree base = canonical_tree(*g, s);
    ids.insert(ids.end(), base.edge_ids.begin(), base.edge_ids.end());

    for (int x : fault_candidates(*g, s, base, kind)) {
      const uint8_t* emask = nullptr;
      const uint8_t* vmask = nullptr;
      if (kind == FaultKind::Edge) {
        edge_mask[x] = 0;
        emask = edge_mask.data();
      } else {
        alive[x] = 0;
        vmask = alive.data();
      }
      bfs_masked(*g, s, dist1.data(), emask, vmask, buf);
      canonical_parents(*g, s, dist1.data(), parent1.data(), emask, vmask);
      for (int t = 0; t < n; ++t) {
        if (t == s || !reachable(dist1[t])) continue;
        if (kind == FaultKind::Vertex && t == x) continue;
        if (dist1[t] != base.dist[t] || parent1[t] != base.parent[t])
          ids.push_back(g->edge_id(parent1[t], t));
      }
      if (kind == FaultKind::Edge)
        edge_mask[x] = 1;
      else
        alive[x] = 1;
    }
  }

  std::ostringstream prov;
  prov << "sw-preserver(kind=" << to_string(kind)
       << ",sources=" << sorted_unique(sources).size() << ")";
  return Spanner(std::move(g), std::move(ids), Claim{1, 0, 1, kind},
                 prov.str());
}

Spanner sourcewise_ft_augment(const Spanner& a, const std::vector<int>& sources,
                              FaultKind kind) {
  if (kind == FaultKind::None)
    throw std::invalid_argument("sw-augment: fault kind must be edge or vertex");
  if (a.claim().faults != 0)
    throw std::invalid_argument("sw-augment: base spanner must carry a "
                                "fault-free claim");
  const Graph& g = a.host();
  check_sources(g, sources);
  const std::vector<int> srcs = sorted_unique(sources);
  const int n = g.num_vertices();
  const int m = g.num_edges();
  const int64_t alpha = a.claim().alpha;
  const int64_t beta = a.claim().beta;

  std::vector<uint8_t> h_mask = a.mask();
  auto add_id = [&](int id) { h_mask[id] = 1; };

  std::vector<CanonicalTree> trees;
  trees.reserve(srcs.size());
  for (int s : srcs) {
    trees.push_back(canonical_tree(g, s));
    for (int id : trees.back().edge_ids) add_id(id);
  }

  std::vector<int> dg(n), pg(n), dh(n);
  std::vector<uint8_t> g_edge_mask(m, 1);
  std::vector<uint8_t> alive(n, 1);
  BfsBuffers buf;

  // Adding a path can only shorten spanner distances, so sweeping until a
  // clean pass terminates: the edge set grows monotonically and is bounded
  // by E(g).
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t si = 0; si < srcs.size(); ++si) {
      const int s = srcs[si];
      for (int x : fault_candidates(g, s, trees[si], kind)) {
        const uint8_t* gmask = nullptr;
        const uint8_t* vmask = nullptr;
        uint8_t h_saved = 0;
        if (kind == FaultKind::Edge) {
          g_edge_mask[x] = 0;
          h_saved = h_mask[x];
          h_mask[x] = 0;
          gmask = g_edge_mask.data();
        } else {
          alive[x] = 0;
          vmask = alive.data();
        }
        bfs_masked(g, s, dg.data(), gmask, vmask, buf);
        bfs_masked(g, s, dh.data(), h_mask.data(), vmask, buf);
        bool need_parents = true;
        for (int t = 0; t < n; ++t) {
          if (t == s || !reachable(dg[t])) continue;
          if (kind == FaultKind::Vertex && t == x) continue;
          if (reachable(dh[t]) && dh[t] <= alpha * dg[t] + beta) continue;
          if (need_parents) {
            canonical_parents(g, s, dg.data(), pg.data(), gmask, vmask);
            need_parents = false;
          }
          for (int w = t; pg[w] >= 0; w = pg[w])
            add_id(g.edge_id(pg[w], w));
          changed = true;
        }
        if (kind == FaultKind::Edge) {
          g_edge_mask[x] = 1;
          h_mask[x] = h_saved;
        } else {
          alive[x] = 1;
        }
      }
    }
  }

  std::vector<int> ids;
  for (int id = 0; id < m; ++id)
    if (h_mask[id]) ids.push_back(id);
  std::ostringstream prov;
  prov << "sw-augment(base=" << a.provenance() << ",kind=" << to_string(kind)
       << ",sources=" << srcs.size() << ")";
  return Spanner(a.host_ptr(), std::move(ids),
                 Claim{a.claim().alpha, a.claim().beta, 1, kind}, prov.str());
}

std::string to_string(SourcewiseKind k) {
  return k == SourcewiseKind::Preserver ? "preserver" : "augmented-2additive";
}

Spanner SourcewiseFactory::build(GraphPtr g,
                                 const std::vector<int>& sources) const {
  Spanner out = kind_ == SourcewiseKind::Preserver
                    ? sourcewise_ft_preserver(g, sources, fault_kind_)
                    : sourcewise_ft_augment(acim_2additive(g).spanner, sources,
                                            fault_kind_);
  samples_.push_back({g->num_vertices(), static_cast<int>(sources.size()),
                      out.edge_count()});
  return out;
}

}  // namespace ftspan
