#include "ftspan/union_compose.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace ftspan {

namespace {

// Walk the canonical parent chain rooted at u back from v; forward path
// u..v comes out reversed.
std::vector<int> chain_path(const std::vector<int>& parent, int u, int v) {
  std::vector<int> path;
  for (int w = v;; w = parent[w]) {
    path.push_back(w);
    if (w == u) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<std::pair<int, int>> first_failed_edge(
    const Graph& g, const FaultSet& faults, const std::vector<int>& path) {
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    const int a = path[i];
    const int b = path[i + 1];
    const int eid = g.edge_id(std::min(a, b), std::max(a, b));
    if (faults.contains(eid)) return std::make_pair(a, b);
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<int, int>> path_class(const Spanner& a,
                                              const FaultSet& faults, int u,
                                              int v) {
  const Graph& g = a.host();
  if (!faults.empty() && faults.kind != FaultKind::Edge) {
    throw std::invalid_argument("path_class: edge faults only");
  }
  faults.validate(g);
  const int n = g.num_vertices();
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw std::invalid_argument("path_class: vertex out of range");
  }
  BfsBuffers buf;
  std::vector<int> dist(n), parent(n);
  bfs_masked(g, u, dist.data(), a.mask().data(), nullptr, buf);
  if (!reachable(dist[v])) {
    throw std::runtime_error("path_class: pair disconnected in the subgraph");
  }
  canonical_parents(g, u, dist.data(), parent.data(), a.mask().data(),
                    nullptr);
  return first_failed_edge(g, faults, chain_path(parent, u, v));
}

std::string BlockDecomposition::to_json() const {
  nlohmann::ordered_json j;
  j["s"] = s;
  j["t"] = t;
  j["pi"] = pi;
  j["proper_blocks"] = num_proper;
  j["blocks"] = nlohmann::ordered_json::array();
  for (const Block& b : blocks) {
    nlohmann::ordered_json jb;
    jb["path"] = b.path;
    jb["x1"] = b.x1;
    jb["x2"] = b.x2;
    jb["y1"] = b.y1;
    jb["y2"] = b.y2;
    jb["y_perp"] = b.y_perp;
    if (b.cls) {
      jb["class"] = {b.cls->first, b.cls->second};
    } else {
      jb["class"] = nullptr;
    }
    j["blocks"].push_back(std::move(jb));
  }
  return j.dump(2);
}

BlockDecomposition decompose_blocks(const Spanner& a, const FaultSet& faults,
                                    int s, int t) {
  const Graph& g = a.host();
  const int n = g.num_vertices();
  if (s < 0 || s >= n || t < 0 || t >= n) {
    throw std::invalid_argument("decompose_blocks: endpoint out of range");
  }
  if (!faults.empty() && faults.kind != FaultKind::Edge) {
    throw std::invalid_argument("decompose_blocks: edge faults only");
  }
  faults.validate(g);

  BlockDecomposition out;
  out.s = s;
  out.t = t;
  {
    const std::vector<int> d = bfs_distances(g, s, faults);
    if (!reachable(d[t])) {
      throw std::invalid_argument(
          "decompose_blocks: endpoints disconnected under the fault set");
    }
  }
  out.pi = canonical_shortest_path(g, s, t, faults);
  const int len = static_cast<int>(out.pi.size());

  BfsBuffers buf;
  std::vector<int> dist(n), parent(n);
  const auto classes_from = [&](int src, int from_pos,
                                std::vector<std::optional<std::pair<int, int>>>&
                                    cls) {
    bfs_masked(g, src, dist.data(), a.mask().data(), nullptr, buf);
    canonical_parents(g, src, dist.data(), parent.data(), a.mask().data(),
                      nullptr);
    for (int j = from_pos; j < len; ++j) {
      const int v = out.pi[j];
      if (!reachable(dist[v])) {
        throw std::runtime_error(
            "decompose_blocks: subgraph disconnects a path pair");
      }
      cls[j] = first_failed_edge(g, faults, chain_path(parent, src, v));
    }
  };

  std::vector<std::optional<std::pair<int, int>>> cls(len);
  int i = 0;
  while (true) {
    const int x1 = out.pi[i];
    int j2 = -1;
    if (i + 1 < len) {
      classes_from(x1, i + 1, cls);
      for (int j = i + 1; j < len; ++j) {
        if (cls[j]) {
          j2 = j;
          break;
        }
      }
    }
    if (j2 < 0) {
      Block tail;
      tail.path.assign(out.pi.begin() + i, out.pi.end());
      tail.x1 = x1;
      tail.y_perp = t;
      out.blocks.push_back(std::move(tail));
      break;
    }
    const std::pair<int, int> f = *cls[j2];

    // Positionally last pair on pi[i..] whose class is exactly f; scanning
    // ascending and overwriting leaves the lexicographically largest
    // position pair, so nothing at or past y_perp can repeat this class.
    int best_a = i;
    int best_b = j2;
    for (int a_pos = i; a_pos + 1 < len; ++a_pos) {
      if (a_pos > i) classes_from(out.pi[a_pos], a_pos + 1, cls);
      for (int b_pos = a_pos + 1; b_pos < len; ++b_pos) {
        if (cls[b_pos] && *cls[b_pos] == f) {
          best_a = a_pos;
          best_b = b_pos;
        }
      }
    }

    Block blk;
    blk.path.assign(out.pi.begin() + i, out.pi.begin() + best_a + 2);
    blk.x1 = x1;
    blk.x2 = out.pi[j2];
    blk.y1 = out.pi[best_a];
    blk.y2 = out.pi[best_b];
    blk.y_perp = out.pi[best_a + 1];
    blk.cls = f;
    out.blocks.push_back(std::move(blk));
    ++out.num_proper;
    if (out.num_proper > 2 * faults.size()) {
      throw std::logic_error(
          "decompose_blocks: more proper blocks than directed failed edges");
    }
    i = best_a + 1;
  }
  return out;
}

std::pair<int, int> stretch_claim(int alpha, int beta, int f) {
  if (alpha < 1 || beta < 0 || f < 1) {
    throw std::invalid_argument(
        "stretch_claim: need alpha >= 1, beta >= 0, f >= 1");
  }
  const int now = f == 1 ? 2 * beta + alpha - 1 : 2 * f * (beta + alpha - 1) + beta;
  const int before = 2 * f * (2 * beta + alpha - 1) + beta;
  return {now, before};
}

Spanner union_spanner(const Spanner& a, const Spanner& m) {
  if (a.host().hash() != m.host().hash()) {
    throw std::invalid_argument("union_spanner: mismatched hosts");
  }
  const Claim& ca = a.claim();
  const Claim& cm = m.claim();
  if (ca.alpha != 1 || ca.faults != 0) {
    throw std::invalid_argument(
        "union_spanner: first operand must carry a fault-free additive claim");
  }
  if (cm.beta != 0 || cm.faults < 1 || cm.kind != FaultKind::Edge) {
    throw std::invalid_argument(
        "union_spanner: second operand must carry an (alpha,0) edge-fault "
        "claim");
  }
  Claim claim;
  claim.alpha = 1;
  claim.beta = stretch_claim(cm.alpha, ca.beta, cm.faults).first;
  claim.faults = cm.faults;
  claim.kind = FaultKind::Edge;

  char prov[512];
  std::snprintf(prov, sizeof(prov), "union(f=%d,base=%s,mult=%s)", cm.faults,
                a.provenance().c_str(), m.provenance().c_str());
  return a.merged_with(m, claim, prov);
}

}  // namespace ftspan
