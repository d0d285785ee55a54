#include "ftspan/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ftspan {

namespace {

uint64_t fnv1a_init() { return 1469598103934665603ULL; }

void fnv1a_u64(uint64_t& h, uint64_t x) {
  for (int i = 0; i < 8; ++i) {
    h ^= (x >> (8 * i)) & 0xff;
    h *= 1099511628211ULL;
  }
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n <= 0) throw std::invalid_argument("graph: need at least one vertex");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("graph: vertex id out of range");
    if (u == v) throw std::invalid_argument("graph: self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("graph: duplicate edge");
  edges_ = std::move(edges);

  offset_.assign(n_ + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++offset_[u + 1];
    ++offset_[v + 1];
  }
  for (int i = 0; i < n_; ++i) offset_[i + 1] += offset_[i];
  adj_vertex_.resize(2 * edges_.size());
  adj_edge_.resize(2 * edges_.size());
  std::vector<int> cursor(offset_.begin(), offset_.end() - 1);
  for (int id = 0; id < num_edges(); ++id) {
    auto [u, v] = edges_[id];
    adj_vertex_[cursor[u]] = v;
    adj_edge_[cursor[u]++] = id;
    adj_vertex_[cursor[v]] = u;
    adj_edge_[cursor[v]++] = id;
  }
  // Edges were inserted in ascending id order, which is lexicographic
  // endpoint order, so every adjacency list is already sorted by neighbor.

  uint64_t h = fnv1a_init();
  fnv1a_u64(h, 0x66747370616e3031ULL);  // format tag "ftspan01"
  fnv1a_u64(h, static_cast<uint64_t>(n_));
  fnv1a_u64(h, static_cast<uint64_t>(edges_.size()));
  for (const auto& [u, v] : edges_) {
    fnv1a_u64(h, static_cast<uint64_t>(u));
    fnv1a_u64(h, static_cast<uint64_t>(v));
  }
  hash_ = h;
}

int Graph::edge_id(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return -1;
  return incident_edge_ids(u)[it - nb.begin()];
}

std::string Graph::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(hash_));
  return buf;
}

std::string to_string(FaultKind k) {
  switch (k) {
    case FaultKind::None: return "none";
    case FaultKind::Edge: return "edge";
    case FaultKind::Vertex: return "vertex";
  }
  return "none";
}

FaultKind fault_kind_from_string(const std::string& s) {
  if (s == "none") return FaultKind::None;
  if (s == "edge") return FaultKind::Edge;
  if (s == "vertex") return FaultKind::Vertex;
  throw std::invalid_argument("unknown fault kind: " + s);
}

FaultSet::FaultSet(FaultKind k, std::vector<int> xs)
    : kind(k), items(std::move(xs)) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
}

bool FaultSet::contains(int x) const {
  return std::binary_search(items.begin(), items.end(), x);
}

void FaultSet::validate(const Graph& g) const {
  if (items.empty()) return;
  if (kind == FaultKind::None)
    throw std::invalid_argument("fault set: kind 'none' cannot hold items");
  const int limit =
      kind == FaultKind::Edge ? g.num_edges() : g.num_vertices();
  for (int x : items)
    if (x < 0 || x >= limit)
      throw std::invalid_argument("fault set: item out of range");
}

void bfs_masked(const Graph& g, int src, int* dist,
                const uint8_t* edge_allowed, const uint8_t* vertex_alive,
                BfsBuffers& buf) {
  const int n = g.num_vertices();
  std::fill(dist, dist + n, kUnreachable);
  auto& q = buf.queue;
  q.clear();
  dist[src] = 0;
  q.push_back(src);
  for (size_t head = 0; head < q.size(); ++head) {
    const int u = q[head];
    const int du = dist[u];
    auto nb = g.neighbors(u);
    auto ids = g.incident_edge_ids(u);
    for (size_t i = 0; i < nb.size(); ++i) {
      const int v = nb[i];
      if (dist[v] != kUnreachable) continue;
      if (edge_allowed && !edge_allowed[ids[i]]) continue;
      if (vertex_alive && !vertex_alive[v]) continue;
      dist[v] = du + 1;
      q.push_back(v);
    }
  }
}

void canonical_parents(const Graph& g, int src, const int* dist, int* parent,
                       const uint8_t* edge_allowed,
                       const uint8_t* vertex_alive) {
  const int n = g.num_vertices();
  for (int v = 0; v < n; ++v) {
    parent[v] = -1;
    if (v == src || !reachable(dist[v])) continue;
    auto nb = g.neighbors(v);
    auto ids = g.incident_edge_ids(v);
    for (size_t i = 0; i < nb.size(); ++i) {
      const int u = nb[i];
      if (dist[u] != dist[v] - 1) continue;
      if (edge_allowed && !edge_allowed[ids[i]]) continue;
      if (vertex_alive && !vertex_alive[u]) continue;
      parent[v] = u;  // neighbors ascend, so the first hit is the lowest id
      break;
    }
  }
}

namespace {

// Expands a fault set into optional masks; storage lives in the caller.
struct Masks {
  const uint8_t* edge = nullptr;
  const uint8_t* vertex = nullptr;
  std::vector<uint8_t> edge_store, vertex_store;

  Masks(const Graph& g, const FaultSet& f) {
    f.validate(g);
    if (f.items.empty()) return;
    if (f.kind == FaultKind::Edge) {
      edge_store.assign(g.num_edges(), 1);
      for (int id : f.items) edge_store[id] = 0;
      edge = edge_store.data();
    } else {
      vertex_store.assign(g.num_vertices(), 1);
      for (int v : f.items) vertex_store[v] = 0;
      vertex = vertex_store.data();
    }
  }
};

}  // namespace

std::vector<int> bfs_distances(const Graph& g, int src, const FaultSet& faults) {
  if (src < 0 || src >= g.num_vertices())
    throw std::invalid_argument("bfs: source out of range");
  if (faults.kind == FaultKind::Vertex && faults.contains(src))
    throw std::invalid_argument("bfs: source is a failed vertex");
  Masks m(g, faults);
  std::vector<int> dist(g.num_vertices());
  BfsBuffers buf;
  bfs_masked(g, src, dist.data(), m.edge, m.vertex, buf);
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g, const FaultSet& faults) {
  const int n = g.num_vertices();
  Masks m(g, faults);
  DistanceMatrix mat(n);
  if (faults.kind == FaultKind::Vertex)
    for (int v : faults.items) mat.set_dead(v);
  BfsBuffers buf;
  for (int s = 0; s < n; ++s) {
    if (!mat.alive(s)) continue;
    bfs_masked(g, s, &mat.at(s, 0), m.edge, m.vertex, buf);
  }
  return mat;
}

std::vector<int> canonical_shortest_path(const Graph& g, int u, int v,
                                         const FaultSet& faults) {
  if (u < 0 || v < 0 || u >= g.num_vertices() || v >= g.num_vertices())
    throw std::invalid_argument("canonical path: vertex out of range");
  if (faults.kind == FaultKind::Vertex &&
      (faults.contains(u) || faults.contains(v)))
    throw std::invalid_argument("canonical path: endpoint is a failed vertex");
  Masks m(g, faults);
  const int n = g.num_vertices();
  std::vector<int> dist(n), parent(n);
  BfsBuffers buf;
  bfs_masked(g, u, dist.data(), m.edge, m.vertex, buf);
  if (!reachable(dist[v]))
    throw std::invalid_argument("canonical path: target unreachable");
  canonical_parents(g, u, dist.data(), parent.data(), m.edge, m.vertex);
  std::vector<int> path;
  for (int w = v; w != -1; w = parent[w]) path.push_back(w);
  std::reverse(path.begin(), path.end());
  return path;
}

Graph read_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  long m = -1;
  std::vector<Edge> edges;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m) || n <= 0 || m < 0)
        throw std::runtime_error("edge list: bad header at line " +
                                 std::to_string(lineno));
      edges.reserve(m);
      continue;
    }
    int u, v;
    if (!(ls >> u >> v))
      throw std::runtime_error("edge list: malformed line " +
                               std::to_string(lineno));
    std::string rest;
    if (ls >> rest)
      throw std::runtime_error("edge list: trailing tokens at line " +
                               std::to_string(lineno));
    if (u < 0 || v >= n || u >= v)
      throw std::runtime_error(
          "edge list: endpoints must satisfy 0 <= u < v < n at line " +
          std::to_string(lineno));
    edges.emplace_back(u, v);
  }
  if (n < 0) throw std::runtime_error("edge list: missing header");
  if (static_cast<long>(edges.size()) != m)
    throw std::runtime_error("edge list: expected " + std::to_string(m) +
                             " edges, found " + std::to_string(edges.size()));
  try {
    return Graph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("edge list: ") + e.what());
  }
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_edge_list(ss.str());
}

std::string write_edge_list(const Graph& g,
                            const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << "\n";
  out << g.num_vertices() << ' ' << g.num_edges() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << "\n";
  return out.str();
}

void write_edge_list_file(const Graph& g, const std::string& path,
                          const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << write_edge_list(g, comments);
}

}  // namespace ftspan
