#include "ftspan/generate.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "ftspan/rng.hpp"

namespace ftspan {

Graph gen_path(int n) {
  if (n < 1) throw std::invalid_argument("gen_path: n must be >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph gen_cycle(int n) {
  if (n < 3) throw std::invalid_argument("gen_cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, std::move(edges));
}

Graph gen_complete(int n) {
  if (n < 1) throw std::invalid_argument("gen_complete: n must be >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph gen_grid(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("gen_grid: rows and cols must be >= 1");
  }
  std::vector<Edge> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return Graph(rows * cols, std::move(edges));
}

Graph gen_petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    const int j = (i + 1) % 5;
    edges.emplace_back(std::min(i, j), std::max(i, j));  // outer cycle
    edges.emplace_back(i, i + 5);                        // spoke
    const int a = 5 + i;
    const int b = 5 + (i + 2) % 5;
    edges.emplace_back(std::min(a, b), std::max(a, b));  // inner star
  }
  return Graph(10, std::move(edges));
}

namespace {

Graph largest_component_subgraph(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  int num_comp = 0;
  std::vector<int> queue;
  for (int v = 0; v < n; ++v) {
    if (comp[v] >= 0) continue;
    comp[v] = num_comp;
    queue.assign(1, v);
    for (size_t head = 0; head < queue.size(); ++head) {
      for (int u : g.neighbors(queue[head])) {
        if (comp[u] >= 0) continue;
        comp[u] = num_comp;
        queue.push_back(u);
      }
    }
    ++num_comp;
  }
  std::vector<int> size(num_comp, 0);
  for (int v = 0; v < n; ++v) ++size[comp[v]];
  // Components are numbered by smallest member, so max_element's first
  // maximum picks the tie with the smallest root.
  const int best = static_cast<int>(
      std::max_element(size.begin(), size.end()) - size.begin());
  std::vector<int> relabel(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (comp[v] == best) relabel[v] = next++;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (comp[e.first] == best && comp[e.second] == best) {
      edges.emplace_back(relabel[e.first], relabel[e.second]);
    }
  }
  return Graph(next, std::move(edges));
}

}  // namespace

Graph gen_gnp(int n, double prob, uint64_t seed, bool largest_component) {
  if (n < 1) throw std::invalid_argument("gen_gnp: n must be >= 1");
  if (prob < 0.0 || prob > 1.0) {
    throw std::invalid_argument("gen_gnp: prob must be within [0, 1]");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.uniform01() < prob) edges.emplace_back(u, v);
    }
  }
  Graph g(n, std::move(edges));
  return largest_component ? largest_component_subgraph(g) : g;
}

Graph gen_random_regular(int n, int degree, uint64_t seed) {
  if (n < 1 || degree < 0 || degree >= n) {
    throw std::invalid_argument("gen_random_regular: need 0 <= degree < n");
  }
  if ((static_cast<long long>(n) * degree) % 2 != 0) {
    throw std::invalid_argument("gen_random_regular: n*degree must be even");
  }
  Rng rng(seed);
  std::vector<int> stubs;
  stubs.reserve(static_cast<size_t>(n) * degree);
  constexpr int kMaxAttempts = 500;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    stubs.clear();
    for (int v = 0; v < n; ++v) {
      for (int d = 0; d < degree; ++d) stubs.push_back(v);
    }
    rng.shuffle(stubs);
    std::vector<Edge> edges;
    bool ok = true;
    for (size_t i = 0; ok && i + 1 < stubs.size(); i += 2) {
      int u = stubs[i];
      int v = stubs[i + 1];
      if (u == v) {
        ok = false;
        break;
      }
      if (u > v) std::swap(u, v);
      edges.emplace_back(u, v);
    }
    if (!ok) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
      continue;
    }
    return Graph(n, std::move(edges));
  }
  throw std::runtime_error(
      "gen_random_regular: no simple pairing found; try another seed");
}

Graph generate(const GeneratorSpec& spec) {
  if (spec.kind == "gnp") {
    return gen_gnp(spec.n, spec.prob, spec.seed, spec.connected);
  }
  if (spec.kind == "random_regular") {
    return gen_random_regular(spec.n, spec.degree, spec.seed);
  }
  if (spec.kind == "grid") {
    const int rows = spec.rows > 0 ? spec.rows : spec.n;
    const int cols = spec.cols > 0 ? spec.cols : spec.n;
    return gen_grid(rows, cols);
  }
  if (spec.kind == "path") return gen_path(spec.n);
  if (spec.kind == "cycle") return gen_cycle(spec.n);
  if (spec.kind == "complete") return gen_complete(spec.n);
  if (spec.kind == "petersen") return gen_petersen();
  throw std::invalid_argument("generate: unknown generator '" + spec.kind +
                              "'");
}

std::vector<std::string> generator_metadata(const GeneratorSpec& spec) {
  std::vector<std::string> out;
  out.push_back("generator: " + spec.kind);
  char buf[96];
  if (spec.kind == "gnp") {
    std::snprintf(buf, sizeof(buf), "n: %d", spec.n);
    out.emplace_back(buf);
    std::snprintf(buf, sizeof(buf), "prob: %.6f", spec.prob);
    out.emplace_back(buf);
  } else if (spec.kind == "random_regular") {
    std::snprintf(buf, sizeof(buf), "n: %d", spec.n);
    out.emplace_back(buf);
    std::snprintf(buf, sizeof(buf), "degree: %d", spec.degree);
    out.emplace_back(buf);
  } else if (spec.kind == "grid") {
    std::snprintf(buf, sizeof(buf), "rows: %d",
                  spec.rows > 0 ? spec.rows : spec.n);
    out.emplace_back(buf);
    std::snprintf(buf, sizeof(buf), "cols: %d",
                  spec.cols > 0 ? spec.cols : spec.n);
    out.emplace_back(buf);
  } else if (spec.kind != "petersen") {
    std::snprintf(buf, sizeof(buf), "n: %d", spec.n);
    out.emplace_back(buf);
  }
  if (spec.kind == "gnp" || spec.kind == "random_regular") {
    std::snprintf(buf, sizeof(buf), "seed: %llu",
                  static_cast<unsigned long long>(spec.seed));
    out.emplace_back(buf);
    out.push_back(std::string("prng: ") + Rng::algorithm());
  }
  if (spec.kind == "gnp" && spec.connected) {
    out.emplace_back("connected: largest-component");
  }
  return out;
}

}  // namespace ftspan
