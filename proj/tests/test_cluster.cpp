#include <algorithm>
#include <vector>

#include "doctest.h"
#include "ftspan/base_spanners.hpp"
#include "ftspan/cluster_augment.hpp"
#include "ftspan/ft_blocks.hpp"
#include "ftspan/generate.hpp"
#include "ftspan/oracle.hpp"
#include "ftspan/rng.hpp"
#include "support/suite.hpp"

using namespace ftspan;
namespace ts = ftspan::testsupport;

namespace {

Spanner full_spanner(GraphPtr g, Claim claim, const std::string& prov) {
  std::vector<int> ids(g->num_edges());
  for (int i = 0; i < g->num_edges(); ++i) ids[i] = i;
  return Spanner(std::move(g), std::move(ids), claim, prov);
}

Clustering no_clusters(int n) {
  Clustering c;
  c.cluster_of.assign(n, -1);
  return c;
}

}  // namespace

TEST_CASE("cluster-mate edges skip the center and share ids") {
  const Graph g = gen_complete(3);
  Clustering c;
  c.cluster_of = {0, 0, 0};
  c.center_of = {0};
  const auto aug = augment_clusters(g, c);
  CHECK(aug.intra == std::vector<int>{-1, 2, 2});  // both pick edge (1,2)
  CHECK(aug.inter.empty());
  CHECK(aug.all_edge_ids() == std::vector<int>{2});
}

TEST_CASE("single boundary edge is taken as is") {
  const Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  Clustering c;
  c.cluster_of = {0, 0, 1, 1};
  c.center_of = {0, 2};
  const auto aug = augment_clusters(g, c);
  CHECK(aug.inter == std::vector<int>{1});  // edge (1,2)
}

TEST_CASE("boundary pairs prefer vertex-disjoint edges") {
  // Boundary of the two clusters: (0,2), (0,3), (1,2). The first
  // vertex-disjoint pair in id order is (0,3) with (1,2).
  const Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
  Clustering c;
  c.cluster_of = {0, 0, 1, 1};
  c.center_of = {0, 2};
  const auto aug = augment_clusters(g, c);
  CHECK(aug.inter == std::vector<int>{2, 3});  // ids of (0,3),(1,2)
}

TEST_CASE("sharing boundary edges fall back to the two lowest ids") {
  // Both boundary edges leave vertex 0, so no disjoint pair exists.
  const Graph g(4, {{0, 1}, {0, 2}, {0, 3}});
  Clustering c;
  c.cluster_of = {0, 0, 1, 1};
  c.center_of = {0, 2};
  const auto aug = augment_clusters(g, c);
  CHECK(aug.inter == std::vector<int>{1, 2});  // ids of (0,2),(0,3)
}

TEST_CASE("augment edge count stays within n + 2c^2") {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    auto g = ts::gnp_host(50, 0.2, seed);
    const auto cs = acim_2additive(g);
    const auto aug = augment_clusters(*g, cs.clustering);
    const long long c = cs.clustering.num_clusters();
    CHECK(static_cast<long long>(aug.all_edge_ids().size()) <=
          g->num_vertices() + 2 * c * c);
    // Every clustered non-center with an eligible cluster-mate got one.
    for (int v = 0; v < g->num_vertices(); ++v) {
      if (!cs.clustering.clustered(v)) {
        CHECK(aug.intra[v] == -1);
        continue;
      }
      const int cent = cs.clustering.center(v);
      if (v == cent) continue;
      bool has_mate = false;
      for (int u : g->neighbors(v))
        has_mate |= u != cent &&
                    cs.clustering.cluster_of[u] == cs.clustering.cluster_of[v];
      CHECK((aug.intra[v] >= 0) == has_mate);
    }
  }
}

TEST_CASE("combined build refuses inconsistent claims") {
  auto g = ts::host(gen_cycle(6));
  auto g2 = ts::host(gen_cycle(7));
  const Clustering c = no_clusters(6);
  const Spanner a = full_spanner(g, Claim{1, 2, 0, FaultKind::None}, "a");
  const Spanner m = full_spanner(g, Claim{3, 0, 1, FaultKind::Edge}, "m");
  CHECK_THROWS_AS(
      build_cluster_ft_spanner(
          full_spanner(g2, Claim{1, 2, 0, FaultKind::None}, "a2"),
          no_clusters(7), m),
      std::invalid_argument);  // host mismatch
  CHECK_THROWS_AS(
      build_cluster_ft_spanner(
          full_spanner(g, Claim{3, 0, 0, FaultKind::None}, "bad"), c, m),
      std::invalid_argument);  // base not purely additive
  CHECK_THROWS_AS(
      build_cluster_ft_spanner(
          a, c, full_spanner(g, Claim{3, 2, 1, FaultKind::Edge}, "bad")),
      std::invalid_argument);  // companion not purely multiplicative
  CHECK_THROWS_AS(
      build_cluster_ft_spanner(
          a, c, full_spanner(g, Claim{3, 0, 1, FaultKind::Vertex}, "bad")),
      std::invalid_argument);  // wrong fault kind
}

TEST_CASE("combined build refuses a base that fails the clustering gate") {
  auto g = ts::host(gen_cycle(6));
  std::vector<int> ids;
  for (int id = 0; id < g->num_edges(); ++id)
    if (g->edge(id) != Edge{0, 5}) ids.push_back(id);
  const Spanner a(g, ids, Claim{1, 2, 0, FaultKind::None}, "weak");
  Clustering c = no_clusters(6);
  c.cluster_of[5] = 0;
  c.center_of = {5};
  const Spanner m = full_spanner(g, Claim{3, 0, 1, FaultKind::Edge}, "m");
  CHECK_THROWS_WITH_AS(build_cluster_ft_spanner(a, c, m),
                       doctest::Contains("(0,5)"), std::runtime_error);
}

TEST_CASE("combined claim arithmetic, frozen") {
  auto g = ts::gnp_host(20, 0.25, 3);
  const int n = g->num_vertices();
  const Spanner m5 = full_spanner(g, Claim{5, 0, 1, FaultKind::Edge}, "m5");
  const Spanner m3 = full_spanner(g, Claim{3, 0, 1, FaultKind::Edge}, "m3");
  const Spanner a6 = full_spanner(g, Claim{1, 6, 0, FaultKind::None}, "a6");
  const Spanner a4 = full_spanner(g, Claim{1, 4, 0, FaultKind::None}, "a4");
  const Spanner a2 = full_spanner(g, Claim{1, 2, 0, FaultKind::None}, "a2");
  CHECK(build_cluster_ft_spanner(a6, no_clusters(n), m5).claim().beta == 14);
  CHECK(build_cluster_ft_spanner(a4, no_clusters(n), m5).claim().beta == 10);
  CHECK(build_cluster_ft_spanner(a2, no_clusters(n), m3).claim().beta == 6);
  const Spanner h = build_cluster_ft_spanner(a2, no_clusters(n), m3);
  CHECK(h.edge_count() == g->num_edges());
  CHECK(h.claim().faults == 1);
  CHECK(h.claim().kind == FaultKind::Edge);
  const auto rep = verify_claim(*g, h);
  CHECK(rep.pass);
  CHECK(rep.max_additive == 0);  // the union is the whole host
}

TEST_CASE("clustered 6-additive base + multiplicative companion, end to end") {
  for (uint64_t seed = 1; seed <= 4; ++seed) {
    auto g = ts::gnp_host(30, 0.2, seed);
    const auto cs = bkmp_6additive(g);
    const Spanner m = eft_multiplicative(g, 3, 1);  // (5,0) one edge fault
    const Spanner h = build_cluster_ft_spanner(cs.spanner, cs.clustering, m);
    CHECK(h.claim().beta == 14);
    const auto rep = verify_claim(*g, h);
    CHECK(rep.pass);
    CHECK(rep.max_additive <= 14);
  }
}

TEST_CASE("2-additive base + short multiplicative companion, end to end") {
  for (uint64_t seed = 5; seed <= 7; ++seed) {
    auto g = ts::gnp_host(30, 0.2, seed);
    const auto cs = acim_2additive(g);
    const Spanner m = eft_multiplicative(g, 2, 1);
    const Spanner h = build_cluster_ft_spanner(cs.spanner, cs.clustering, m);
    CHECK(h.claim().beta == 6);
    CHECK(verify_claim(*g, h).pass);
  }
}

TEST_CASE("path split on frozen fixtures") {
  {
    auto g = ts::host(gen_cycle(6));
    const Spanner a = full_spanner(g, Claim{1, 0, 0, FaultKind::None}, "a");
    CHECK(find_block_split(a, {1, 2}, 0, 2) == std::pair<int, int>{5, 4});
  }
  {
    auto g = ts::host(gen_cycle(4));
    const Spanner a = full_spanner(g, Claim{1, 0, 0, FaultKind::None}, "a");
    CHECK(find_block_split(a, {0, 1}, 0, 1) == std::pair<int, int>{3, 2});
    CHECK(find_block_split(a, {1, 0}, 0, 1) == std::pair<int, int>{3, 2});
  }
  {
    auto g = ts::host(gen_cycle(5));
    const Spanner a = full_spanner(g, Claim{1, 0, 0, FaultKind::None}, "a");
    CHECK(find_block_split(a, {1, 2}, 0, 2) == std::pair<int, int>{0, 4});
  }
}

TEST_CASE("path split rejects bad preconditions") {
  auto g = ts::host(gen_cycle(4));
  const Spanner a = full_spanner(g, Claim{1, 0, 0, FaultKind::None}, "a");
  // (0,1) does not lie on every shortest 0-2 route.
  CHECK_THROWS_AS(find_block_split(a, {0, 1}, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(find_block_split(a, {0, 2}, 0, 1), std::invalid_argument);
  auto p = ts::host(gen_path(3));
  const Spanner ap = full_spanner(p, Claim{1, 0, 0, FaultKind::None}, "a");
  CHECK_THROWS_AS(find_block_split(ap, {1, 2}, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(find_block_split(ap, {1, 2}, 0, 7), std::invalid_argument);
}

TEST_CASE("path split postconditions hold on random instances") {
  // Re-derives both fault-free-route conditions from scratch distances.
  int instances = 0;
  Rng rng(99);
  for (uint64_t seed = 1; instances < 60 && seed <= 200; ++seed) {
    auto g = ts::gnp_host(8 + static_cast<int>(rng.below(12)), 0.25, seed);
    const int n = g->num_vertices();
    const Spanner a =
        seed % 2 == 0
            ? full_spanner(g, Claim{1, 0, 0, FaultKind::None}, "host")
            : greedy_multiplicative(g, 2);
    if (a.edge_count() < 2) continue;
    const int eid = a.edge_ids()[rng.below(a.edge_ids().size())];
    const auto [x, y] = g->edge(eid);

    std::vector<uint8_t> mask_minus = a.mask();
    mask_minus[eid] = 0;
    std::vector<int> da(n), dae(n);
    BfsBuffers buf;
    std::vector<std::vector<int>> da_all(n), dae_all(n);
    for (int v = 0; v < n; ++v) {
      bfs_masked(*g, v, da.data(), a.mask().data(), nullptr, buf);
      da_all[v] = da;
      bfs_masked(*g, v, dae.data(), mask_minus.data(), nullptr, buf);
      dae_all[v] = dae;
    }
    auto route_through_e = [&](int u, int w) {
      if (!reachable(da_all[u][w])) return false;
      long long best = -1;
      if (reachable(da_all[u][x]) && reachable(da_all[y][w]))
        best = static_cast<long long>(da_all[u][x]) + 1 + da_all[y][w];
      if (reachable(da_all[u][y]) && reachable(da_all[x][w])) {
        const long long cand =
            static_cast<long long>(da_all[u][y]) + 1 + da_all[x][w];
        if (best < 0 || cand < best) best = cand;
      }
      return best >= 0 && best == da_all[u][w];
    };

    for (int s = 0; s < n && instances < 60; ++s) {
      for (int t = 0; t < n && instances < 60; ++t) {
        if (s == t || !reachable(dae_all[s][t])) continue;
        if (da_all[s][t] >= dae_all[s][t]) continue;
        const auto [z, zp] = find_block_split(a, {x, y}, s, t);
        const auto pi = canonical_shortest_path(
            *g, s, t, FaultSet(FaultKind::Edge, {eid}));
        const auto it = std::find(pi.begin(), pi.end(), z);
        REQUIRE(it != pi.end());
        REQUIRE(it + 1 != pi.end());
        CHECK(*(it + 1) == zp);
        CHECK_FALSE(route_through_e(s, z));
        CHECK_FALSE(route_through_e(zp, t));
        ++instances;
      }
    }
  }
  CHECK(instances == 60);
}
