#include <algorithm>
#include <vector>

#include "doctest.h"
#include "ftspan/base_spanners.hpp"
#include "ftspan/generate.hpp"
#include "ftspan/oracle.hpp"
#include "support/suite.hpp"

using namespace ftspan;
namespace ts = ftspan::testsupport;

TEST_CASE("greedy on K4 keeps a star, claim holds") {
  auto g = ts::host(gen_complete(4));
  Spanner h = greedy_multiplicative(g, 2);
  CHECK(h.edge_ids() == std::vector<int>{0, 1, 2});  // (0,1),(0,2),(0,3)
  CHECK(h.claim().alpha == 3);
  CHECK(h.claim().beta == 0);
  const auto rep = verify_claim(*g, h);
  CHECK(rep.pass);
  CHECK(rep.max_additive <= 0);
}

TEST_CASE("greedy k=2 keeps every edge of the Petersen graph") {
  auto g = ts::host(gen_petersen());
  Spanner h = greedy_multiplicative(g, 2);
  CHECK(h.edge_count() == 15);  // girth 5 leaves nothing to drop
}

TEST_CASE("greedy output girth exceeds 2k and claim verifies") {
  for (uint64_t seed : {3u, 4u}) {
    auto g = ts::gnp_host(24, 0.3, seed);
    for (int k : {2, 3}) {
      Spanner h = greedy_multiplicative(g, k);
      CHECK(verify_claim(*g, h).pass);
      // Girth > 2k <=> every spanner edge lacks an alternate route of
      // length <= 2k-1 inside the spanner.
      std::vector<uint8_t> mask = h.mask();
      for (int id : h.edge_ids()) {
        mask[id] = 0;
        auto [u, v] = g->edge(id);
        std::vector<int> dist(g->num_vertices());
        BfsBuffers buf;
        bfs_masked(*g, u, dist.data(), mask.data(), nullptr, buf);
        if (reachable(dist[v])) CHECK(dist[v] >= 2 * k);
        mask[id] = 1;
      }
    }
  }
}

TEST_CASE("restricted greedy round only sees its candidates") {
  const Graph g = gen_complete(4);
  const auto kept = greedy_spanner_round(g, 2, {3, 4, 5});
  CHECK(kept == std::vector<int>{3, 4});  // (1,2),(1,3); (2,3) has a 2-path
}

TEST_CASE("degree clustering takes lowest-id centers with all free neighbors") {
  const Graph star(10, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                        {0, 6}, {0, 7}, {0, 8}, {0, 9}});
  const Clustering c = degree_clustering(star, 4);
  REQUIRE(c.num_clusters() == 1);
  CHECK(c.center_of[0] == 0);
  for (int v = 0; v < 10; ++v) CHECK(c.cluster_of[v] == 0);
  CHECK_NOTHROW(c.validate(star));

  // Max degree 2 < delta = 3: nothing clusters on a path.
  const Clustering none = degree_clustering(gen_path(9), 3);
  CHECK(none.num_clusters() == 0);
}

TEST_CASE("cluster sizes imply the cluster-count bound") {
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    auto g = ts::gnp_host(50, 0.2, seed);
    const auto cs = acim_2additive(g);
    const int delta = 8;  // ceil(sqrt(50))
    const auto members = cs.clustering.members();
    for (const auto& mem : members)
      CHECK(static_cast<int>(mem.size()) >= delta + 1);
    CHECK(cs.clustering.num_clusters() * (delta + 1) <= g->num_vertices());
  }
}

TEST_CASE("2-additive construction on frozen fixtures") {
  {
    auto g = ts::host(gen_path(9));
    const auto cs = acim_2additive(g);
    CHECK(cs.spanner.edge_count() == 8);  // no clusters -> whole path
    CHECK(cs.clustering.num_clusters() == 0);
  }
  {
    const Graph star(10, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                          {0, 6}, {0, 7}, {0, 8}, {0, 9}});
    const auto cs = acim_2additive(ts::host(star));
    CHECK(cs.spanner.edge_count() == 9);  // star + its own BFS tree coincide
    CHECK(cs.clustering.num_clusters() == 1);
  }
}

TEST_CASE("2-additive claim and clustering gate hold on random graphs") {
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    auto g = ts::gnp_host(40, 0.15, seed);
    const auto cs = acim_2additive(g);
    CHECK(cs.spanner.claim().beta == 2);
    CHECK(verify_claim(*g, cs.spanner).pass);
    const auto gate = check_clustering_property(cs.spanner, cs.clustering, 2);
    CHECK(gate.pass);
  }
}

TEST_CASE("6-additive claim and clustering gate hold on random graphs") {
  {
    auto g = ts::host(gen_path(9));
    const auto cs = bkmp_6additive(g);
    CHECK(cs.spanner.edge_count() == 8);
  }
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    auto g = ts::gnp_host(45, 0.18, seed);
    const auto cs = bkmp_6additive(g);
    CHECK(cs.spanner.claim().beta == 6);
    CHECK(cs.spanner.edge_count() <= g->num_edges());
    CHECK(verify_claim(*g, cs.spanner).pass);
    const auto gate = check_clustering_property(cs.spanner, cs.clustering, 6);
    CHECK(gate.pass);
  }
}

TEST_CASE("pair rule truth table") {
  const int inf = kUnreachable;
  CHECK(clustering_pair_ok(2, 99, 2, 2, false, false));        // direct slack
  CHECK_FALSE(clustering_pair_ok(4, 99, 2, 2, false, false));  // no rule left
  CHECK(clustering_pair_ok(3, 99, 2, 2, true, false));         // center slack
  CHECK_FALSE(clustering_pair_ok(3, 99, 2, 2, false, false));
  CHECK(clustering_pair_ok(9, 3, 2, 2, false, true));   // route via center
  CHECK_FALSE(clustering_pair_ok(9, 3, 2, 2, false, false));
  CHECK(clustering_pair_ok(inf, 3, 2, 2, false, true));  // only the center path
  CHECK(clustering_pair_ok(inf, inf, inf, 2, false, false));  // vacuous
}

TEST_CASE("clustering gate pins the first violating pair") {
  // Host is a 6-cycle; the subgraph drops edge (0,5), so vertex 5 sits at
  // distance 5 from vertex 0 while the host distance is 1.
  auto g = ts::host(gen_cycle(6));
  std::vector<int> ids;
  for (int id = 0; id < g->num_edges(); ++id)
    if (g->edge(id) != Edge{0, 5}) ids.push_back(id);
  Spanner a(g, ids, Claim{1, 4, 0, FaultKind::None}, "test");
  Clustering c;
  c.cluster_of.assign(6, -1);
  c.cluster_of[5] = 0;
  c.center_of = {5};
  const auto res = check_clustering_property(a, c, 2);
  REQUIRE_FALSE(res.pass);
  CHECK(res.u == 0);
  CHECK(res.v == 5);
}
