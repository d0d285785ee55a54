#ifndef FTSPAN_TESTS_SUPPORT_SUITE_HPP_
#define FTSPAN_TESTS_SUPPORT_SUITE_HPP_

#include <memory>
#include <vector>

#include "ftspan/generate.hpp"
#include "ftspan/graph.hpp"

namespace ftspan::testsupport {

inline GraphPtr host(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

inline GraphPtr gnp_host(int n, double prob, uint64_t seed,
                         bool connected = true) {
  return host(gen_gnp(n, prob, seed, connected));
}

// Seeds 1..count, largest component kept.
inline std::vector<GraphPtr> gnp_suite(int n, double prob, int count) {
  std::vector<GraphPtr> out;
  out.reserve(count);
  for (int seed = 1; seed <= count; ++seed)
    out.push_back(gnp_host(n, prob, seed));
  return out;
}

}  // namespace ftspan::testsupport

#endif  // FTSPAN_TESTS_SUPPORT_SUITE_HPP_
