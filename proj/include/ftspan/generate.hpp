#ifndef FTSPAN_GENERATE_HPP_
#define FTSPAN_GENERATE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ftspan/graph.hpp"

namespace ftspan {

Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_complete(int n);
Graph gen_grid(int rows, int cols);
Graph gen_petersen();

// Each unordered pair independently with probability prob. With
// largest_component, keeps only the biggest connected component (smallest
// root wins ties) relabeled order-preservingly.
Graph gen_gnp(int n, double prob, uint64_t seed, bool largest_component);

// Configuration model with resampling until the pairing is simple; throws
// after too many rejected pairings.
Graph gen_random_regular(int n, int degree, uint64_t seed);

struct GeneratorSpec {
  std::string kind;  // gnp | random_regular | grid | path | cycle | complete | petersen
  int n = 0;
  double prob = 0.0;
  int degree = 3;
  int rows = 0;
  int cols = 0;
  uint64_t seed = 1;
  bool connected = false;  // gnp only: keep the largest component
};

Graph generate(const GeneratorSpec& spec);

// Metadata comment lines for edge-list files (generator, params, seed, and
// the named PRNG so seeds reproduce elsewhere).
std::vector<std::string> generator_metadata(const GeneratorSpec& spec);

}  // namespace ftspan

#endif  // FTSPAN_GENERATE_HPP_
