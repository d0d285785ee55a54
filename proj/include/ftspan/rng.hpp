#ifndef FTSPAN_RNG_HPP_
#define FTSPAN_RNG_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace ftspan {

// mt19937_64 with hand-rolled uniform draws. std::uniform_int_distribution
// is implementation-defined, so everything that must reproduce across
// platforms goes through this wrapper instead.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  static std::string algorithm() { return "mt19937_64/rejection-v1"; }

  uint64_t next() { return eng_(); }

  // Uniform in [0, bound), bound > 0; rejection sampling, no modulo bias.
  uint64_t below(uint64_t bound) {
    const uint64_t limit = bound * (UINT64_MAX / bound);
    uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

  int below_int(int bound) { return static_cast<int>(below(bound)); }

  // Uniform in [0,1) with 53 random bits.
  double uniform01() { return (eng_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct values from [0, universe), sorted ascending.
  std::vector<int> distinct(int universe, int k);

 private:
  std::mt19937_64 eng_;
};

}  // namespace ftspan

#endif  // FTSPAN_RNG_HPP_
