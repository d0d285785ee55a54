#include "ftspan/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace ftspan {

std::vector<int> Rng::distinct(int universe, int k) {
  if (k > universe)
    throw std::invalid_argument("rng: cannot draw more items than universe");
  std::vector<int> out;
  out.reserve(k);
  while (static_cast<int>(out.size()) < k) {
    int x = below_int(universe);
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ftspan
