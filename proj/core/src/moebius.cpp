#include "lcmlat/moebius.hpp"

namespace lcmlat {

std::vector<std::int64_t> MoebiusTable::toward(int upper) const {
  std::vector<std::int64_t> out(n_);
  for (int j = 0; j < n_; ++j) out[j] = (*this)(j, upper);
  return out;
}

MoebiusTable moebius(const Structure& s) {
  const int n = s.size();
  MoebiusTable table(n);
  for (int i = 0; i < n; ++i) {
    const ElementSet below = s.down_set(i);
    table.at(i, i) = 1;
    // Descending index order visits every k with j < k <= i before j.
    for (int j = i - 1; j >= 0; --j) {
      if (!below.contains(j)) continue;
      std::int64_t sum = 0;
      for (int k : below & s.up_set(j)) {
        if (k != j) sum += table(k, i);
      }
      table.at(j, i) = -sum;
    }
  }
  return table;
}

}  // namespace lcmlat
