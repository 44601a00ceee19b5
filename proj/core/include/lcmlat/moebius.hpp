#pragma once

#include <cstdint>
#include <vector>

#include "lcmlat/structure.hpp"

namespace lcmlat {

/// Möbius function of a finite order, mu(lower, upper) for lower <= upper.
/// Incomparable pairs read as 0.
class MoebiusTable {
 public:
  MoebiusTable() = default;
  explicit MoebiusTable(int n) : n_(n), values_(static_cast<std::size_t>(n) * n, 0) {}

  int size() const { return n_; }
  std::int64_t operator()(int lower, int upper) const { return values_[index(lower, upper)]; }
  std::int64_t& at(int lower, int upper) { return values_[index(lower, upper)]; }

  /// mu(j, upper) for every j, indexed by j.
  std::vector<std::int64_t> toward(int upper) const;

 private:
  std::size_t index(int lower, int upper) const {
    return static_cast<std::size_t>(upper) * n_ + lower;
  }

  int n_ = 0;
  std::vector<std::int64_t> values_;
};

/// mu(i, i) = 1 and mu(j, i) = -sum_{j < k <= i} mu(k, i), one triangular pass.
MoebiusTable moebius(const Structure& s);

}  // namespace lcmlat
