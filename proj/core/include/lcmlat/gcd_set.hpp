#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lcmlat/number.hpp"
#include "lcmlat/structure.hpp"

namespace lcmlat {

/// A GCD-closed set of distinct positive integers, sorted ascending, together
/// with its divisibility order. Ascending order is a linear extension of
/// divisibility, so element i of the set is element i of `order()`.
class GcdSet {
 public:
  /// Throws ValidationError on an empty list, a non-positive value, a
  /// duplicate, or a pair whose gcd is missing (the message names the pair).
  static GcdSet build(std::vector<Integer> values, std::string name = {});
  /// Smallest GCD-closed superset of `values`.
  static GcdSet closure(std::vector<Integer> values, std::string name = {});

  int size() const { return static_cast<int>(elements_.size()); }
  const Integer& operator[](int i) const { return elements_[i]; }
  const std::vector<Integer>& elements() const { return elements_; }
  const Structure& order() const { return order_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::optional<int> index_of(const Integer& value) const;
  /// The maximum element's index if every element divides it.
  std::optional<int> top() const;

  /// Elements multiplied by `factor`.
  GcdSet scaled(const Integer& factor) const;

 private:
  std::vector<Integer> elements_;
  Structure order_;
  std::string name_;
};

/// Divisibility order of sorted, distinct positive integers (no closure check).
Structure divisibility_order(std::span<const Integer> sorted_values);

/// "{1,2,3}".
std::string set_to_text(const GcdSet& s);

}  // namespace lcmlat
