#include "lcmlat/gcd_set.hpp"

#include <algorithm>
#include <set>

#include "lcmlat/errors.hpp"

namespace lcmlat {

Structure divisibility_order(std::span<const Integer> sorted_values) {
  const int n = static_cast<int>(sorted_values.size());
  if (n > kMaxElements) throw ValidationError("sets with more than 64 elements are not supported");
  std::vector<ElementSet> down(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      if (mpz_divisible_p(sorted_values[i].get_mpz_t(), sorted_values[j].get_mpz_t())) {
        down[i].insert(j);
      }
    }
  }
  return Structure::from_down_sets(std::move(down));
}

GcdSet GcdSet::build(std::vector<Integer> values, std::string name) {
  if (values.empty()) throw ValidationError("a GCD-closed set needs at least one element");
  for (const auto& v : values) {
    if (v < 1) throw ValidationError("element " + to_string(v) + " is not a positive integer");
  }
  std::sort(values.begin(), values.end());
  if (auto dup = std::adjacent_find(values.begin(), values.end()); dup != values.end()) {
    throw ValidationError("duplicate element " + to_string(*dup));
  }
  if (values.size() > static_cast<std::size_t>(kMaxElements)) {
    throw ValidationError("sets with more than 64 elements are not supported");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      const Integer g = gcd(values[i], values[j]);
      if (!std::binary_search(values.begin(), values.end(), g)) {
        throw ValidationError("set is not GCD closed: gcd(" + to_string(values[i]) + ", " +
                              to_string(values[j]) + ") = " + to_string(g) + " is missing");
      }
    }
  }
  GcdSet s;
  s.order_ = divisibility_order(values);
  s.elements_ = std::move(values);
  s.name_ = std::move(name);
  return s;
}

GcdSet GcdSet::closure(std::vector<Integer> values, std::string name) {
  if (values.empty()) throw ValidationError("a GCD-closed set needs at least one element");
  std::set<Integer> closed(values.begin(), values.end());
  std::vector<Integer> frontier(closed.begin(), closed.end());
  while (!frontier.empty()) {
    std::vector<Integer> added;
    const std::vector<Integer> current(closed.begin(), closed.end());
    for (const auto& a : frontier) {
      for (const auto& b : current) {
        Integer g = gcd(a, b);
        if (closed.insert(g).second) added.push_back(std::move(g));
      }
    }
    frontier = std::move(added);
  }
  return build(std::vector<Integer>(closed.begin(), closed.end()), std::move(name));
}

std::optional<int> GcdSet::index_of(const Integer& value) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), value);
  if (it == elements_.end() || *it != value) return std::nullopt;
  return static_cast<int>(it - elements_.begin());
}

std::optional<int> GcdSet::top() const {
  const int last = size() - 1;
  if (order_.down_set(last) == order_.all()) return last;
  return std::nullopt;
}

GcdSet GcdSet::scaled(const Integer& factor) const {
  if (factor < 1) throw PreconditionError("scale factor must be positive");
  GcdSet out = *this;
  for (auto& v : out.elements_) v *= factor;
  return out;
}

std::string set_to_text(const GcdSet& s) {
  std::string out = "{";
  for (int i = 0; i < s.size(); ++i) out += (i ? "," : "") + to_string(s[i]);
  return out + "}";
}

}  // namespace lcmlat
