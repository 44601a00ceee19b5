#include "lcmlat/structure.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lcmlat/errors.hpp"

namespace lcmlat {

namespace {

std::string pair_text(int a, int b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

int max_antichain(const Structure& s, ElementSet candidates, int chosen, int best) {
  if (candidates.empty()) return std::max(best, chosen);
  if (chosen + candidates.size() <= best) return best;
  const int v = candidates.lowest();
  best = max_antichain(s, candidates - s.comparable_set(v), chosen + 1, best);
  return max_antichain(s, candidates - ElementSet::single(v), chosen, best);
}

}  // namespace

Structure Structure::from_covers(int n, std::span<const CoverPair> covers) {
  if (n < 1 || n > kMaxElements) {
    throw ValidationError("structure size must be in [1, " + std::to_string(kMaxElements) +
                          "], got " + std::to_string(n));
  }
  std::vector<ElementSet> succ(n);
  std::vector<int> indegree(n, 0);
  for (const auto& [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw ValidationError("cover pair " + pair_text(a, b) + " out of range");
    }
    if (a == b) throw ValidationError("cover pair " + pair_text(a, b) + " is a self loop");
    if (succ[a].contains(b)) throw ValidationError("duplicate cover pair " + pair_text(a, b));
    succ[a].insert(b);
    ++indegree[b];
  }

  // Kahn's algorithm, always taking the smallest ready index.
  std::vector<int> order;
  order.reserve(n);
  ElementSet ready;
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.insert(v);
  }
  while (!ready.empty()) {
    const int v = ready.lowest();
    ready.erase(v);
    order.push_back(v);
    for (int w : succ[v]) {
      if (--indegree[w] == 0) ready.insert(w);
    }
  }
  if (static_cast<int>(order.size()) != n) throw ValidationError("cover relation has a cycle");

  std::vector<ElementSet> strict_up(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (int c : succ[*it]) strict_up[*it] |= ElementSet::single(c) | strict_up[c];
  }
  for (int a = 0; a < n; ++a) {
    for (int b : succ[a]) {
      for (int c : succ[a]) {
        if (c != b && strict_up[c].contains(b)) {
          throw ValidationError("cover pair " + pair_text(a, b) + " is implied by transitivity");
        }
      }
    }
  }

  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<ElementSet> down(n);
  for (int old = 0; old < n; ++old) {
    const int x = position[old];
    down[x].insert(x);
    for (int above : strict_up[old]) down[position[above]].insert(x);
  }
  Structure s = from_down_sets(std::move(down));
  s.source_index_ = order;
  return s;
}

Structure Structure::from_down_sets(std::vector<ElementSet> down_sets) {
  const int n = static_cast<int>(down_sets.size());
  if (n > kMaxElements) throw ValidationError("structure has more than 64 elements");
  for (int x = 0; x < n; ++x) {
    const ElementSet d = down_sets[x];
    if (!d.contains(x) || !d.is_subset_of(ElementSet::first(x + 1))) {
      throw ValidationError("down-set of element " + std::to_string(x) +
                            " is not compatible with a linear extension");
    }
    for (int y : d) {
      if (!down_sets[y].is_subset_of(d)) {
        throw ValidationError("down-sets are not transitive at element " + std::to_string(x));
      }
    }
  }

  Structure s;
  s.down_ = std::move(down_sets);
  s.up_.assign(n, ElementSet{});
  s.lower_covers_.assign(n, ElementSet{});
  s.upper_covers_.assign(n, ElementSet{});
  s.source_index_.resize(n);
  std::iota(s.source_index_.begin(), s.source_index_.end(), 0);
  for (int x = 0; x < n; ++x) {
    for (int y : s.down_[x]) s.up_[y].insert(x);
  }
  for (int x = 0; x < n; ++x) {
    const ElementSet strict = s.down_[x] - ElementSet::single(x);
    ElementSet shadowed;
    for (int z : strict) shadowed |= s.down_[z] - ElementSet::single(z);
    s.lower_covers_[x] = strict - shadowed;
    for (int y : s.lower_covers_[x]) s.upper_covers_[y].insert(x);
  }
  return s;
}

std::vector<CoverPair> Structure::covers() const {
  std::vector<CoverPair> out;
  for (int b = 0; b < size(); ++b) {
    for (int a : lower_covers_[b]) out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Structure::cover_count() const {
  int count = 0;
  for (ElementSet c : lower_covers_) count += c.size();
  return count;
}

ElementSet Structure::minimal_elements(ElementSet subset) const {
  ElementSet out;
  for (int x : subset) {
    if ((down_[x] & subset) == ElementSet::single(x)) out.insert(x);
  }
  return out;
}

ElementSet Structure::maximal_elements(ElementSet subset) const {
  ElementSet out;
  for (int x : subset) {
    if ((up_[x] & subset) == ElementSet::single(x)) out.insert(x);
  }
  return out;
}

bool Structure::is_chain(ElementSet subset) const {
  for (int x : subset) {
    if (!subset.is_subset_of(comparable_set(x))) return false;
  }
  return true;
}

std::optional<int> Structure::try_meet(int a, int b) const {
  const ElementSet common = down_[a] & down_[b];
  if (common.empty()) return std::nullopt;
  // In a linear extension the greatest element of a set is its highest index.
  const int top = common.highest();
  if (!common.is_subset_of(down_[top])) return std::nullopt;
  return top;
}

bool Structure::is_meet_semilattice() const {
  if (size() == 0) return false;
  for (int a = 0; a < size(); ++a) {
    for (int b = a + 1; b < size(); ++b) {
      if (!try_meet(a, b)) return false;
    }
  }
  return true;
}

std::vector<int> Structure::heights() const {
  std::vector<int> h(size(), 0);
  for (int x = 0; x < size(); ++x) {
    for (int y : lower_covers_[x]) h[x] = std::max(h[x], h[y] + 1);
  }
  return h;
}

Structure Structure::induced(ElementSet subset) const {
  std::vector<int> position(size(), -1);
  std::vector<int> members(subset.begin(), subset.end());
  for (int i = 0; i < static_cast<int>(members.size()); ++i) position[members[i]] = i;
  std::vector<ElementSet> down(members.size());
  for (int i = 0; i < static_cast<int>(members.size()); ++i) {
    for (int y : down_[members[i]] & subset) down[i].insert(position[y]);
  }
  return from_down_sets(std::move(down));
}

bool is_meet_semilattice(int n, std::span<const CoverPair> covers) {
  return Structure::from_covers(n, covers).is_meet_semilattice();
}

int meet(const Structure& s, int a, int b) {
  if (auto m = s.try_meet(a, b)) return *m;
  throw PreconditionError("elements " + std::to_string(a) + " and " + std::to_string(b) +
                          " have no greatest lower bound");
}

ElementSet covers_below(const Structure& s, int x) { return s.lower_covers(x); }

ElementSet meet_closure(const Structure& s, ElementSet subset) {
  ElementSet closure = subset;
  ElementSet frontier = subset;
  while (!frontier.empty()) {
    ElementSet added;
    for (int a : frontier) {
      for (int b : closure) {
        const int m = meet(s, a, b);
        if (!closure.contains(m)) added.insert(m);
      }
    }
    closure |= added;
    frontier = added;
  }
  return closure;
}

int width(const Structure& s, ElementSet subset) { return max_antichain(s, subset, 0, 0); }

ElementSet double_chain_residual(const Structure& s, int x) {
  const ElementSet covers = s.lower_covers(x);
  if (covers.empty()) return {};
  return meet_closure(s, covers) - covers;
}

bool generates_double_chain(const Structure& s, int x) {
  return width(s, double_chain_residual(s, x)) <= 2;
}

}  // namespace lcmlat
