#include "lcmlat/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <tuple>

namespace lcmlat {

namespace {

// Colour refinement on the Hasse diagram. Colours are ranks of sorted keys,
// so they do not depend on the input labeling, and the height always leads
// the initial key: sorting by colour yields a linear extension.
std::vector<int> refined_colours(const Structure& s) {
  const int n = s.size();
  const std::vector<int> height = s.heights();
  std::vector<std::vector<int>> keys(n);
  for (int x = 0; x < n; ++x) {
    keys[x] = {height[x], s.down_set(x).size(), s.up_set(x).size(), s.lower_covers(x).size(),
               s.upper_covers(x).size()};
  }

  std::vector<int> colour(n);
  int classes = 0;
  for (;;) {
    std::vector<std::vector<int>> distinct = keys;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int x = 0; x < n; ++x) {
      colour[x] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), keys[x]) -
                                   distinct.begin());
    }
    const int now = static_cast<int>(distinct.size());
    if (now == classes || now == n) break;
    classes = now;
    for (int x = 0; x < n; ++x) {
      std::vector<int> below;
      std::vector<int> above;
      for (int y : s.lower_covers(x)) below.push_back(colour[y]);
      for (int y : s.upper_covers(x)) above.push_back(colour[y]);
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      keys[x] = {colour[x], static_cast<int>(below.size())};
      keys[x].insert(keys[x].end(), below.begin(), below.end());
      keys[x].push_back(-1);
      keys[x].insert(keys[x].end(), above.begin(), above.end());
    }
  }
  return colour;
}

class LabelingSearch {
 public:
  explicit LabelingSearch(const Structure& s) : n_(s.size()) {
    const std::vector<int> colour = refined_colours(s);
    std::vector<int> by_colour(n_);
    for (int x = 0; x < n_; ++x) by_colour[x] = x;
    std::stable_sort(by_colour.begin(), by_colour.end(),
                     [&](int a, int b) { return colour[a] < colour[b]; });
    const int colours = n_ == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
    cells_.assign(colours, ElementSet{});
    cell_at_.resize(n_);
    for (int p = 0; p < n_; ++p) {
      cell_at_[p] = colour[by_colour[p]];
      cells_[colour[by_colour[p]]].insert(by_colour[p]);
    }
    strict_down_.resize(n_);
    strict_up_.resize(n_);
    for (int x = 0; x < n_; ++x) {
      strict_down_[x] = s.down_set(x) - ElementSet::single(x);
      strict_up_[x] = s.up_set(x) - ElementSet::single(x);
    }
    order_.resize(n_);
    rows_.resize(n_);
  }

  CanonicalLabeling run() {
    place(0);
    std::vector<std::uint64_t> words((static_cast<std::size_t>(n_) * (n_ - 1) / 2 + 63) / 64, 0);
    std::size_t bit = 0;
    for (int p = 0; p < n_; ++p) {
      for (int q = 0; q < p; ++q, ++bit) {
        if ((best_rows_[p] >> q) & 1U) words[bit / 64] |= std::uint64_t{1} << (bit % 64);
      }
    }
    return {CanonicalForm(n_, std::move(words)), best_order_};
  }

 private:
  // Lexicographic comparison of rows [0, p] against the incumbent.
  int compare_prefix(int p) const {
    for (int q = 0; q <= p; ++q) {
      if (rows_[q] != best_rows_[q]) return rows_[q] < best_rows_[q] ? -1 : 1;
    }
    return 0;
  }

  void place(int p) {
    if (p == n_) {
      if (!have_best_ || compare_prefix(n_ - 1) < 0) {
        best_rows_ = rows_;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    ElementSet tried;
    for (int v : cells_[cell_at_[p]] - used_) {
      // Interchangeable twins give identical subtrees; one of them is enough.
      bool twin = false;
      for (int u : tried) {
        if (strict_down_[u] == strict_down_[v] && strict_up_[u] == strict_up_[v]) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      tried.insert(v);

      std::uint64_t row = 0;
      for (int q = 0; q < p; ++q) {
        if (strict_down_[v].contains(order_[q])) row |= std::uint64_t{1} << q;
      }
      rows_[p] = row;
      order_[p] = v;
      if (have_best_ && compare_prefix(p) > 0) continue;
      used_.insert(v);
      place(p + 1);
      used_.erase(v);
    }
  }

  int n_;
  std::vector<ElementSet> cells_;
  std::vector<int> cell_at_;
  std::vector<ElementSet> strict_down_;
  std::vector<ElementSet> strict_up_;
  std::vector<int> order_;
  std::vector<std::uint64_t> rows_;
  std::vector<int> best_order_;
  std::vector<std::uint64_t> best_rows_;
  bool have_best_ = false;
  ElementSet used_;
};

}  // namespace

Structure CanonicalForm::to_structure() const {
  std::vector<ElementSet> down(n_);
  std::size_t bit = 0;
  for (int p = 0; p < n_; ++p) {
    down[p].insert(p);
    for (int q = 0; q < p; ++q, ++bit) {
      if ((words_[bit / 64] >> (bit % 64)) & 1U) down[p].insert(q);
    }
  }
  return Structure::from_down_sets(std::move(down));
}

std::string CanonicalForm::to_hex() const {
  std::string out = std::to_string(n_) + ":";
  char buf[17];
  for (std::uint64_t w : words_) {
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(w));
    out += buf;
  }
  return out;
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& form) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(form.size());
  for (std::uint64_t w : form.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

CanonicalLabeling canonical_labeling(const Structure& s) { return LabelingSearch(s).run(); }

CanonicalForm canonical_form(const Structure& s) { return canonical_labeling(s).form; }

bool is_isomorphic(const Structure& a, const Structure& b) {
  if (a.size() != b.size() || a.cover_count() != b.cover_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::optional<std::vector<int>> find_isomorphism(const Structure& a, const Structure& b) {
  if (a.size() != b.size()) return std::nullopt;
  const CanonicalLabeling la = canonical_labeling(a);
  const CanonicalLabeling lb = canonical_labeling(b);
  if (la.form != lb.form) return std::nullopt;
  std::vector<int> map(a.size());
  for (int p = 0; p < a.size(); ++p) map[la.order[p]] = lb.order[p];
  return map;
}

}  // namespace lcmlat
