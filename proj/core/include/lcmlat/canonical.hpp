#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcmlat/structure.hpp"

namespace lcmlat {

/// Order relation of a structure under its canonical relabeling, packed row
/// by row (row p holds "q below p" for every q < p). Equal forms mean
/// order-isomorphic structures.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  CanonicalForm(int n, std::vector<std::uint64_t> words) : n_(n), words_(std::move(words)) {}

  int size() const { return n_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  /// The canonical representative; its indices follow the canonical labeling.
  Structure to_structure() const;
  std::string to_hex() const;

  auto operator<=>(const CanonicalForm&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& form) const noexcept;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// order[p] is the element placed at canonical position p.
  std::vector<int> order;
};

CanonicalLabeling canonical_labeling(const Structure& s);
CanonicalForm canonical_form(const Structure& s);
bool is_isomorphic(const Structure& a, const Structure& b);

/// map[i] is the element of b that element i of a corresponds to.
std::optional<std::vector<int>> find_isomorphism(const Structure& a, const Structure& b);

}  // namespace lcmlat
