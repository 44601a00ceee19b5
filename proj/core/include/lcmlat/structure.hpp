#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lcmlat/element_set.hpp"

namespace lcmlat {

/// (lower, upper): `upper` covers `lower`.
using CoverPair = std::pair<int, int>;

/// A finite partial order given by its cover relation.
///
/// Element indices always form a linear extension of the order, so `a < b`
/// as indices whenever `a` lies strictly below `b`. The order itself is
/// stored as one inclusive down-set bitmask per element. Instances are
/// immutable once built.
class Structure {
 public:
  Structure() = default;

  /// Validates the relation (indices in range, no self loops or duplicates,
  /// acyclic, transitively reduced). Elements are relabeled into a stable
  /// topological order when the input indices are not a linear extension;
  /// `source_index()` maps the new indices back.
  static Structure from_covers(int n, std::span<const CoverPair> covers);

  /// Builds from inclusive down-sets that already form a partial order whose
  /// index order is a linear extension. Throws ValidationError otherwise.
  static Structure from_down_sets(std::vector<ElementSet> down_sets);

  int size() const { return static_cast<int>(down_.size()); }
  ElementSet all() const { return ElementSet::first(size()); }

  bool leq(int a, int b) const { return down_[b].contains(a); }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

  /// Inclusive down-set and up-set.
  ElementSet down_set(int x) const { return down_[x]; }
  ElementSet up_set(int x) const { return up_[x]; }
  ElementSet lower_covers(int x) const { return lower_covers_[x]; }
  ElementSet upper_covers(int x) const { return upper_covers_[x]; }
  /// Everything comparable to x, x included.
  ElementSet comparable_set(int x) const { return down_[x] | up_[x]; }

  /// Cover pairs sorted by (lower, upper).
  std::vector<CoverPair> covers() const;
  int cover_count() const;
  const std::vector<int>& source_index() const { return source_index_; }

  ElementSet minimal_elements(ElementSet subset) const;
  ElementSet maximal_elements(ElementSet subset) const;
  bool is_chain(ElementSet subset) const;

  /// Greatest lower bound of a and b, if one exists.
  std::optional<int> try_meet(int a, int b) const;
  bool is_meet_semilattice() const;

  /// Length of the longest chain ending at each element (minimal elements: 0).
  std::vector<int> heights() const;

  /// The induced subposet on `subset`, indices renumbered in increasing order.
  Structure induced(ElementSet subset) const;

  bool operator==(const Structure& other) const { return down_ == other.down_; }

 private:
  std::vector<ElementSet> down_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> lower_covers_;
  std::vector<ElementSet> upper_covers_;
  std::vector<int> source_index_;
};

/// Validates `covers` as a structure description and reports whether every
/// pair of elements has a greatest lower bound.
bool is_meet_semilattice(int n, std::span<const CoverPair> covers);

/// Greatest lower bound; throws PreconditionError when a and b have none.
int meet(const Structure& s, int a, int b);

/// C(x): the elements covered by x.
ElementSet covers_below(const Structure& s, int x);

/// Smallest meet-closed superset of `subset` (meetcl).
ElementSet meet_closure(const Structure& s, ElementSet subset);

/// Size of a maximum antichain of the induced subposet on `subset`.
int width(const Structure& s, ElementSet subset);

/// meetcl(C(x)) \ C(x).
ElementSet double_chain_residual(const Structure& s, int x);

/// True iff meetcl(C(x)) \ C(x) splits into two disjoint chains, tested as
/// width <= 2 (Dilworth).
bool generates_double_chain(const Structure& s, int x);

}  // namespace lcmlat
