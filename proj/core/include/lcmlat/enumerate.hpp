#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lcmlat/canonical.hpp"
#include "lcmlat/structure.hpp"

namespace lcmlat {

/// Sizes above this are allowed but not tuned; enumeration warns.
inline constexpr int kEnumerationSoftCap = 10;

struct EnumerateOptions {
  /// Worker threads; 0 means default_thread_count().
  int threads = 0;
};

/// LCMLAT_THREADS if set to a positive integer, else the hardware concurrency.
int default_thread_count();

/// One canonical representative per isomorphism class of n-element meet
/// semilattices, sorted by canonical form. The output does not depend on
/// the number of threads.
std::vector<Structure> enumerate_meet_semilattices(int n, const EnumerateOptions& options = {});

/// Same as enumerate_meet_semilattices, returning the canonical forms.
std::vector<CanonicalForm> enumerate_canonical_forms(int n, const EnumerateOptions& options = {});

/// Meet semilattices on size()+1 elements obtained by adding one new maximal
/// element above `down` (a nonempty down-set such that every existing y has a
/// greatest element in down ∩ ↓y). Not deduplicated.
std::vector<Structure> maximal_extensions(const Structure& s);

/// Nonempty down-sets admissible as the strict down-set of a new maximal element.
std::vector<ElementSet> admissible_down_sets(const Structure& s);

struct CensusRecord {
  CanonicalForm canonical_form;
  int n = 0;
  /// Some element fails to generate a double-chain set.
  bool special = false;
  /// Smallest such element, as an index of the canonical representative.
  std::optional<int> witness_element;
};

CensusRecord census(const Structure& s);

/// Records (special = true only) of the structures containing an element with
/// at least three lower covers whose residual meetcl(C(e)) \ C(e) has width
/// at least three. Output sorted by canonical form.
std::vector<CensusRecord> filter_special(std::span<const Structure> structures);

}  // namespace lcmlat
