#include <gtest/gtest.h>

#include <set>

#include "lcmlat/construct.hpp"
#include "lcmlat/enumerate.hpp"
#include "lcmlat/errors.hpp"

namespace lcmlat {
namespace {

TEST(Enumerate, CountsUpToNine) {
  const std::size_t expected[] = {1, 1, 2, 5, 15, 53, 222, 1078, 5994};
  for (int n = 1; n <= 9; ++n) {
    EXPECT_EQ(enumerate_canonical_forms(n).size(), expected[n - 1]) << "n=" << n;
  }
}

TEST(Enumerate, ResultDoesNotDependOnThreads) {
  EXPECT_EQ(enumerate_canonical_forms(8, {1}), enumerate_canonical_forms(8, {3}));
}

TEST(Enumerate, OutputIsSortedAndDistinct) {
  const auto forms = enumerate_canonical_forms(7);
  EXPECT_TRUE(std::is_sorted(forms.begin(), forms.end()));
  EXPECT_EQ(std::set<CanonicalForm>(forms.begin(), forms.end()).size(), forms.size());
}

TEST(Enumerate, EveryStructureIsAMeetSemilattice) {
  for (const Structure& s : enumerate_meet_semilattices(7)) {
    EXPECT_TRUE(s.is_meet_semilattice());
    EXPECT_EQ(s.minimal_elements(s.all()).size(), 1);
  }
}

// Admissible down-sets are exactly those whose extension is a meet
// semilattice.
TEST(Enumerate, AdmissibleDownSetsMatchBruteForce) {
  for (const Structure& s : enumerate_meet_semilattices(6)) {
    const auto admissible = admissible_down_sets(s);
    const std::set<ElementSet> chosen(admissible.begin(), admissible.end());
    const int n = s.size();
    for (ElementSet::Word bits = 1; bits < (ElementSet::Word{1} << n); ++bits) {
      const ElementSet down(bits);
      bool closed = true;
      for (int x : down) closed = closed && s.down_set(x).is_subset_of(down);
      if (!closed) continue;
      std::vector<ElementSet> sets;
      for (int x = 0; x < n; ++x) sets.push_back(s.down_set(x));
      sets.push_back(down | ElementSet::single(n));
      const bool semilattice = Structure::from_down_sets(sets).is_meet_semilattice();
      EXPECT_EQ(chosen.count(down) == 1, semilattice);
    }
  }
}

TEST(Enumerate, SpecialClassesBySize) {
  EXPECT_TRUE(filter_special(enumerate_meet_semilattices(7)).empty());
  const auto eight = filter_special(enumerate_meet_semilattices(8));
  ASSERT_EQ(eight.size(), 1U);
  EXPECT_EQ(eight[0].canonical_form, canonical_form(boolean_cube()));
}

TEST(Enumerate, NineElementSpecialClassesAreTheFixtures) {
  const auto special = filter_special(enumerate_meet_semilattices(9));
  ASSERT_EQ(special.size(), 13U);
  std::set<NineClass> labels;
  for (const auto& r : special) {
    EXPECT_EQ(r.n, 9);
    ASSERT_TRUE(r.witness_element.has_value());
    labels.insert(classify9(r.canonical_form.to_structure()));
  }
  EXPECT_EQ(labels.size(), 13U);
  EXPECT_EQ(labels.count(NineClass::Other), 0U);
}

TEST(Enumerate, CensusVerdicts) {
  const CensusRecord r = census(boolean_cube());
  EXPECT_TRUE(r.special);
  std::vector<CoverPair> covers{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  const CensusRecord square = census(Structure::from_covers(4, covers));
  EXPECT_FALSE(square.special);
  EXPECT_FALSE(square.witness_element.has_value());
}

TEST(Enumerate, RejectsBadSizes) {
  EXPECT_THROW(enumerate_canonical_forms(0), PreconditionError);
  EXPECT_THROW(enumerate_canonical_forms(65), PreconditionError);
}

}  // namespace
}  // namespace lcmlat
