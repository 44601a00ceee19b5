#include <gtest/gtest.h>

#include "lcmlat/canonical.hpp"
#include "lcmlat/construct.hpp"
#include "lcmlat/errors.hpp"
#include "lcmlat/known_sets.hpp"
#include "lcmlat/lcm.hpp"

namespace lcmlat {
namespace {

void expect_singular_class(const GcdSet& s, NineClass c) {
  EXPECT_EQ(s.size(), 9);
  EXPECT_EQ(GcdSet::closure(s.elements()).elements(), s.elements());
  EXPECT_TRUE(is_singular(s).singular) << set_to_text(s);
  EXPECT_EQ(classify9(s), c) << set_to_text(s) << " is " << label(classify9(s));
}

TEST(Classes, LabelsRoundTrip) {
  for (NineClass c : kNineClasses) {
    EXPECT_EQ(parse_nine_class(label(c)), c);
    EXPECT_EQ(parse_nine_class(label(c).substr(2)), c);
  }
  EXPECT_EQ(parse_nine_class("k"), NineClass::K);
  EXPECT_FALSE(parse_nine_class("N").has_value());
  EXPECT_FALSE(parse_nine_class("9_").has_value());
  EXPECT_EQ(label(NineClass::Other), "OTHER");
  EXPECT_THROW(nine_fixture(NineClass::Other), PreconditionError);
}

TEST(Classes, FixturesAreNineElementSemilattices) {
  for (NineClass c : kNineClasses) {
    const Structure& s = nine_fixture(c);
    EXPECT_EQ(s.size(), 9);
    EXPECT_TRUE(s.is_meet_semilattice()) << label(c);
    EXPECT_EQ(classify9(s), c);
  }
  EXPECT_EQ(classify9(boolean_cube()), NineClass::Other);
}

TEST(Classes, KnownNineElementSets) {
  expect_singular_class(known::s9_class_i(), NineClass::I);
  expect_singular_class(known::s9_class_j(), NineClass::J);
  EXPECT_THROW(classify9(known::s8()), PreconditionError);
}

TEST(Construct, MaximalInsertions) {
  const GcdSet s8 = known::s8();
  expect_singular_class(insert_maximal(s8, 13, MaximalAnchor::Bottom), NineClass::A);
  expect_singular_class(insert_maximal(s8, 13, MaximalAnchor::Atom), NineClass::B);
  expect_singular_class(insert_maximal(s8, 13, MaximalAnchor::Coatom), NineClass::C);
  expect_singular_class(insert_maximal(s8, 13, MaximalAnchor::Top), NineClass::D);
  EXPECT_EQ(insert_maximal(s8, 13, MaximalAnchor::Top)[8], 13 * 39270);
}

TEST(Construct, MaximalInsertionNeedsCoprimeMultiplier) {
  const GcdSet s8 = known::s8();
  EXPECT_THROW(insert_maximal(s8, 11, MaximalAnchor::Top), PreconditionError);
  EXPECT_THROW(insert_maximal(s8, 1, MaximalAnchor::Top), PreconditionError);
}

TEST(Construct, MinimumInsertion) {
  const GcdSet s9 = insert_minimum(known::s8(), 13);
  expect_singular_class(s9, NineClass::E);
  EXPECT_EQ(s9[0], 1);
  EXPECT_EQ(s9[1], 13);
  // Psi at the top is Psi_S8(top) / a, here zero; a need not be coprime.
  expect_singular_class(insert_minimum(known::s8(), 2), NineClass::E);
}

TEST(Construct, BetweenInsertions) {
  const GcdSet s8 = known::s8();
  const GcdSet f = insert_between(s8, BetweenVariant::F);
  const GcdSet g = insert_between(s8, BetweenVariant::G);
  const GcdSet h = insert_between(s8, BetweenVariant::H);
  expect_singular_class(f, NineClass::F);
  expect_singular_class(g, NineClass::G);
  expect_singular_class(h, NineClass::H);
  // 66 = 11 lcm(2, 3) is the first coatom.
  EXPECT_TRUE(f.index_of(11).has_value());
  EXPECT_TRUE(g.index_of(22).has_value());
  EXPECT_TRUE(h.index_of(6).has_value());
}

TEST(Construct, RejectsNonCubeInput) {
  EXPECT_THROW(insert_between(known::s9_class_i(), BetweenVariant::F), PreconditionError);
  EXPECT_THROW(insert_minimum(GcdSet::build({1, 2, 3, 5, 6, 10, 15, 30}), 7), PreconditionError);
}

TEST(Construct, ScaledBaseStillWorks) {
  const GcdSet scaled = known::s8().scaled(7);
  EXPECT_THROW(insert_between(scaled, BetweenVariant::F), PreconditionError);
  expect_singular_class(insert_maximal(scaled, 13, MaximalAnchor::Bottom), NineClass::A);
}

TEST(Realization, SamplesMatchTheTarget) {
  Rng rng(31);
  for (NineClass c : kNineClasses) {
    for (int i = 0; i < 10; ++i) {
      const GcdSet s = sample_realization(nine_fixture(c), rng);
      EXPECT_EQ(s[0], 1);
      EXPECT_EQ(classify9(s), c);
    }
  }
  EXPECT_THROW(sample_realization(Structure::from_covers(3, std::vector<CoverPair>{{0, 2}, {1, 2}}), rng),
               PreconditionError);
}

TEST(Realization, SignsOfTheImpossibleClasses) {
  Rng rng(32);
  for (int i = 0; i < 100; ++i) {
    EXPECT_LT(check_9K_sign(sample_realization(nine_fixture(NineClass::K), rng)), 0);
    EXPECT_GT(check_9LM_sign(sample_realization(nine_fixture(NineClass::L), rng)), 0);
    EXPECT_GT(check_9LM_sign(sample_realization(nine_fixture(NineClass::M), rng)), 0);
  }
  EXPECT_THROW(check_9K_sign(known::s9_class_i()), PreconditionError);
  EXPECT_THROW(check_9LM_sign(known::s9_class_j()), PreconditionError);
}

TEST(Cubes, KnownSets) {
  EXPECT_TRUE(find_cube_subsemilattices(known::s13()).empty());
  EXPECT_TRUE(find_cube_subsemilattices(known::s13(), CubeNotion::MeetClosed).empty());

  const auto c14 = find_cube_subsemilattices(known::s14());
  ASSERT_EQ(c14.size(), 2U);
  EXPECT_EQ(c14[0].members.lowest(), c14[1].members.lowest());
  EXPECT_EQ(c14[0].members.highest(), c14[1].members.highest());
  EXPECT_EQ(find_cube_subsemilattices(known::s14(), CubeNotion::MeetClosed).size(), 2U);

  const auto c8 = find_cube_subsemilattices(known::s8());
  ASSERT_EQ(c8.size(), 1U);
  EXPECT_EQ(c8[0].values, known::s8().elements());
}

// S16 is ordered like the Boolean lattice B_4; its cube facets are the four
// lower and four upper 3-faces.
TEST(Cubes, S16IsTheFourCube) {
  const GcdSet s16 = known::s16();
  std::vector<CoverPair> covers;
  for (int a = 0; a < 16; ++a) {
    for (int bit = 0; bit < 4; ++bit) {
      if (!(a & (1 << bit))) covers.emplace_back(a, a | (1 << bit));
    }
  }
  EXPECT_TRUE(is_isomorphic(s16.order(), Structure::from_covers(16, covers)));
  const auto cubes = find_cube_subsemilattices(s16);
  EXPECT_EQ(cubes.size(), 8U);
  for (const auto& w : cubes) {
    EXPECT_TRUE(w.members.contains(0) != w.members.contains(15));
  }
  EXPECT_EQ(find_cube_subsemilattices(s16, CubeNotion::MeetClosed).size(), 30U);
}

TEST(Cubes, SizeLimit) {
  std::vector<Integer> many;
  for (int i = 0; i < 21; ++i) many.push_back(power(2, i));
  EXPECT_THROW(find_cube_subsemilattices(GcdSet::build(many)), PreconditionError);
}

}  // namespace
}  // namespace lcmlat
