#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "lcmlat/gcd_set.hpp"
#include "lcmlat/random.hpp"
#include "lcmlat/structure.hpp"

namespace lcmlat {

/// The thirteen nine-element meet semilattices in which some element does not
/// generate a double-chain set, plus Other for everything else.
enum class NineClass { A, B, C, D, E, F, G, H, I, J, K, L, M, Other };

inline constexpr std::array<NineClass, 13> kNineClasses = {
    NineClass::A, NineClass::B, NineClass::C, NineClass::D, NineClass::E,
    NineClass::F, NineClass::G, NineClass::H, NineClass::I, NineClass::J,
    NineClass::K, NineClass::L, NineClass::M};

/// "9_A" ... "9_M", or "OTHER".
std::string_view label(NineClass c);
/// Accepts "9_A" or "A" (case-insensitive letter).
std::optional<NineClass> parse_nine_class(std::string_view text);

/// Embedded cover-list fixture of a class; Other has none.
const Structure& nine_fixture(NineClass c);

NineClass classify9(const Structure& s);
/// Throws PreconditionError unless the set has nine elements.
NineClass classify9(const GcdSet& s);

/// Where the new maximal element goes: above the bottom, the largest atom,
/// the largest coatom, or the top of an eight-element cube set.
enum class MaximalAnchor { Bottom, Atom, Coatom, Top };

/// S8 ∪ {a * anchor}. Requires a cube-ordered S8 with Psi(top) = 0 and an
/// integer a > 1 coprime to every element. Gives 9_A / 9_B / 9_C / 9_D.
GcdSet insert_maximal(const GcdSet& s8, const Integer& a, MaximalAnchor anchor);

/// {x_1} ∪ {a * x_i}: a new bottom under a scaled copy of S8 (class 9_E).
GcdSet insert_minimum(const GcdSet& s8, const Integer& a);

enum class BetweenVariant { F, G, H };

/// Uses a coatom c = m * lcm(u, v) over atoms u < v with m > 1 coprime to
/// every element not above c, trying the coatoms in ascending order. F adds m
/// as a new atom under c, G adds m * u between u and c, H adds lcm(u, v)
/// between {u, v} and c. Throws PreconditionError when no coatom qualifies.
GcdSet insert_between(const GcdSet& s8, BetweenVariant variant);

/// Psi at the top of a realization of 9_K with bottom 1.
Rational check_9K_sign(const GcdSet& s);
/// Psi at the top of a realization of 9_L or 9_M with bottom 1.
Rational check_9LM_sign(const GcdSet& s);

/// Random GCD-closed set whose divisibility order is isomorphic to `s` (a meet
/// semilattice) and whose bottom is 1: every non-bottom element gets a factor
/// built from fresh primes, and an element is the product of the factors at
/// or below it.
GcdSet sample_realization(const Structure& s, Rng& rng);

/// Eight elements of a set that are closed under gcd and ordered like B_3.
struct CubeWitness {
  ElementSet members;
  std::vector<Integer> values;
};

inline constexpr int kCubeSearchLimit = 20;

enum class CubeNotion {
  /// Every cover of the cube is also a cover in the set: the cube is drawn
  /// inside the Hasse diagram.
  CoverPreserving,
  /// Any gcd-closed eight-element subset ordered like B_3.
  MeetClosed,
};

/// All cube subsemilattices, ordered by member set. Throws PreconditionError
/// above kCubeSearchLimit elements.
std::vector<CubeWitness> find_cube_subsemilattices(const GcdSet& s,
                                                   CubeNotion notion = CubeNotion::CoverPreserving);

/// The Boolean lattice B_3 as a structure.
const Structure& boolean_cube();

}  // namespace lcmlat
