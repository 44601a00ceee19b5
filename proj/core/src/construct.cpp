#include "lcmlat/construct.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>

#include "lcmlat/canonical.hpp"
#include "lcmlat/errors.hpp"
#include "lcmlat/lcm.hpp"

namespace lcmlat {

namespace {

// Cube on 0..7: bottom 0, atoms 1 2 3, coatoms 4 (over 1,2), 5 (over 1,3),
// 6 (over 2,3), top 7. The ninth element of each class is index 8.
std::vector<CoverPair> cube_covers() {
  return {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {1, 5},
          {3, 5}, {2, 6}, {3, 6}, {4, 7}, {5, 7}, {6, 7}};
}

std::vector<CoverPair> with(std::vector<CoverPair> covers, std::vector<CoverPair> add,
                            std::vector<CoverPair> remove = {}) {
  for (const auto& r : remove) covers.erase(std::find(covers.begin(), covers.end(), r));
  covers.insert(covers.end(), add.begin(), add.end());
  return covers;
}

std::vector<CoverPair> fixture_covers(NineClass c) {
  switch (c) {
    case NineClass::A:  // new maximal element over the bottom
      return with(cube_covers(), {{0, 8}});
    case NineClass::B:  // new maximal element over an atom
      return with(cube_covers(), {{3, 8}});
    case NineClass::C:  // new maximal element over a coatom
      return with(cube_covers(), {{6, 8}});
    case NineClass::D:  // new top
      return with(cube_covers(), {{7, 8}});
    case NineClass::E:  // new bottom
      return with(cube_covers(), {{8, 0}});
    case NineClass::F:  // fourth atom under one coatom
      return with(cube_covers(), {{0, 8}, {8, 4}});
    case NineClass::G:  // between an atom and a coatom
      return with(cube_covers(), {{1, 8}, {8, 4}}, {{1, 4}});
    case NineClass::H:  // between a coatom and the top
      return with(cube_covers(), {{4, 8}, {8, 7}}, {{4, 7}});
    case NineClass::I:  // over an atom, under the top
      return with(cube_covers(), {{1, 8}, {8, 7}});
    case NineClass::J:  // over the bottom, under the top
      return with(cube_covers(), {{0, 8}, {8, 7}});
    case NineClass::K:  // between the bottom and an atom
      return with(cube_covers(), {{0, 8}, {8, 3}}, {{0, 3}});
    case NineClass::L:
      // atoms 1 2 3; 4 over 1; 5 over 1,2; 6 over 2,3; 7 over 3; top 8.
      return {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 5}, {2, 6},
              {3, 6}, {3, 7}, {4, 8}, {5, 8}, {6, 8}, {7, 8}};
    case NineClass::M:
      // atoms 1 2 3; 4 over 1; 5 over 2; 6 over 1,2,3; 7 over 3; top 8.
      return {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {1, 6}, {2, 6},
              {3, 6}, {3, 7}, {4, 8}, {5, 8}, {6, 8}, {7, 8}};
    case NineClass::Other:
      break;
  }
  throw PreconditionError("class OTHER has no fixture");
}

struct FixtureTable {
  std::array<Structure, 13> structures;
  std::array<CanonicalForm, 13> forms;
};

const FixtureTable& fixtures() {
  static const FixtureTable table = [] {
    FixtureTable t;
    for (std::size_t i = 0; i < kNineClasses.size(); ++i) {
      const auto covers = fixture_covers(kNineClasses[i]);
      t.structures[i] = Structure::from_covers(9, covers);
      t.forms[i] = canonical_form(t.structures[i]);
    }
    return t;
  }();
  return table;
}

// Shared preconditions of the S8-based constructions.
void require_singular_cube(const GcdSet& s8) {
  if (s8.size() != 8) throw PreconditionError("construction needs an eight-element set");
  if (!is_isomorphic(s8.order(), boolean_cube())) {
    throw PreconditionError("construction needs a set ordered like the cube");
  }
  if (psi_at(s8, 7) != 0) throw PreconditionError("construction needs Psi(top) = 0");
}

Rational top_psi_of_class(const GcdSet& s, std::initializer_list<NineClass> allowed,
                          const char* what) {
  if (s.size() != 9 || s[0] != 1) {
    throw PreconditionError(std::string(what) + " needs a nine-element set with bottom 1");
  }
  const NineClass c = classify9(s.order());
  if (std::find(allowed.begin(), allowed.end(), c) == allowed.end()) {
    throw PreconditionError(std::string(what) + ": structure mismatch (got " +
                            std::string(label(c)) + ")");
  }
  return psi_at(s, 8);
}

}  // namespace

std::string_view label(NineClass c) {
  static constexpr std::array<std::string_view, 14> names = {
      "9_A", "9_B", "9_C", "9_D", "9_E", "9_F", "9_G",
      "9_H", "9_I", "9_J", "9_K", "9_L", "9_M", "OTHER"};
  return names[static_cast<std::size_t>(c)];
}

std::optional<NineClass> parse_nine_class(std::string_view text) {
  if (text.size() == 3 && text.substr(0, 2) == "9_") text.remove_prefix(2);
  if (text.size() != 1) return std::nullopt;
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (letter < 'A' || letter > 'M') return std::nullopt;
  return static_cast<NineClass>(letter - 'A');
}

const Structure& nine_fixture(NineClass c) {
  if (c == NineClass::Other) throw PreconditionError("class OTHER has no fixture");
  return fixtures().structures[static_cast<std::size_t>(c)];
}

const Structure& boolean_cube() {
  static const Structure cube = [] {
    const auto covers = cube_covers();
    return Structure::from_covers(8, covers);
  }();
  return cube;
}

NineClass classify9(const Structure& s) {
  if (s.size() != 9) return NineClass::Other;
  const CanonicalForm form = canonical_form(s);
  const auto& table = fixtures();
  for (std::size_t i = 0; i < kNineClasses.size(); ++i) {
    if (table.forms[i] == form) return kNineClasses[i];
  }
  return NineClass::Other;
}

NineClass classify9(const GcdSet& s) {
  if (s.size() != 9) {
    throw PreconditionError("classification needs nine elements, got " + std::to_string(s.size()));
  }
  return classify9(s.order());
}

GcdSet insert_maximal(const GcdSet& s8, const Integer& a, MaximalAnchor anchor) {
  require_singular_cube(s8);
  if (a <= 1) throw PreconditionError("multiplier must exceed 1");
  for (const auto& x : s8.elements()) {
    if (gcd(a, x) != 1) {
      throw PreconditionError("multiplier " + to_string(a) + " is not coprime to " + to_string(x));
    }
  }
  const Structure& order = s8.order();
  int base = 0;
  switch (anchor) {
    case MaximalAnchor::Bottom:
      base = 0;
      break;
    case MaximalAnchor::Atom:
      base = order.upper_covers(0).highest();
      break;
    case MaximalAnchor::Coatom:
      base = order.lower_covers(7).highest();
      break;
    case MaximalAnchor::Top:
      base = 7;
      break;
  }
  std::vector<Integer> values = s8.elements();
  values.push_back(a * s8[base]);
  return GcdSet::build(std::move(values), s8.name() + "+max");
}

GcdSet insert_minimum(const GcdSet& s8, const Integer& a) {
  require_singular_cube(s8);
  if (a <= 1) throw PreconditionError("multiplier must exceed 1");
  std::vector<Integer> values{s8[0]};
  for (const auto& x : s8.elements()) values.push_back(a * x);
  return GcdSet::build(std::move(values), s8.name() + "+min");
}

GcdSet insert_between(const GcdSet& s8, BetweenVariant variant) {
  require_singular_cube(s8);
  if (s8[0] != 1) throw PreconditionError("construction needs bottom element 1");
  const Structure& order = s8.order();
  for (int c : order.lower_covers(7)) {
    const ElementSet atoms = order.lower_covers(c);
    const int u = atoms.lowest();
    const int v = atoms.highest();
    const Integer l = lcm(s8[u], s8[v]);
    if (!mpz_divisible_p(s8[c].get_mpz_t(), l.get_mpz_t())) continue;
    const Integer m = s8[c] / l;
    if (m <= 1) continue;
    bool coprime = true;
    for (int y : order.all() - order.up_set(c)) coprime = coprime && gcd(m, s8[y]) == 1;
    if (!coprime) continue;

    Integer inserted;
    switch (variant) {
      case BetweenVariant::F:
        inserted = m;
        break;
      case BetweenVariant::G:
        inserted = m * s8[u];
        break;
      case BetweenVariant::H:
        inserted = l;
        break;
    }
    if (s8.index_of(inserted)) continue;
    std::vector<Integer> values = s8.elements();
    values.push_back(inserted);
    try {
      return GcdSet::build(std::move(values), s8.name() + "+between");
    } catch (const ValidationError&) {
      continue;
    }
  }
  throw PreconditionError("no coatom admits a valid multiplier");
}

Rational check_9K_sign(const GcdSet& s) {
  return top_psi_of_class(s, {NineClass::K}, "9_K sign check");
}

Rational check_9LM_sign(const GcdSet& s) {
  return top_psi_of_class(s, {NineClass::L, NineClass::M}, "9_L/9_M sign check");
}

GcdSet sample_realization(const Structure& s, Rng& rng) {
  if (!s.is_meet_semilattice()) throw PreconditionError("realizations need a meet semilattice");
  const int n = s.size();
  static const std::vector<unsigned long> pool = first_primes(25);
  if (n > static_cast<int>(pool.size())) {
    throw PreconditionError("realizations support at most 25 elements");
  }
  std::vector<unsigned long> primes = pool;
  for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
    std::swap(primes[i], primes[i + rng.below(primes.size() - i)]);
  }
  std::size_t next_prime = 0;
  std::vector<Integer> factor(n, 1);
  for (int x = 1; x < n; ++x) {
    const int count = rng.below(4) == 0 && next_prime + 1 < primes.size() ? 2 : 1;
    for (int k = 0; k < count; ++k) {
      factor[x] *= power(primes[next_prime++], rng.below(4) == 0 ? 2 : 1);
    }
  }
  std::vector<Integer> values(n, 1);
  for (int x = 0; x < n; ++x) {
    for (int y : s.down_set(x)) values[x] *= factor[y];
  }
  GcdSet out = GcdSet::build(values);
  if (!is_isomorphic(out.order(), s)) throw Error("internal: realization changed the order");
  return out;
}

std::vector<CubeWitness> find_cube_subsemilattices(const GcdSet& s, CubeNotion notion) {
  if (s.size() > kCubeSearchLimit) {
    throw PreconditionError("cube search supports at most " + std::to_string(kCubeSearchLimit) +
                            " elements");
  }
  const Structure& order = s.order();
  const CanonicalForm cube_form = canonical_form(boolean_cube());
  std::vector<CubeWitness> out;

  auto closed_under_meet = [&](ElementSet members) {
    for (int a : members) {
      for (int b : members) {
        if (b > a && !members.contains(meet(order, a, b))) return false;
      }
    }
    return true;
  };

  auto is_cube = [&](ElementSet members) {
    const Structure sub = order.induced(members);
    if (canonical_form(sub) != cube_form) return false;
    if (notion == CubeNotion::MeetClosed) return true;
    const std::vector<int> index(members.begin(), members.end());
    for (const auto& [a, b] : sub.covers()) {
      if (!order.lower_covers(index[b]).contains(index[a])) return false;
    }
    return true;
  };

  for (int bottom = 0; bottom < s.size(); ++bottom) {
    for (int top = bottom + 1; top < s.size(); ++top) {
      if (!order.less(bottom, top)) continue;
      const ElementSet inside = (order.up_set(bottom) & order.down_set(top)) -
                                ElementSet{bottom, top};
      if (inside.size() < 6) continue;
      const std::vector<int> pool(inside.begin(), inside.end());
      const int k = static_cast<int>(pool.size());
      // Lexicographic 6-combinations of the open interval.
      std::array<int, 6> pick{0, 1, 2, 3, 4, 5};
      for (;;) {
        ElementSet members{bottom, top};
        for (int i : pick) members.insert(pool[i]);
        if (closed_under_meet(members) && is_cube(members)) {
          CubeWitness w{members, {}};
          for (int m : members) w.values.push_back(s[m]);
          out.push_back(std::move(w));
        }
        int i = 5;
        while (i >= 0 && pick[i] == k - 6 + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < 6; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CubeWitness& a, const CubeWitness& b) { return a.members < b.members; });
  return out;
}

}  // namespace lcmlat
