#include "lcmlat/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "lcmlat/canonical.hpp"
#include "lcmlat/construct.hpp"
#include "lcmlat/enumerate.hpp"
#include "lcmlat/errors.hpp"
#include "lcmlat/exact_det.hpp"
#include "lcmlat/known_sets.hpp"
#include "lcmlat/lcm.hpp"
#include "lcmlat/moebius.hpp"
#include "lcmlat/power.hpp"
#include "lcmlat/random.hpp"

namespace lcmlat {

namespace {

constexpr std::uint64_t kExpectedCounts[] = {1, 1, 2, 5, 15, 53, 222, 1078, 5994, 37622};

struct Verdict {
  bool passed = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (!passed) detail << "; ";
      else detail.str("");
      passed = false;
      detail << what;
    }
  }
};

// Expensive shared inputs, built on first use.
class Context {
 public:
  explicit Context(const SelfcheckOptions& options) : options_(options) {}

  const std::vector<Structure>& level(int n) {
    auto it = levels_.find(n);
    if (it == levels_.end()) {
      it = levels_.emplace(n, enumerate_meet_semilattices(n, {options_.threads})).first;
    }
    return it->second;
  }

  const SelfcheckOptions& options() const { return options_; }

 private:
  const SelfcheckOptions& options_;
  std::map<int, std::vector<Structure>> levels_;
};

// Smallest prime dividing none of the elements.
Integer fresh_prime(const GcdSet& s) {
  for (unsigned long p : first_primes(64)) {
    bool coprime = true;
    for (const auto& x : s.elements()) coprime = coprime && gcd(x, Integer(p)) == 1;
    if (coprime) return p;
  }
  throw Error("no fresh prime among the first 64");
}

// The eight S8-based procedures, keyed by the class each should produce.
std::vector<std::pair<NineClass, GcdSet>> s8_constructions() {
  const GcdSet s8 = known::s8();
  const Integer a = fresh_prime(s8);
  return {
      {NineClass::A, insert_maximal(s8, a, MaximalAnchor::Bottom)},
      {NineClass::B, insert_maximal(s8, a, MaximalAnchor::Atom)},
      {NineClass::C, insert_maximal(s8, a, MaximalAnchor::Coatom)},
      {NineClass::D, insert_maximal(s8, a, MaximalAnchor::Top)},
      {NineClass::E, insert_minimum(s8, a)},
      {NineClass::F, insert_between(s8, BetweenVariant::F)},
      {NineClass::G, insert_between(s8, BetweenVariant::G)},
      {NineClass::H, insert_between(s8, BetweenVariant::H)},
  };
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ",") + p;
  return out;
}

void check_counts(Context& ctx, Verdict& v) {
  const int top = ctx.options().include_n10 ? 10 : 9;
  std::vector<std::string> got;
  for (int n = 1; n <= top; ++n) {
    const std::uint64_t count = ctx.level(n).size();
    got.push_back(std::to_string(count));
    v.expect(count == kExpectedCounts[n - 1],
             "n=" + std::to_string(n) + " gave " + std::to_string(count) + ", expected " +
                 std::to_string(kExpectedCounts[n - 1]));
  }
  if (v.passed) {
    v.detail << "counts " << join(got);
    if (top < 10) v.detail << " (n=10 skipped)";
  }
}

void check_special(Context& ctx, Verdict& v) {
  const auto special9 = filter_special(ctx.level(9));
  v.expect(special9.size() == 13, "n=9 gave " + std::to_string(special9.size()) + " special classes");
  std::set<CanonicalForm> fixture_forms;
  for (NineClass c : kNineClasses) fixture_forms.insert(canonical_form(nine_fixture(c)));
  std::set<CanonicalForm> found;
  for (const auto& r : special9) found.insert(r.canonical_form);
  v.expect(found == fixture_forms, "n=9 special classes differ from the 9_A..9_M fixtures");
  std::string tail;
  if (ctx.options().include_n10) {
    const auto special10 = filter_special(ctx.level(10));
    v.expect(special10.size() == 166,
             "n=10 gave " + std::to_string(special10.size()) + " special classes");
    tail = ", 166 at n=10";
  } else {
    tail = " (n=10 skipped)";
  }
  if (v.passed) v.detail << "13 at n=9 matching the fixtures" << tail;
}

struct DisplayedSum {
  const char* name;
  GcdSet (*set)();
  // Signed denominators of the nonzero terms; empty when no sum is displayed.
  std::vector<long long> terms;
};

void check_zero_psi(Context&, Verdict& v) {
  const std::vector<DisplayedSum> sums = {
      {"S8", known::s8, {}},
      {"9_I", known::s9_class_i, {}},
      {"9_J", known::s9_class_j, {4476780, -2907, -1463, -748, -5, 19, 17, 11}},
      {"S13",
       known::s13,
       {3679538850LL, -16675, -6877, -533, -369, -75, -2, 41, 25, 23, 13, 3}},
      {"S14",
       known::s14,
       {33105384312LL, -196859, -1859, -209, -147, -56, -6, 19, 13, 11, 7, 3, 2, -1}},
      {"S16",
       known::s16,
       {3029801294520LL, -39308760, -137445, -45738, -1820, 255, 231, 54, 35, 20, 14, -7, -5, -3,
        -2, 1}},
  };
  for (const auto& d : sums) {
    const GcdSet s = d.set();
    const int top = s.size() - 1;
    v.expect(psi_at(s, top) == 0, std::string(d.name) + ": Psi(top) = " + to_string(psi_at(s, top)));
    if (d.terms.empty()) continue;
    const auto mu = moebius(s.order()).toward(top);
    std::multiset<long long> computed;
    for (int i = 0; i <= top; ++i) {
      if (mu[i] == 0) continue;
      v.expect(mu[i] == 1 || mu[i] == -1, std::string(d.name) + ": coefficient outside {-1,1}");
      computed.insert(mu[i] * s[i].get_si());
    }
    const std::multiset<long long> shown(d.terms.begin(), d.terms.end());
    v.expect(computed == shown, std::string(d.name) + ": terms differ from the displayed sum");
  }
  if (v.passed) v.detail << "Psi(top)=0 for S8, 9_I, 9_J, S13, S14, S16";
}

void check_cubes(Context&, Verdict& v) {
  const auto c13 = find_cube_subsemilattices(known::s13());
  const auto c14 = find_cube_subsemilattices(known::s14());
  const auto c16 = find_cube_subsemilattices(known::s16());
  v.expect(c13.empty(), "S13 has " + std::to_string(c13.size()) + " cubes");
  v.expect(c14.size() == 2, "S14 has " + std::to_string(c14.size()) + " cubes");
  v.expect(c16.size() == 2, "S16 has " + std::to_string(c16.size()) + " cubes");
  if (c14.size() == 2) {
    const ElementSet a = c14[0].members;
    const ElementSet b = c14[1].members;
    v.expect(a.lowest() == b.lowest() && a.highest() == b.highest(),
             "S14 cubes do not share top and bottom");
  }
  bool disjoint_pair = false;
  for (std::size_t i = 0; i < c16.size(); ++i) {
    for (std::size_t j = i + 1; j < c16.size(); ++j) {
      disjoint_pair = disjoint_pair || (c16[i].members & c16[j].members).empty();
    }
  }
  v.expect(disjoint_pair, "S16 has no two disjoint cubes");
  if (v.passed) v.detail << "cubes: S13=0, S14=2 (shared ends), S16=2 (disjoint)";
}

void check_determinants(Context& ctx, Verdict& v) {
  std::vector<GcdSet> sets = {known::s8(), known::s9_class_i(), known::s9_class_j(),
                              build_power_construction(1).set};
  for (auto& [c, s] : s8_constructions()) sets.push_back(s);
  const std::size_t known_sets = sets.size();
  Rng rng(ctx.options().seed);
  RandomSetOptions opts;
  opts.max_size = 7;
  for (int i = 0; i < 200; ++i) sets.push_back(random_gcd_set(rng, opts));
  for (const auto& s : sets) {
    v.expect(det_lcm(s) == bareiss_determinant(lcm_matrix(s)),
             "det mismatch on " + set_to_text(s));
  }
  const auto bl = known::bourque_ligh_values();
  v.expect(bareiss_determinant(lcm_matrix_of_values(bl)) == 0, "{1,2,15,42} determinant is nonzero");
  if (v.passed) {
    v.detail << known_sets << " known sets and 200 random sets agree with Bareiss";
  }
}

void check_constructions(Context&, Verdict& v) {
  std::vector<std::string> labels;
  for (const auto& [intended, s] : s8_constructions()) {
    const NineClass got = classify9(s);
    v.expect(s.size() == 9, std::string(label(intended)) + ": size " + std::to_string(s.size()));
    v.expect(is_singular(s).singular, std::string(label(intended)) + ": not singular");
    v.expect(got == intended,
             std::string(label(intended)) + ": classified as " + std::string(label(got)));
    labels.emplace_back(label(got));
  }
  if (v.passed) v.detail << "singular realizations of " << join(labels);
}

void check_signs(Context& ctx, Verdict& v) {
  Rng rng(ctx.options().seed);
  const std::pair<NineClass, int> sweeps[] = {{NineClass::K, -1}, {NineClass::L, 1}, {NineClass::M, 1}};
  for (const auto& [c, expected] : sweeps) {
    for (int i = 0; i < 200; ++i) {
      const GcdSet s = sample_realization(nine_fixture(c), rng);
      const Rational value = c == NineClass::K ? check_9K_sign(s) : check_9LM_sign(s);
      if (sgn(value) != expected) {
        v.expect(false, std::string(label(c)) + ": Psi(top) = " + to_string(value) + " on " +
                            set_to_text(s));
        break;
      }
    }
  }
  if (v.passed) v.detail << "200 each: 9_K negative, 9_L and 9_M positive";
}

void check_sun(Context& ctx, Verdict& v) {
  Rng rng(ctx.options().seed);
  RandomSetOptions opts;
  opts.max_prime_support = 2;
  opts.max_size = 16;
  for (int i = 0; i < 500; ++i) {
    const GcdSet s = random_gcd_set(rng, opts);
    v.expect(check_sun_condition(s), "sampled set breaks the two-prime condition: " + set_to_text(s));
    v.expect(!is_singular(s).singular, "singular two-prime set " + set_to_text(s));
    if (!v.passed) break;
  }
  if (v.passed) v.detail << "500 two-prime sets nonsingular";
}

void check_sufficient_conditions(Context& ctx, Verdict& v) {
  Rng rng(ctx.options().seed);
  int double_chain = 0;
  int cover_lcm = 0;
  int zeros = 0;
  for (int i = 0; i < 500 && v.passed; ++i) {
    const GcdSet s = random_gcd_set(rng);
    const PsiVector p = psi(s);
    for (int x = 0; x < s.size(); ++x) {
      zeros += p.values[x] == 0;
      if (generates_double_chain(s.order(), x)) {
        ++double_chain;
        v.expect(p.values[x] != 0, "double-chain element with Psi = 0 in " + set_to_text(s));
      }
      if (x > 0 && cover_lcm_predicate(s, x) == CoverLcmVerdict::ForcesNonzero) {
        ++cover_lcm;
        v.expect(p.values[x] != 0, "cover-lcm element with Psi = 0 in " + set_to_text(s));
      }
    }
  }
  if (v.passed) {
    v.detail << double_chain << " double-chain and " << cover_lcm
             << " cover-lcm elements nonzero (" << zeros << " zero Psi values seen)";
  }
}

// Psi at the top straight from divisibility, without the Structure code.
Rational oracle_h(const std::vector<Integer>& values, unsigned alpha) {
  const std::size_t n = values.size();
  std::vector<long> mu(n, 0);
  mu[n - 1] = 1;
  for (std::size_t j = n - 1; j-- > 0;) {
    if (!mpz_divisible_p(values[n - 1].get_mpz_t(), values[j].get_mpz_t())) continue;
    long sum = 0;
    for (std::size_t k = j + 1; k < n; ++k) {
      if (mpz_divisible_p(values[k].get_mpz_t(), values[j].get_mpz_t())) sum += mu[k];
    }
    mu[j] = -sum;
  }
  Rational h = 0;
  for (std::size_t i = 0; i < n; ++i) h += make_rational(Integer(mu[i]), power(values[i], alpha));
  return h;
}

void check_power(Context&, Verdict& v) {
  const PowerConstruction c1 = build_power_construction(1);
  const std::vector<Integer> expected{1, 2, 3, 5, 6, 10, 14, 15, 210};
  v.expect(c1.set.elements() == expected, "M=1 set is " + set_to_text(c1.set));
  const Rational h1 = oracle_h(c1.set.elements(), 1);
  const Rational h2 = oracle_h(c1.set.elements(), 2);
  v.expect(h1 > 0, "oracle h(1) = " + to_string(h1));
  v.expect(h2 < 0, "oracle h(2) = " + to_string(h2));
  v.expect(h_exact(c1, 1) == h1 && h_exact(c1, 2) == h2, "h_exact disagrees with the oracle");

  const AlphaBracket b1 = find_alpha0(c1, std::ldexp(1.0, -40));
  BigFloat width(b1.hi.precision());
  mpfr_sub(width.get(), b1.hi.get(), b1.lo.get(), MPFR_RNDU);
  v.expect(mpfr_cmp_d(width.get(), std::ldexp(1.0, -40)) <= 0, "M=1 bracket too wide");
  v.expect(mpfr_cmp_ui(b1.lo.get(), 1) > 0 && mpfr_cmp_ui(b1.hi.get(), 2) < 0,
           "M=1 bracket not inside (1,2)");
  v.expect(b1.h_lo.certified_sign() > 0 && b1.h_hi.certified_sign() < 0, "M=1 signs not certified");

  const PowerConstruction c3 = build_power_construction(3);
  const AlphaBracket b3 = find_alpha0(c3, std::ldexp(1.0, -40));
  v.expect(mpfr_cmp_ui(b3.lo.get(), 3) >= 0, "M=3 bracket starts below 3");
  v.expect(b3.h_lo.certified_sign() > 0 && b3.h_hi.certified_sign() < 0, "M=3 signs not certified");
  if (v.passed) {
    v.detail << "h(1)=" << to_string(h1) << ", alpha0(M=1) in [" << b1.lo.to_string(15) << ", "
             << b1.hi.to_string(15) << "], alpha0(M=3) >= " << b3.lo.to_string(15);
  }
}

void check_inversion(Context& ctx, Verdict& v) {
  Rng rng(ctx.options().seed);
  for (int i = 0; i < 1000 && v.passed; ++i) {
    const GcdSet s = random_gcd_set(rng);
    const PsiVector p = psi(s);
    for (int x = 0; x < s.size(); ++x) {
      Rational sum = 0;
      for (int d : s.order().down_set(x)) sum += p.values[d];
      v.expect(sum == make_rational(1, s[x]), "inversion fails at " + to_string(s[x]) + " in " +
                                                  set_to_text(s));
    }
  }
  if (v.passed) v.detail << "1000 random sets";
}

void check_classes(Context& ctx, Verdict& v) {
  std::set<NineClass> filtered;
  for (const auto& r : filter_special(ctx.level(9))) filtered.insert(classify9(r.canonical_form.to_structure()));
  for (NineClass c : {NineClass::K, NineClass::L, NineClass::M}) filtered.erase(c);

  std::set<NineClass> realized;
  for (const auto& [intended, s] : s8_constructions()) {
    if (is_singular(s).singular && classify9(s) == intended) realized.insert(intended);
  }
  for (const GcdSet& s : {known::s9_class_i(), known::s9_class_j()}) {
    if (is_singular(s).singular) realized.insert(classify9(s));
  }
  std::vector<std::string> labels;
  for (NineClass c : realized) labels.emplace_back(label(c));
  v.expect(realized == filtered, "realized classes " + join(labels) + " differ from the filter");
  v.expect(realized.size() == 10, std::to_string(realized.size()) + " classes realized");
  if (v.passed) v.detail << "10 realizable classes: " << join(labels);
}

using CheckFn = void (*)(Context&, Verdict&);

struct CheckSpec {
  const char* id;
  const char* title;
  CheckFn fn;
};

const std::vector<CheckSpec>& checks() {
  static const std::vector<CheckSpec> all = {
      {"1", "enumeration counts", check_counts},
      {"2", "special classes at n=9 and n=10", check_special},
      {"3", "Psi(top) = 0 on the singular examples", check_zero_psi},
      {"4", "cube subsemilattices", check_cubes},
      {"5", "determinant against Bareiss", check_determinants},
      {"6", "constructions 9_A..9_H", check_constructions},
      {"7", "signs of 9_K, 9_L, 9_M", check_signs},
      {"8", "two-prime sets are nonsingular", check_sun},
      {"9", "double-chain and cover-lcm conditions", check_sufficient_conditions},
      {"10", "power LCM bracket", check_power},
      {"11", "Moebius inversion", check_inversion},
      {"classes", "exactly 10 realizable nine-element classes", check_classes},
  };
  return all;
}

}  // namespace

std::vector<std::string> selfcheck_ids() {
  std::vector<std::string> ids;
  for (const auto& c : checks()) ids.emplace_back(c.id);
  return ids;
}

std::vector<CheckResult> run_selfcheck(const SelfcheckOptions& options,
                                       const std::vector<std::string>& ids) {
  for (const auto& id : ids) {
    const auto& all = checks();
    if (std::none_of(all.begin(), all.end(), [&](const CheckSpec& c) { return id == c.id; })) {
      throw PreconditionError("unknown check id '" + id + "'");
    }
  }
  Context ctx(options);
  std::vector<CheckResult> results;
  for (const auto& spec : checks()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), spec.id) == ids.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      spec.fn(ctx, v);
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what());
    }
    CheckResult r{spec.id, spec.title, v.passed, v.detail.str(),
                  std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()};
    if (options.on_result) options.on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace lcmlat
