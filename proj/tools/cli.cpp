#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "lcmlat/construct.hpp"
#include "lcmlat/enumerate.hpp"
#include "lcmlat/errors.hpp"
#include "lcmlat/io.hpp"
#include "lcmlat/known_sets.hpp"
#include "lcmlat/lcm.hpp"
#include "lcmlat/power.hpp"
#include "lcmlat/random.hpp"
#include "lcmlat/selfcheck.hpp"

namespace lcmlat::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 20240601;

Json elements_of(const GcdSet& s) {
  Json out = Json::array();
  for (const auto& x : s.elements()) out.push_back(to_string(x));
  return out;
}

Json describe(const GcdSet& s) {
  Json out;
  if (!s.name().empty()) out["name"] = s.name();
  out["elements"] = elements_of(s);
  return out;
}

Json describe(const Structure& s) {
  Json out;
  out["n"] = s.size();
  out["covers"] = Json::array();
  for (const auto& [a, b] : s.covers()) out["covers"].push_back({a, b});
  return out;
}

Json zero_witnesses(const GcdSet& s, const SingularityReport& r) {
  Json out = Json::array();
  for (int i : r.zero_indices) out.push_back({{"index", i}, {"element", to_string(s[i])}});
  return out;
}

GcdSet load_set(const std::string& path) { return parse_set_json(read_text_file(path)); }

std::string exact_decimal(const BigFloat& x) {
  // Enough digits to identify the binary value.
  const int digits = static_cast<int>(std::ceil(static_cast<double>(x.precision()) * 0.30103)) + 2;
  return x.to_string(digits);
}

Json evaluation(const HEvaluation& e) {
  Json out;
  out["value"] = e.value.to_string(20);
  out["error_bound"] = e.error_bound.to_string(6);
  if (e.exact) out["exact"] = to_string(*e.exact);
  out["certified_sign"] = e.certified_sign();
  out["precision_bits"] = e.precision_bits;
  return out;
}

// A command writes its report and returns the exit code.
using Command = std::function<int(Json& report, std::ostream& out)>;

struct Selected {
  Command command;
  bool json_report = true;
};

void print_report(const Json& report, std::ostream& out) { out << report.dump(2) << "\n"; }

int cmd_verify(const std::string& path, unsigned exponent, Json& report) {
  const GcdSet s = load_set(path);
  const PsiVector p = psi(s, exponent);
  const SingularityReport sing = is_singular(s, exponent);
  report["input"] = describe(s);
  report["exponent"] = exponent;
  Json rows = Json::array();
  for (int i = 0; i < s.size(); ++i) {
    Json row;
    row["element"] = to_string(s[i]);
    row["psi"] = to_string(p.values[i]);
    row["double_chain"] = generates_double_chain(s.order(), i);
    if (i == 0) {
      row["cover_lcm"] = nullptr;
    } else {
      row["cover_lcm"] = cover_lcm_predicate(s, i) == CoverLcmVerdict::ForcesNonzero
                             ? "forces_nonzero"
                             : "no_conclusion";
    }
    rows.push_back(std::move(row));
  }
  report["psi"] = std::move(rows);
  report["singular"] = sing.singular;
  report["zero_witnesses"] = zero_witnesses(s, sing);
  report["determinant"] = to_string(det_lcm(s, exponent));
  report["factorization_reproduces"] = factorize(s, exponent).reproduces(lcm_matrix(s, exponent));
  return sing.singular ? kExitSingular : kExitOk;
}

int cmd_enumerate(int n, bool special, bool count_only, const std::string& out_path, int threads,
                  Json& report, std::ostream& out) {
  const auto structures = enumerate_meet_semilattices(n, {threads});
  if (count_only) {
    report["n"] = n;
    report["special"] = special;
    report["count"] = special ? filter_special(structures).size() : structures.size();
    return kExitOk;
  }
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) throw ValidationError("cannot write " + out_path);
  }
  std::ostream& sink = out_path.empty() ? out : file;
  for (const Structure& s : structures) {
    const CensusRecord r = census(s);
    if (special && !r.special) continue;
    Json line = describe(s);
    line["canonical"] = r.canonical_form.to_hex();
    line["special"] = r.special;
    if (r.witness_element) line["witness"] = *r.witness_element;
    sink << line.dump() << "\n";
  }
  return kExitOk;
}

int cmd_classify(const std::string& path, Json& report) {
  const InputDocument doc = parse_input_json(read_text_file(path));
  if (const auto* s = std::get_if<GcdSet>(&doc)) {
    report["input"] = describe(*s);
    report["class"] = std::string(label(classify9(*s)));
    report["singular"] = is_singular(*s).singular;
  } else {
    const auto& st = std::get<Structure>(doc);
    if (st.size() != 9) throw PreconditionError("classification needs nine elements");
    report["input"] = describe(st);
    report["class"] = std::string(label(classify9(st)));
  }
  return kExitOk;
}

int cmd_cubes(const std::string& path, const std::string& notion_name, Json& report) {
  const GcdSet s = load_set(path);
  const CubeNotion notion = notion_name == "meet" ? CubeNotion::MeetClosed : CubeNotion::CoverPreserving;
  const auto cubes = find_cube_subsemilattices(s, notion);
  report["input"] = describe(s);
  report["notion"] = notion == CubeNotion::MeetClosed ? "meet-closed" : "cover-preserving";
  report["count"] = cubes.size();
  Json witnesses = Json::array();
  for (const auto& w : cubes) {
    Json item;
    item["indices"] = Json::array();
    for (int m : w.members) item["indices"].push_back(m);
    item["elements"] = Json::array();
    for (const auto& v : w.values) item["elements"].push_back(to_string(v));
    witnesses.push_back(std::move(item));
  }
  report["witnesses"] = std::move(witnesses);
  return kExitOk;
}

Integer default_multiplier(const GcdSet& s) {
  for (unsigned long p : first_primes(64)) {
    if (std::all_of(s.elements().begin(), s.elements().end(),
                    [&](const Integer& x) { return gcd(x, Integer(p)) == 1; })) {
      return p;
    }
  }
  throw PreconditionError("no prime among the first 64 is coprime to the set");
}

int cmd_construct(const std::string& class_name, const std::string& set_path,
                  const std::string& multiplier, int samples, std::uint64_t seed, Json& report) {
  const auto parsed = parse_nine_class(class_name);
  if (!parsed) throw ValidationError("unknown class '" + class_name + "' (expected A..M)");
  const NineClass c = *parsed;
  report["class"] = std::string(label(c));

  if (c == NineClass::I || c == NineClass::J) {
    const GcdSet s = c == NineClass::I ? known::s9_class_i() : known::s9_class_j();
    const SingularityReport sing = is_singular(s);
    report["set"] = describe(s);
    report["singular"] = sing.singular;
    report["zero_witnesses"] = zero_witnesses(s, sing);
    report["classified_as"] = std::string(label(classify9(s)));
    return kExitOk;
  }

  if (c == NineClass::K || c == NineClass::L || c == NineClass::M) {
    if (samples < 1) throw PreconditionError("--samples must be at least 1");
    Rng rng(seed);
    report["seed"] = seed;
    Json rows = Json::array();
    int negative = 0;
    int positive = 0;
    for (int i = 0; i < samples; ++i) {
      const GcdSet s = sample_realization(nine_fixture(c), rng);
      const Rational top = c == NineClass::K ? check_9K_sign(s) : check_9LM_sign(s);
      negative += sgn(top) < 0;
      positive += sgn(top) > 0;
      rows.push_back({{"elements", elements_of(s)}, {"psi_top", to_string(top)}});
    }
    report["samples"] = std::move(rows);
    report["negative"] = negative;
    report["positive"] = positive;
    report["zero"] = samples - negative - positive;
    return kExitOk;
  }

  const GcdSet base = set_path.empty() ? known::s8() : load_set(set_path);
  report["base"] = describe(base);
  const bool uses_multiplier = c <= NineClass::E;
  const Integer a = multiplier.empty() ? default_multiplier(base) : parse_integer(multiplier);
  if (uses_multiplier) report["multiplier"] = to_string(a);

  GcdSet built = [&] {
    switch (c) {
      case NineClass::A:
        return insert_maximal(base, a, MaximalAnchor::Bottom);
      case NineClass::B:
        return insert_maximal(base, a, MaximalAnchor::Atom);
      case NineClass::C:
        return insert_maximal(base, a, MaximalAnchor::Coatom);
      case NineClass::D:
        return insert_maximal(base, a, MaximalAnchor::Top);
      case NineClass::E:
        return insert_minimum(base, a);
      case NineClass::F:
        return insert_between(base, BetweenVariant::F);
      case NineClass::G:
        return insert_between(base, BetweenVariant::G);
      default:
        return insert_between(base, BetweenVariant::H);
    }
  }();
  built.set_name("");
  const SingularityReport sing = is_singular(built);
  report["set"] = describe(built);
  report["singular"] = sing.singular;
  report["zero_witnesses"] = zero_witnesses(built, sing);
  report["classified_as"] = std::string(label(classify9(built)));
  return kExitOk;
}

int cmd_power(const std::string& m_text, double tol, long precision, Json& report) {
  double M = 0;
  try {
    std::size_t used = 0;
    M = std::stod(m_text, &used);
    if (used != m_text.size()) throw std::invalid_argument(m_text);
  } catch (const std::exception&) {
    throw ValidationError("--M must be a number, got '" + m_text + "'");
  }
  const PowerConstruction c = build_power_construction(M);
  report["M"] = m_text;
  report["k"] = c.k;
  report["primes"] = c.primes;
  report["set"] = elements_of(c.set);
  report["mu_top"] = c.mu_top;
  Json checkpoints = Json::array();
  const unsigned last = static_cast<unsigned>(std::floor(std::log2(static_cast<double>(c.k)))) + 1;
  for (unsigned alpha = 1; alpha <= last; ++alpha) {
    const Rational h = h_exact(c, alpha);
    checkpoints.push_back({{"alpha", alpha}, {"h", to_string(h)}, {"sign", sgn(h)}});
  }
  report["h_exact"] = std::move(checkpoints);

  const AlphaBracket b = find_alpha0(c, tol, precision);
  BigFloat width(b.hi.precision());
  mpfr_sub(width.get(), b.hi.get(), b.lo.get(), MPFR_RNDU);
  Json bracket;
  bracket["lo"] = exact_decimal(b.lo);
  bracket["hi"] = exact_decimal(b.hi);
  bracket["width"] = width.to_string(6);
  bracket["h_lo"] = evaluation(b.h_lo);
  bracket["h_hi"] = evaluation(b.h_hi);
  bracket["precision_bits"] = b.precision_bits;
  report["tol"] = tol;
  report["bracket"] = std::move(bracket);
  return kExitOk;
}

int cmd_export_dot(const std::string& path, const std::string& out_path, std::ostream& out) {
  const InputDocument doc = parse_input_json(read_text_file(path));
  const std::string text = std::visit([](const auto& d) { return to_dot(d); }, doc);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw ValidationError("cannot write " + out_path);
    file << text;
  }
  return kExitOk;
}

int cmd_selftest(bool quick, std::uint64_t seed, const std::vector<std::string>& only, bool timings,
                 Json& report, std::ostream& err) {
  SelfcheckOptions options;
  options.include_n10 = !quick;
  options.seed = seed;
  options.on_result = [&](const CheckResult& r) {
    err << (r.passed ? "PASS " : "FAIL ") << r.id << ": " << r.title << " - " << r.detail << "\n";
  };
  const auto results = run_selfcheck(options, only);
  Json rows = Json::array();
  bool all = true;
  for (const auto& r : results) {
    Json row{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}};
    if (timings) row["seconds"] = r.seconds;
    rows.push_back(std::move(row));
    all = all && r.passed;
  }
  report["seed"] = seed;
  report["quick"] = quick;
  report["results"] = std::move(rows);
  report["passed"] = all;
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact singularity certificates for LCM matrices on GCD-closed sets", "lcmlat"};
  app.require_subcommand(1);
  bool timings = false;
  app.add_flag("--timings", timings, "Add wall-clock timings to the report");

  Selected selected;
  auto json_command = [&](std::function<int(Json&)> body) {
    selected.command = [body](Json& report, std::ostream&) { return body(report); };
  };

  std::string file;
  auto* verify = app.add_subcommand("verify", "Psi table, singularity verdict and determinant of a set");
  unsigned exponent = 1;
  verify->add_option("set-file", file, "Set file (JSON)")->required();
  verify->add_option("--exponent", exponent, "Integer exponent of the power LCM matrix")
      ->check(CLI::PositiveNumber);
  verify->callback([&] { json_command([&](Json& r) { return cmd_verify(file, exponent, r); }); });

  auto* enumerate = app.add_subcommand("enumerate", "Meet semilattices on n elements up to isomorphism");
  int n = 0;
  bool special = false;
  bool count_only = false;
  std::string out_path;
  int threads = 0;
  enumerate->add_option("n", n, "Number of elements")->required()->check(CLI::Range(1, 64));
  enumerate->add_flag("--special", special, "Keep structures with an element that is not double-chain");
  enumerate->add_flag("--count-only", count_only, "Print a count report instead of structures");
  enumerate->add_option("--out", out_path, "Write structure lines to this file");
  enumerate->add_option("--threads", threads, "Worker threads (default: LCMLAT_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);
  enumerate->callback([&] {
    selected.json_report = count_only;
    selected.command = [&](Json& r, std::ostream& o) {
      return cmd_enumerate(n, special, count_only, out_path, threads, r, o);
    };
  });

  auto* classify = app.add_subcommand("classify", "Nine-element class (9_A .. 9_M or OTHER)");
  classify->add_option("file", file, "Set or structure file (JSON)")->required();
  classify->callback([&] { json_command([&](Json& r) { return cmd_classify(file, r); }); });

  auto* cubes = app.add_subcommand("cubes", "Cube (B_3) subsemilattices of a set");
  std::string notion = "cover";
  cubes->add_option("set-file", file, "Set file (JSON)")->required();
  cubes->add_option("--notion", notion, "cover: cube covers are covers of the set; meet: any gcd-closed cube")
      ->check(CLI::IsMember({"cover", "meet"}));
  cubes->callback([&] { json_command([&](Json& r) { return cmd_cubes(file, notion, r); }); });

  auto* construct = app.add_subcommand("construct", "Nine-element realizations of a class");
  std::string class_name;
  std::string multiplier;
  int samples = 1;
  std::uint64_t seed = kDefaultSeed;
  construct->add_option("class", class_name, "A..M (A-H: built from an eight-element cube set)")
      ->required();
  construct->add_option("--set", file, "Eight-element singular cube set (default: the built-in S8)");
  construct->add_option("--a", multiplier, "Multiplier for A..E (default: smallest fresh prime)");
  construct->add_option("--samples", samples, "Random realizations for K, L, M");
  construct->add_option("--seed", seed, "Seed for K, L, M");
  construct->callback([&] {
    json_command([&](Json& r) { return cmd_construct(class_name, file, multiplier, samples, seed, r); });
  });

  auto* power = app.add_subcommand("power", "Power-LCM construction and a bracket for its singular exponent");
  std::string m_text;
  double tol = 1e-12;
  long precision = 128;
  power->add_option("--M", m_text, "Target M >= 1")->required();
  power->add_option("--tol", tol, "Bracket width")->check(CLI::PositiveNumber);
  power->add_option("--precision", precision, "Initial working precision in bits (>= 64)");
  power->callback([&] { json_command([&](Json& r) { return cmd_power(m_text, tol, precision, r); }); });

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram in Graphviz DOT");
  dot->add_option("file", file, "Set or structure file (JSON)")->required();
  dot->add_option("--out", out_path, "Write to this file instead of stdout");
  dot->callback([&] {
    selected.json_report = false;
    selected.command = [&](Json&, std::ostream& o) { return cmd_export_dot(file, out_path, o); };
  });

  auto* selftest = app.add_subcommand("selftest", "Reproduction checks");
  bool quick = false;
  std::vector<std::string> only;
  selftest->add_flag("--quick", quick, "Skip the ten-element enumeration");
  selftest->add_option("--seed", seed, "Seed for the randomized checks");
  selftest->add_option("--only", only, "Run only these check ids");
  selftest->callback([&] {
    json_command([&](Json& r) { return cmd_selftest(quick, seed, only, timings, r, err); });
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  Json report;
  report["command"] = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    code = selected.command(report, out);
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  if (selected.json_report) {
    if (timings) {
      report["timings"] = {
          {"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
    }
    print_report(report, out);
  }
  return code;
}

}  // namespace lcmlat::cli
