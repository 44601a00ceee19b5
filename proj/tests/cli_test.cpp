#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "lcmlat/io.hpp"

namespace lcmlat {
namespace {

using nlohmann::json;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "lcmlat");
  std::ostringstream out;
  std::ostringstream err;
  Outcome o;
  o.code = cli::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::string data(const std::string& name) { return std::string(LCMLAT_DATA_DIR) + "/" + name; }

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitInput);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitInput);
  EXPECT_EQ(run({"enumerate"}).code, cli::kExitInput);
  EXPECT_EQ(run({"enumerate", "0"}).code, cli::kExitInput);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(Cli, VerifySingularSet) {
  const Outcome o = run({"verify", data("s8.json")});
  EXPECT_EQ(o.code, cli::kExitSingular);
  const json r = o.report();
  EXPECT_EQ(r["command"], "verify");
  EXPECT_TRUE(r["singular"].get<bool>());
  EXPECT_EQ(r["determinant"], "0");
  EXPECT_TRUE(r["factorization_reproduces"].get<bool>());
  EXPECT_EQ(r["psi"].size(), 8U);
  EXPECT_FALSE(r.contains("timings"));
}

TEST(Cli, VerifyRegularSet) {
  const Outcome o = run({"verify", data("s9_class_i.json")});
  EXPECT_EQ(o.code, cli::kExitSingular);
  const Outcome chain = run({"verify", data("s8.json"), "--exponent", "2"});
  EXPECT_EQ(chain.code, cli::kExitOk);
  EXPECT_FALSE(chain.report()["singular"].get<bool>());
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"verify", data("not_closed.json")}).code, cli::kExitInput);
  EXPECT_EQ(run({"verify", data("missing.json")}).code, cli::kExitInput);
  EXPECT_EQ(run({"verify", data("chain2.json")}).code, cli::kExitInput);
  EXPECT_EQ(run({"classify", data("s8.json")}).code, cli::kExitPrecondition);
}

TEST(Cli, ReportsAreDeterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"verify", data("s14.json")},
        std::vector<std::string>{"cubes", data("s16.json")},
        std::vector<std::string>{"construct", "K", "--samples", "5", "--seed", "9"},
        std::vector<std::string>{"power", "--M", "1", "--tol", "1e-6"}}) {
    const Outcome a = run(args);
    const Outcome b = run(args);
    EXPECT_EQ(a.out, b.out) << args[0];
    EXPECT_EQ(a.code, b.code);
  }
}

TEST(Cli, Enumerate) {
  const Outcome counts = run({"enumerate", "8", "--count-only"});
  EXPECT_EQ(counts.code, cli::kExitOk);
  EXPECT_EQ(counts.report()["count"], 1078);
  EXPECT_EQ(run({"enumerate", "9", "--special", "--count-only"}).report()["count"], 13);

  const Outcome lines = run({"enumerate", "4", "--threads", "2"});
  EXPECT_EQ(lines.code, cli::kExitOk);
  std::istringstream in(lines.out);
  int n = 0;
  for (std::string line; std::getline(in, line); ++n) {
    EXPECT_EQ(parse_structure_json(line).size(), 4);
  }
  EXPECT_EQ(n, 5);
}

TEST(Cli, Classify) {
  EXPECT_EQ(run({"classify", data("s9_class_i.json")}).report()["class"], "9_I");
  EXPECT_EQ(run({"classify", data("s9_class_j.json")}).report()["class"], "9_J");
}

TEST(Cli, Cubes) {
  EXPECT_EQ(run({"cubes", data("s14.json")}).report()["count"], 2);
  EXPECT_EQ(run({"cubes", data("s13.json")}).report()["count"], 0);
  EXPECT_EQ(run({"cubes", data("s16.json"), "--notion", "meet"}).report()["count"], 30);
  EXPECT_EQ(run({"cubes", data("s16.json"), "--notion", "other"}).code, cli::kExitInput);
}

TEST(Cli, Construct) {
  for (const std::string c : {"A", "B", "C", "D", "E", "F", "G", "H", "I", "J"}) {
    const Outcome o = run({"construct", c});
    EXPECT_EQ(o.code, cli::kExitOk) << c << o.err;
    const json r = o.report();
    EXPECT_EQ(r["classified_as"], "9_" + c);
    EXPECT_TRUE(r["singular"].get<bool>());
  }
  const json k = run({"construct", "K", "--samples", "20"}).report();
  EXPECT_EQ(k["negative"], 20);
  const json l = run({"construct", "9_L", "--samples", "20"}).report();
  EXPECT_EQ(l["positive"], 20);
  EXPECT_EQ(run({"construct", "N"}).code, cli::kExitInput);
  EXPECT_EQ(run({"construct", "A", "--a", "11"}).code, cli::kExitPrecondition);
}

TEST(Cli, Power) {
  const Outcome o = run({"power", "--M", "1", "--tol", "1e-9"});
  ASSERT_EQ(o.code, cli::kExitOk) << o.err;
  const json r = o.report();
  EXPECT_EQ(r["k"], 2);
  EXPECT_EQ(r["set"].size(), 9U);
  EXPECT_EQ(r["h_exact"][0]["h"], "2/15");
  EXPECT_EQ(run({"power", "--M", "0.5"}).code, cli::kExitPrecondition);
  EXPECT_EQ(run({"power", "--M", "7"}).code, cli::kExitPrecondition);
  EXPECT_EQ(run({"power", "--M", "abc"}).code, cli::kExitInput);
}

TEST(Cli, ExportDot) {
  const Outcome o = run({"export-dot", data("s8.json")});
  EXPECT_EQ(o.code, cli::kExitOk);
  EXPECT_EQ(o.out.rfind("digraph", 0), 0U);
  const auto path = std::filesystem::temp_directory_path() / "lcmlat_cli_test.dot";
  EXPECT_EQ(run({"export-dot", data("chain2.json"), "--out", path.string()}).code, cli::kExitOk);
  EXPECT_EQ(read_text_file(path), to_dot(parse_structure_json(read_text_file(data("chain2.json")))));
  std::filesystem::remove(path);
}

TEST(Cli, Timings) {
  const Outcome o = run({"--timings", "cubes", data("s8.json")});
  EXPECT_TRUE(o.report().contains("timings"));
}

TEST(Cli, QuickSelftestSubset) {
  const Outcome o = run({"selftest", "--quick", "--only", "5", "--only", "9"});
  EXPECT_EQ(o.code, cli::kExitOk) << o.err;
  EXPECT_EQ(o.report()["results"].size(), 2U);
  EXPECT_EQ(run({"selftest", "--only", "99"}).code, cli::kExitPrecondition);
}

}  // namespace
}  // namespace lcmlat
