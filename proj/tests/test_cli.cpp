#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "spreadres/cli.hpp"
#include "spreadres/io.hpp"

using namespace spreadres;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "spreadres");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& rel) { return std::string(SPREADRES_TEST_DATA) + "/" + rel; }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST(Cli, SpreadCount) {
  auto r = run({"spreads", "--grid", "2x2", "--count"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "11");
}

TEST(Cli, GldimFourByTwo) {
  auto r = run({"gldim", "--grid", "4x2", "--field", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("spread gldim: 2\n"), std::string::npos) << r.out;
}

TEST(Cli, RadappThreeElementPoset) {
  auto r = run({"radapp", "--poset", data("posets/abc.json"), "--spread", "up-b"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("summands (2):\n  up{a}  {a}\n  up{c}  {c}\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("closed form: agrees"), std::string::npos);
}

TEST(Cli, SeedIsPrinted) {
  auto r = run({"verify", "chains", "--trials", "12", "--seed", "13"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("seed: 13\n"), std::string::npos);
  auto j = run({"verify", "chains", "--trials", "12", "--seed", "13", "--json", "-"});
  EXPECT_EQ(json::parse(j.out)["seed"], 13);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"verify", "kan-transport", "--to", "5x2", "--trials", "5", "--seed", "3"};
  auto a = run(args);
  auto b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto r1 = run({"gldim", "--grid", "4x2", "--threads", "1", "--json", "-"});
  auto r3 = run({"gldim", "--grid", "4x2", "--threads", "3", "--json", "-"});
  EXPECT_EQ(r1.out, r3.out);
}

TEST(Cli, JsonRoundTrip) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"spreads", "--grid", "3x2"},
           {"resolve", "--rep", data("reps/kernel_4x2.json")},
           {"approx", "--rep", data("reps/random_3x2.json")},
           {"stabilize", "--m", "2", "--kmax", "4"},
           {"verify", "windows", "--grid", "4x2"},
           {"kan-check", "--inclusion", data("inclusion_3x2_5x2.json"), "--rep", data("reps/random_3x2.json")}}) {
    auto with_json = args;
    with_json.insert(with_json.end(), {"--json", "-"});
    auto r = run(with_json);
    ASSERT_EQ(r.code, 0) << args.front() << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(json::parse(j.dump()), j);
  }
  auto r = run({"kan-check", "--maps", "0,2,4/0,1", "--to", "5x2", "--rep", data("reps/random_3x2.json"), "--json", "-"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  auto m = rep_from_json(j["lan"]);
  EXPECT_EQ(rep_to_json(*m), j["lan"]);
  EXPECT_EQ(m->total_dim(), 8);
}

TEST(Cli, JsonFileOutput) {
  const auto path = std::filesystem::temp_directory_path() / "spreadres_cli_test.json";
  auto r = run({"spreads", "--grid", "2x2", "--count", "--json", path.string()});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(path);
  EXPECT_EQ(json::parse(in)["count"], 11);
  std::filesystem::remove(path);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"spreads"}).code, 2);
  EXPECT_EQ(run({"spreads", "--grid", "9x8"}).code, 2);
  EXPECT_EQ(run({"spreads", "--grid", "axb"}).code, 2);
  EXPECT_EQ(run({"spreads", "--poset", data("posets/missing.json")}).code, 2);
  EXPECT_EQ(run({"resolve", "--rep", data("reps/bad_noncommuting.json")}).code, 2);
  EXPECT_EQ(run({"radapp", "--poset", data("posets/abc.json"), "--spread", "elems:a,c"}).code, 2);
  EXPECT_EQ(run({"gldim", "--grid", "2x2", "--field", "6"}).code, 2);
  EXPECT_EQ(run({"verify", "no-such-suite"}).code, 2);
  EXPECT_EQ(run({"verify", "order-combinatorics"}).code, 2);
  auto r = run({"resolve", "--rep", data("reps/bad_noncommuting.json")});
  EXPECT_NE(r.err.find("non-commuting"), std::string::npos);
}

TEST(Cli, HomBetweenSpreads) {
  // k_{a} is a subrepresentation of k_P; nothing nonzero maps k_P onto k_{a} since b < a.
  auto r = run({"hom", "--poset", data("posets/abc.json"), "--source", "up-a", "--target", "up-b", "--json", "-"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["dim"], 1);
  r = run({"hom", "--poset", data("posets/abc.json"), "--source", "up-b", "--target", "up-a", "--json", "-"});
  EXPECT_EQ(json::parse(r.out)["dim"], 0);
  r = run({"hom", "--poset", data("posets/abc.json"), "--source", "up-b", "--target", "down-a", "--json", "-"});
  EXPECT_EQ(json::parse(r.out)["dim"], 1);
  r = run({"hom", "--rep", data("reps/chain3.json"), "--source", "up-0"});
  EXPECT_NE(r.out.find("dim Hom(k_S, M) = 1"), std::string::npos) << r.out;
}

TEST(Cli, StabilizeTable) {
  auto r = run({"stabilize", "--m", "2", "--kmin", "3", "--kmax", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("3\t1\tok\n4\t2\tok\n5\t2\tok\n"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("seconds"), std::string::npos);
}

TEST(Cli, VerifyOrderCombinatoricsOnCorpus) {
  auto r = run({"verify", "order-combinatorics", "--corpus", data("posets")});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("result: PASS"), std::string::npos);
}
