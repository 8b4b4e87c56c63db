#include "commands.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "test_support.hpp"

using namespace primnorm;
using primnorm::testing::corpus_dir;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "primnorm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string corpus_file(const std::string& id) { return (corpus_dir() / (id + ".grp")).string(); }

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("primnorm_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name) << text;
    return (path_ / name).string();
  }
  std::string str() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Cli, NormaliseText) {
  const auto r = run({"normalise", corpus_file("c05"), "--oracle"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("order: 20\n"), std::string::npos);
  EXPECT_NE(r.out.find("branch: small\n"), std::string::npos);
  EXPECT_NE(r.out.find("oracle: agree\n"), std::string::npos);
}

TEST(Cli, NormaliseJson) {
  const auto r = run({"normalise", corpus_file("a05wrc2"), "--format", "json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["order"], "14400");
  EXPECT_EQ(j["branch"], "large-PA");
  EXPECT_EQ(j["params"], nlohmann::json::array({5, 1, 2}));
  EXPECT_EQ(j["cosets"], 4);
}

TEST(Cli, ForcedBranchesAgreeOnASmallLargeGroup) {
  const auto a = run({"normalise", corpus_file("a05_pairs"), "--force-small"});
  const auto b = run({"normalise", corpus_file("a05_pairs"), "--force-large"});
  ASSERT_EQ(a.code, cli::kOk) << a.err;
  ASSERT_EQ(b.code, cli::kOk) << b.err;
  EXPECT_NE(a.out.find("branch: small"), std::string::npos);
  EXPECT_NE(b.out.find("branch: large-AS"), std::string::npos);
  EXPECT_NE(a.out.find("order: 120\n"), std::string::npos);
  EXPECT_NE(b.out.find("order: 120\n"), std::string::npos);
  EXPECT_EQ(run({"normalise", corpus_file("c05"), "--force-small", "--force-large"}).code, cli::kParseError);
  EXPECT_EQ(run({"normalise", corpus_file("c05"), "--force-large"}).code, cli::kPrecondition);
}

TEST(Cli, NormaliseInsideAGroup) {
  TempDir dir;
  const auto a7 = dir.write("a7.grp", "degree: 7\ngen: (1,2,3,4,5,6,7)\ngen: (1,2,3)\n");
  const auto r = run({"normalise", corpus_file("c07"), "--in-group", a7, "--oracle"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("order: 21\n"), std::string::npos);
  EXPECT_NE(r.out.find("oracle: agree\n"), std::string::npos);
}

TEST(Cli, ImprimitiveInputExitsWithBlocks) {
  TempDir dir;
  const auto c6 = dir.write("c6.grp", "degree: 6\ngen: (1,2,3,4,5,6)\n");
  const auto r = run({"normalise", c6});
  EXPECT_EQ(r.code, cli::kPrecondition);
  EXPECT_NE(r.err.find("blocks: {"), std::string::npos) << r.err;
}

TEST(Cli, MalformedFileReportsThePosition) {
  TempDir dir;
  const auto bad = dir.write("bad.grp", "degree: 3\ngen: (1,2\n");
  const auto r = run({"normalise", bad});
  EXPECT_EQ(r.code, cli::kParseError);
  EXPECT_NE(r.err.find(":2:"), std::string::npos) << r.err;
  const auto wrong = dir.write("wrong.grp", "degree: 3\norder: 5\ngen: (1,2,3)\n");
  EXPECT_EQ(run({"classify", wrong}).code, cli::kParseError);
  EXPECT_EQ(run({"normalise", dir.str() + "/missing.grp"}).code, cli::kParseError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kParseError);
}

TEST(Cli, BudgetExceeded) {
  const auto r = run({"normalise", corpus_file("a07"), "--force-small", "--budget", "5"});
  EXPECT_EQ(r.code, cli::kBudget);
  ::setenv(cli::kBudgetEnv, "5", 1);
  EXPECT_EQ(run({"normalise", corpus_file("a07"), "--force-small"}).code, cli::kBudget);
  EXPECT_EQ(run({"normalise", corpus_file("a07"), "--force-small", "--budget", "0"}).code, cli::kOk);
  ::setenv(cli::kBudgetEnv, "lots", 1);
  EXPECT_EQ(run({"normalise", corpus_file("c05")}).code, cli::kParseError);
  ::unsetenv(cli::kBudgetEnv);
}

TEST(Cli, OracleComparison) {
  const Group c5 = primnorm::testing::load("c05").group();
  EXPECT_EQ(cli::oracle_compare(c5, primnorm::testing::load("agl1_05").group()), cli::OracleVerdict::agree);
  EXPECT_EQ(cli::oracle_compare(c5, c5), cli::OracleVerdict::mismatch);
  const Group c11 = primnorm::testing::load("c11").group();
  EXPECT_EQ(cli::oracle_compare(c11, c11), cli::OracleVerdict::skipped);
  EXPECT_EQ(run({"oracle-check", corpus_file("psl2_07")}).code, cli::kOk);
}

TEST(Cli, ClassifySocleBase) {
  const auto c = run({"classify", corpus_file("a05_pairs")});
  EXPECT_EQ(c.code, cli::kOk) << c.err;
  EXPECT_NE(c.out.find("large (5,2,1); almost simple; small (60 < 10000)"), std::string::npos) << c.out;
  const auto j = run({"classify", corpus_file("agl1_08"), "--format", "json"});
  ASSERT_EQ(j.code, cli::kOk);
  const auto parsed = nlohmann::json::parse(j.out);
  EXPECT_EQ(parsed["small"], true);
  EXPECT_EQ(parsed["almost_simple"], false);
  EXPECT_EQ(run({"socle", corpus_file("a05wrc2")}).code, cli::kOk);
  EXPECT_EQ(run({"base", corpus_file("m12")}).code, cli::kOk);
}

TEST(Cli, Bench) {
  TempDir dir;
  const auto empty = run({"bench", dir.str()});
  EXPECT_EQ(empty.code, cli::kOk);
  EXPECT_EQ(empty.out, "file,name,n,order,branch,normaliser_order,nodes,cosets,wall_ms,oracle,error\n");

  std::filesystem::copy_file(corpus_file("c05"), dir.str() + "/c05.grp");
  dir.write("bad.grp", "degree: 3\ngen: (1,2\n");
  const auto rows = cli::bench_directory(dir.str(), {true, 1, 0});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].file, "bad.grp");
  EXPECT_FALSE(rows[0].error.empty());
  EXPECT_EQ(rows[1].normaliser_order, "20");
  EXPECT_EQ(rows[1].oracle, "agree");
  EXPECT_EQ(run({"bench", dir.str() + "/nope"}).code, cli::kParseError);
}
