#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "packcover/cli.hpp"

using namespace packcover;
using namespace packcover::cli;

namespace {

namespace fs = std::filesystem;

std::string sample(const std::string& name) { return std::string(PACKCOVER_SAMPLES_DIR) + "/" + name; }

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(const std::string& line) {
  Run r;
  std::ostringstream o, e;
  r.code = run_cli(split_args(line), o, e);
  r.out = o.str();
  r.err = e.str();
  return r;
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("packcover-test-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
                                                ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

}  // namespace

TEST(Cli, ExactTrianglePackingOnK6) {
  auto r = run("tp --algo exact " + sample("k6.graph"));
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  EXPECT_EQ(j.at("objective"), 2);
  EXPECT_TRUE(j.at("valid").get<bool>());
  EXPECT_EQ(j.at("algorithm"), "exact");
  EXPECT_EQ(j.at("instance_digest").get<std::string>().size(), 16u);
}

TEST(Cli, UnknownAlgorithmIsUsageError) {
  EXPECT_EQ(run("tp --algo magic " + sample("k6.graph")).code, 2);
  EXPECT_EQ(run("sibcover --k 3 " + sample("pqrs.tsv")).code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, MissingInputIsInputError) { EXPECT_EQ(run("tp /nonexistent/file.graph").code, 3); }

TEST(Cli, BudgetExceededExitCode) {
  EXPECT_EQ(run("tp --algo exact --budget-nodes 1 " + sample("k6.graph")).code, 4);
}

TEST(Cli, SibcheckWorkedExample) {
  auto r = run("sibcheck --k 4 --group 1,2,3,4 " + sample("pqrs.tsv"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(r.json().at("feasible").get<bool>());
  auto w = run("sibcheck --k 2 --group 1,4 " + sample("pqrs.tsv"));
  ASSERT_EQ(w.code, 0) << w.err;
  EXPECT_TRUE(w.json().at("feasible").get<bool>());
  EXPECT_TRUE(w.json().contains("witness"));
}

TEST(Cli, SolverCommands) {
  EXPECT_EQ(run("sibcover --k 2 --algo exact " + sample("pqrs.tsv")).json().at("objective"), 2);
  EXPECT_EQ(run("mpc --algo exact " + sample("small.sys")).code, 0);
  auto c = run("cov2 --k 2 --algo exact " + sample("cycle4.sys"));
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(c.json().at("objective"), 1);
}

TEST(Cli, BatchReturnsArray) {
  auto r = run("tp --algo greedy " + sample("k6.graph") + " " + sample("k4.graph"));
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = r.json();
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1].at("objective"), 1);
}

TEST(Cli, VerifyCatchesCorruption) {
  TempDir d;
  ASSERT_EQ(run("tp --algo exact --json " + d.file("sol.json") + " " + sample("k6.graph")).code, 0);
  auto ok = run("verify --instance " + sample("k6.graph") + " --solution " + d.file("sol.json"));
  EXPECT_EQ(ok.code, 0) << ok.err;
  auto j = read_json(d.file("sol.json"));
  j["solution"]["members"][1][0] = j["solution"]["members"][0][0];
  write_file(d.file("bad.json"), j.dump());
  auto bad = run("verify --instance " + sample("k6.graph") + " --solution " + d.file("bad.json"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("violation"), std::string::npos);
}

TEST(Cli, SuiteListing) {
  auto r = run("suite");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("determinism"), std::string::npos);
  EXPECT_NE(r.out.find("all"), std::string::npos);
  EXPECT_EQ(run("suite nosuch").code, 2);
}

TEST(Cli, ReduceTransportRoundTrip) {
  TempDir d;
  auto r = run("reduce lin2-to-tp --m 1 --out " + d.file("r") + " " + sample("two.lin2"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(d.file("r.graph")));
  EXPECT_TRUE(fs::exists(d.file("r.cert.json")));
  write_file(d.file("a.json"), Json{{"kind", "assignment"}, {"values", {1, 0, 0, 1}}}.dump());
  auto t = run("transport --cert " + d.file("r.cert.json") + " --solution " + d.file("a.json") + " --json " +
               d.file("p.json"));
  ASSERT_EQ(t.code, 0) << t.err;
  auto v = run("verify --instance " + d.file("r.graph") + " --solution " + d.file("p.json"));
  EXPECT_EQ(v.code, 0) << v.err;
  auto back = run("transport --cert " + d.file("r.cert.json") + " --solution " + d.file("p.json"));
  ASSERT_EQ(back.code, 0) << back.err;
  EXPECT_EQ(back.json().at("values"), Json({1, 0, 0, 1}));
}

TEST(Cli, CutTransportGivesValidCover) {
  TempDir d;
  ASSERT_EQ(run("reduce cut-to-allele --out " + d.file("c") + " " + sample("k4.graph")).code, 0);
  write_file(d.file("s.json"), Json{{"kind", "bipartition"}, {"sides", {0, 1, 0, 1}}}.dump());
  ASSERT_EQ(run("transport --cert " + d.file("c.cert.json") + " --solution " + d.file("s.json") + " --json " +
                d.file("cover.json"))
                .code,
            0);
  auto v = run("verify --k 2 --instance " + d.file("c.tsv") + " --solution " + d.file("cover.json"));
  EXPECT_EQ(v.code, 0) << v.err;
}

TEST(Cli, SameSeedSameDigests) {
  auto a = run("mpc --algo 2imp --seed 7 " + sample("small.sys")).json();
  auto b = run("mpc --algo 2imp --seed 7 " + sample("small.sys")).json();
  EXPECT_EQ(a.at("solution_digest"), b.at("solution_digest"));
  EXPECT_EQ(strip_timing(a), strip_timing(b));
}
