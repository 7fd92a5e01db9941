#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "graver/cli.hpp"
#include "support.hpp"

using namespace graver;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ("graver_cli_" + std::string(::testing::UnitTest::GetInstance()
                                            ->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "graver");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return cli_main(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  nlohmann::json stats(const std::string& p) const { return nlohmann::json::parse(slurp(p)); }

  fs::path dir_;
  std::ostringstream out_, err_;
};

}  // namespace

TEST_F(Cli, GenTableThenSymmetricFastOnThreeByThree) {
  ASSERT_EQ(run({"gen-table", "3", "3", "--matrix-out", path("t.mat"), "--sym-out", path("t.sym")}), 0);
  ASSERT_EQ(run({"graver-sym", "--matrix", path("t.mat"), "--symmetry", path("t.sym"),
                 "--algorithm", "fast", "--output", path("t.gra"), "--reps", path("t.rep"),
                 "--stats", path("t.json")}),
            0)
      << err_.str();
  const auto s = stats(path("t.json"));
  EXPECT_EQ(s["graver_size_up_to_sign"], 15);
  EXPECT_EQ(s["num_representatives"], 2);
  EXPECT_EQ(s["group_order"], 72);
  EXPECT_EQ(s["orbit_sizes"].size(), 2u);
  EXPECT_TRUE(s.contains("runtime_ms"));
  EXPECT_EQ(s["algorithm"], "sym-fast");
  const auto gra = matrix_cast<std::int64_t>(read_matrix(path("t.gra")));
  EXPECT_EQ(std::set<testing_support::V>(gra.rows.begin(), gra.rows.end()),
            testing_support::known_3x3_up_to_sign());
  EXPECT_TRUE(std::is_sorted(gra.rows.begin(), gra.rows.end()));
  EXPECT_EQ(read_matrix(path("t.rep")).num_rows(), 2u);
}

TEST_F(Cli, OutputDoesNotDependOnAlgorithmOrInput) {
  ASSERT_EQ(run({"gen-table", "2", "3", "--matrix-out", path("t.mat"), "--sym-out", path("t.sym")}), 0);
  ASSERT_EQ(run({"kernel", "--matrix", path("t.mat"), "--output", path("t.lat")}), 0);
  ASSERT_EQ(run({"graver", "--matrix", path("t.mat"), "--algorithm", "pottier", "--output", path("a.gra")}), 0);
  ASSERT_EQ(run({"graver", "--lattice", path("t.lat"), "--algorithm", "fast", "--output", path("b.gra")}), 0);
  ASSERT_EQ(run({"graver-sym", "--matrix", path("t.mat"), "--symmetry", path("t.sym"), "--algorithm",
                 "pottier", "--output", path("c.gra"), "--reps", path("c.rep")}),
            0);
  ASSERT_EQ(run({"graver", "--matrix", path("t.mat"), "--output", path("d.gra"), "--precision", "big"}), 0);
  EXPECT_EQ(slurp(path("a.gra")), slurp(path("b.gra")));
  EXPECT_EQ(slurp(path("a.gra")), slurp(path("c.gra")));
  EXPECT_EQ(slurp(path("a.gra")), slurp(path("d.gra")));
}

TEST_F(Cli, SignedOutputHasBothSigns) {
  ASSERT_EQ(run({"gen-table", "3", "3", "--matrix-out", path("t.mat"), "--sym-out", path("t.sym")}), 0);
  ASSERT_EQ(run({"graver", "--matrix", path("t.mat"), "--output", path("t.gra"), "--signed"}), 0);
  EXPECT_EQ(read_matrix(path("t.gra")).num_rows(), 30u);
}

TEST_F(Cli, OrbitsSubcommand) {
  ASSERT_EQ(run({"gen-table", "3", "3", "--matrix-out", path("t.mat"), "--sym-out", path("t.sym")}), 0);
  ASSERT_EQ(run({"graver", "--matrix", path("t.mat"), "--output", path("t.gra")}), 0);
  ASSERT_EQ(run({"orbits", "--vectors", path("t.gra"), "--symmetry", path("t.sym"), "--reps-out",
                 path("t.rep"), "--stats", path("t.json")}),
            0);
  const auto s = stats(path("t.json"));
  EXPECT_EQ(s["num_representatives"], 2);
  EXPECT_EQ(s["graver_size_up_to_sign"], 15);
  EXPECT_EQ(s["group_order"], 72);
}

TEST_F(Cli, CheckCertifiesAndRejects) {
  ASSERT_EQ(run({"gen-table", "3", "3", "--matrix-out", path("t.mat"), "--sym-out", path("t.sym")}), 0);
  ASSERT_EQ(run({"graver", "--matrix", path("t.mat"), "--output", path("t.gra")}), 0);
  EXPECT_EQ(run({"check", "--graver", path("t.gra"), "--matrix", path("t.mat")}), 0) << err_.str();
  EXPECT_EQ(run({"check", "--graver", path("t.gra"), "--matrix", path("t.mat"), "--bound", "2"}), 0);

  auto G = read_matrix(path("t.gra"));
  auto doubled = G;
  doubled.rows[3] *= BigInt(2);
  write_matrix(path("doubled.gra"), doubled);
  EXPECT_EQ(run({"check", "--graver", path("doubled.gra"), "--matrix", path("t.mat")}), 4);
  EXPECT_NE(err_.str().find("verification"), std::string::npos);

  auto missing = G;
  missing.rows.pop_back();
  write_matrix(path("missing.gra"), missing);
  EXPECT_EQ(run({"check", "--graver", path("missing.gra"), "--matrix", path("t.mat")}), 4);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run({}), 1);
  EXPECT_EQ(run({"graver", "--output", path("x.gra")}), 1);
  EXPECT_EQ(run({"graver", "--matrix", "a", "--lattice", "b", "--output", path("x.gra")}), 1);
  EXPECT_EQ(run({"graver", "--matrix", path("t.mat"), "--output", path("x.gra"), "--algorithm", "x"}), 1);
  EXPECT_EQ(run({"nonsense"}), 1);
  EXPECT_EQ(run({"--help"}), 0);

  EXPECT_EQ(run({"graver", "--matrix", path("missing.mat"), "--output", path("x.gra")}), 2);
  { std::ofstream(path("bad.mat")) << "2 2\n1 1\n1 q\n"; }
  EXPECT_EQ(run({"graver", "--matrix", path("bad.mat"), "--output", path("x.gra")}), 2);
  EXPECT_NE(err_.str().find("line 3"), std::string::npos) << err_.str();
  EXPECT_EQ(run({"gen-table", "3", "1", "--matrix-out", path("t.mat"), "--sym-out", path("t.sym")}), 2);

  ASSERT_EQ(run({"gen-table", "3", "3", "--matrix-out", path("t.mat"), "--sym-out", path("t.sym")}), 0);
  { std::ofstream(path("bad.sym")) << "1 9\n2 1 3 4 5 6 7 8 9\n"; }
  EXPECT_EQ(run({"graver-sym", "--matrix", path("t.mat"), "--symmetry", path("bad.sym"), "--output",
                 path("x.gra"), "--reps", path("x.rep")}),
            2);
  { std::ofstream(path("dup.sym")) << "1 9\n1 1 3 4 5 6 7 8 9\n"; }
  EXPECT_EQ(run({"graver-sym", "--matrix", path("t.mat"), "--symmetry", path("dup.sym"), "--output",
                 path("x.gra"), "--reps", path("x.rep")}),
            2);
  EXPECT_EQ(run({"gen-table", "1000", "1000", "2", "--matrix-out", path("x.mat"), "--sym-out",
                 path("x.sym")}),
            3);
}

TEST_F(Cli, PrecisionFallsBackToBigIntegers) {
  // The pair sum of (2^62, 2^62) with itself does not fit in int64.
  { std::ofstream(path("big.lat")) << "1 2\n4611686018427387904 4611686018427387904\n"; }
  EXPECT_EQ(run({"graver", "--lattice", path("big.lat"), "--output", path("i.gra"), "--precision",
                 "int64"}),
            3);
  ASSERT_EQ(run({"graver", "--lattice", path("big.lat"), "--output", path("a.gra"), "--stats",
                 path("a.json")}),
            0)
      << err_.str();
  EXPECT_EQ(stats(path("a.json"))["precision"], "bigint");
  ASSERT_EQ(run({"graver", "--lattice", path("big.lat"), "--output", path("b.gra"), "--precision",
                 "big"}),
            0);
  EXPECT_EQ(slurp(path("a.gra")), slurp(path("b.gra")));
  EXPECT_EQ(slurp(path("a.gra")), "1 2\n4611686018427387904 4611686018427387904\n");
}

TEST_F(Cli, ThreadsDoNotChangeOutputs) {
  ASSERT_EQ(run({"gen-table", "3", "3", "2", "--matrix-out", path("t.mat"), "--sym-out", path("t.sym")}), 0);
  for (const char* threads : {"1", "4"}) {
    ASSERT_EQ(run({"graver-sym", "--matrix", path("t.mat"), "--symmetry", path("t.sym"), "--output",
                   path(std::string("t") + threads + ".gra"), "--reps",
                   path(std::string("t") + threads + ".rep"), "--threads", threads}),
              0);
  }
  EXPECT_EQ(slurp(path("t1.gra")), slurp(path("t4.gra")));
  EXPECT_EQ(slurp(path("t1.rep")), slurp(path("t4.rep")));
}
