#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "hyperarr/cli.hpp"

using namespace hyperarr;
using ojson = nlohmann::ordered_json;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string data_path(const std::string& name) {
  return std::string(HYPERARR_DATA_DIR) + "/" + name;
}

}  // namespace

TEST(Cli, ChiFromFile) {
  RunResult r = run({"chi", "--file", data_path("example.arr")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "t^2 - 3t + 3")) << r.out;
  EXPECT_TRUE(contains(r.out, "rank 2"));
}

TEST(Cli, ChiMethodsAgree) {
  RunResult r = run({"chi", "--family", "shi", "--n", "3", "--method", "all"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "chi (mobius) = t^3 - 6t^2 + 9t"));
  EXPECT_TRUE(contains(r.out, "chi (delcon) = t^3 - 6t^2 + 9t"));
  EXPECT_TRUE(contains(r.out, "chi (finitefield) = t^3 - 6t^2 + 9t"));
  EXPECT_TRUE(contains(r.out, "agree yes"));
}

TEST(Cli, ChiSingleMethod) {
  RunResult r = run({"chi", "--family", "braid", "--n", "4", "--method", "delcon"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "chi (delcon) = t^4 - 6t^3 + 11t^2 - 6t"));
  EXPECT_FALSE(contains(r.out, "mobius"));
}

TEST(Cli, RegionsCatalan) {
  RunResult r = run({"regions", "--family", "catalan", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "regions 30"));
  EXPECT_TRUE(contains(r.out, "bounded 12"));
  EXPECT_FALSE(contains(r.out, "region +"));  // listing needs --enumerate
}

TEST(Cli, RegionsEnumerate) {
  RunResult r = run({"regions", "--family", "shi", "--n", "2", "--enumerate"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "regions 3"));
  EXPECT_TRUE(contains(r.out, "region +- bounded"));
  EXPECT_TRUE(contains(r.out, "region ++ unbounded"));

  RunResult b = run({"regions", "--family", "shi", "--n", "2", "--enumerate", "--bounded"});
  EXPECT_TRUE(contains(b.out, "region +- bounded"));
  EXPECT_FALSE(contains(b.out, "unbounded"));
}

TEST(Cli, RegionsBudget) {
  RunResult r = run({"regions", "--family", "catalan", "--n", "5", "--enumerate"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.err, "error:"));

  RunResult capped = run({"regions", "--family", "catalan", "--n", "3",
                          "--enumerate", "--max-regions", "5"});
  EXPECT_EQ(capped.code, 1);
}

TEST(Cli, JsonRoundTrip) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"chi", "--family", "braid", "--n", "3", "--method",
                                 "all", "--json"},
        std::vector<std::string>{"regions", "--family", "shi", "--n", "2",
                                 "--enumerate", "--json"},
        std::vector<std::string>{"parking", "--n", "2", "--labels", "--json"},
        std::vector<std::string>{"ballot", "--n", "3", "--enumerate", "--json"},
        std::vector<std::string>{"os", "--file", data_path("os_example.arr"), "--json"},
        std::vector<std::string>{"linial-roots", "--n", "4", "--json"}}) {
    RunResult r = run(args);
    EXPECT_EQ(r.code, 0);
    ojson parsed = ojson::parse(r.out);
    EXPECT_EQ(parsed.dump(2) + "\n", r.out);
  }
}

TEST(Cli, JsonChiPayload) {
  RunResult r = run({"chi", "--family", "braid", "--n", "3", "--json"});
  ojson j = ojson::parse(r.out);
  EXPECT_EQ(j["command"], "chi");
  EXPECT_EQ(j["d"], 3);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["rank"], 2);
  // Rational coefficients ride as strings, constant term first.
  EXPECT_EQ(j["chi"]["mobius"]["coefficients"],
            (std::vector<std::string>{"0", "2", "-3", "1"}));
  EXPECT_EQ(j["chi"]["mobius"]["text"], "t^3 - 3t^2 + 2t");
}

TEST(Cli, JsonRegionsPayload) {
  RunResult r = run({"regions", "--family", "shi", "--n", "2", "--enumerate", "--json"});
  ojson j = ojson::parse(r.out);
  EXPECT_EQ(j["regions"], 3);
  EXPECT_EQ(j["bounded"], 1);
  ASSERT_EQ(j["list"].size(), 3u);
  EXPECT_EQ(j["list"][1]["signs"], "+-");
  EXPECT_EQ(j["list"][1]["bounded"], true);
}

TEST(Cli, Parking) {
  RunResult r = run({"parking", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "parking functions 16"));

  RunResult e = run({"parking", "--n", "2", "--enumerate", "--labels"});
  EXPECT_TRUE(contains(e.out, "1 1\n1 2\n2 1\n"));
  EXPECT_TRUE(contains(e.out, "labels 3"));
  EXPECT_TRUE(contains(e.out, "+- 1 1"));

  EXPECT_EQ(run({"parking", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"parking"}).code, 2);
}

TEST(Cli, Ballot) {
  RunResult r = run({"ballot", "--n", "2", "--enumerate"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "ballot sequences 2"));
  EXPECT_TRUE(contains(r.out, "++--\n+-+-\n"));
}

TEST(Cli, OrlikSolomon) {
  RunResult r = run({"os", "--file", data_path("os_example.arr")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "dims 1 4 5"));
  EXPECT_TRUE(contains(r.out, "hilbert 5x^2 + 4x + 1"));
  EXPECT_TRUE(contains(r.out, "generators 5"));
}

TEST(Cli, LinialRoots) {
  RunResult r = run({"linial-roots", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "verdict ok"));
  EXPECT_TRUE(contains(r.out, "max deviation"));
  // A zero tolerance cannot be met and forces the failure exit code.
  RunResult tight = run({"linial-roots", "--n", "4", "--tol", "0"});
  EXPECT_EQ(tight.code, 1);
  EXPECT_TRUE(contains(tight.out, "verdict fail"));
}

TEST(Cli, Graph) {
  RunResult r = run({"graph", "--file", data_path("triangle.graph")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "vertices 3"));
  EXPECT_TRUE(contains(r.out, "chromatic t^3 - 3t^2 + 2t"));
  EXPECT_TRUE(contains(r.out, "acyclic orientations 6"));

  RunResult c = run({"graph", "--file", data_path("triangle.graph"), "--chromatic"});
  EXPECT_TRUE(contains(c.out, "chromatic"));
  EXPECT_FALSE(contains(c.out, "acyclic"));
}

TEST(Cli, GraphicalFamily) {
  RunResult r = run({"chi", "--family", "graphical", "--graph",
                     data_path("triangle.graph")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "t^3 - 3t^2 + 2t"));
}

TEST(Cli, GenericFamily) {
  RunResult r = run({"chi", "--family", "generic", "--n", "4", "--d", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "t^2 - 4t + 6"));
  EXPECT_EQ(run({"chi", "--family", "generic", "--n", "4"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"chi", "--bogus"}).code, 2);
  EXPECT_EQ(run({"chi"}).code, 2);
  EXPECT_EQ(run({"chi", "--family", "braid"}).code, 2);
  EXPECT_EQ(run({"chi", "--family", "braid", "--n", "x"}).code, 2);
  EXPECT_EQ(run({"chi", "--family", "nosuch", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"chi", "--file", "/nonexistent.arr"}).code, 2);
  EXPECT_EQ(run({"chi", "--file", data_path("example.arr"), "--family", "braid",
                 "--n", "3"}).code, 2);
  EXPECT_EQ(run({"chi", "--family", "braid", "--n", "3", "--method", "nope"}).code, 2);
  EXPECT_EQ(run({"chi", "--family", "braid", "--n"}).code, 2);
  RunResult help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_TRUE(contains(help.out, "usage:"));
}

TEST(Cli, FiniteFieldBudgetExit) {
  // Four good primes with p^3 <= 4 are needed; there are none.
  RunResult r = run({"chi", "--family", "braid", "--n", "3", "--method",
                     "finitefield", "--max-points", "4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.err, "error:"));
}

TEST(Cli, ThreadsFlag) {
  RunResult r = run({"chi", "--family", "braid", "--n", "3", "--method",
                     "finitefield", "--threads", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "t^3 - 3t^2 + 2t"));
}

TEST(Cli, DeterministicOutput) {
  RunResult a = run({"regions", "--family", "catalan", "--n", "2", "--enumerate"});
  RunResult b = run({"regions", "--family", "catalan", "--n", "2", "--enumerate"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, 0);
}
