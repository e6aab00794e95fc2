#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "cli.hpp"

using qcw::cli::Outcome;
using qcw::cli::run;

namespace {

const std::string kSamples = QCW_SAMPLES_DIR;

std::string sample(const std::string& name) { return kSamples + "/" + name; }

Outcome qcw_run(std::vector<std::string> args) { return run(args); }

// Every successful invocation used in the round-trip test.
std::vector<std::vector<std::string>> good_invocations() {
  return {
      {"rank", sample("tsr.formula")},
      {"rank", "--catalogue"},
      {"group", "invariants", sample("relations.mat")},
      {"reduce", "abelian-fin", "101;0", "--stage", "6", "--invariants"},
      {"reduce", "group_fin", ";1", "--invariants"},
      {"reduce", "AB_DIVISIBLE", "1;0"},
      {"reduce", "lattice-fin", "0;10", "--stage", "5"},
      {"k0", "2,5"},
      {"k0", "1,2", "--rank-bound", "3"},
      {"correct-proj", sample("almost_proj.cmat")},
      {"correct-proj", "--random", "4", "--seed", "7"},
      {"tree", "rank", sample("convergent.aut")},
      {"tree", "countable", sample("convergent.aut")},
      {"tree", "dist", sample("convergent.aut"), sample("cylinder1.step")},
      {"encode", sample("z2.cong")},
      {"sofic", "verify", sample("z2.table"), sample("z2.map"), "--eps", "1/4"},
      {"sofic", "verify", sample("z2.table"), sample("z2.map"), "--eps", "0"},
      {"sofic", "search", sample("z2.table"), "--dmax", "3"},
      {"sofic", "search", sample("z2.table"), "--dmax", "1"},
  };
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("qcw_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, RankSample) {
  const auto o = qcw_run({"rank", sample("tsr.formula")});
  EXPECT_EQ(o.exit_code, 0);
  EXPECT_EQ(o.out, "Pi0_2\n");
}

TEST(Cli, K0) {
  const auto o = qcw_run({"k0", "2,5"});
  EXPECT_EQ(o.exit_code, 0);
  EXPECT_EQ(o.out, "Z^2\n");
  EXPECT_EQ(qcw_run({"k0", "1,1,1", "--rank-bound", "2"}).exit_code, 3);
  EXPECT_EQ(qcw_run({"k0", "1,,1"}).exit_code, 2);
}

TEST(Cli, MissingFileIsInputError) {
  const auto o = qcw_run({"rank", "missing.formula"});
  EXPECT_EQ(o.exit_code, 2);
  EXPECT_TRUE(o.out.empty());
  EXPECT_NE(o.err.find("missing.formula"), std::string::npos);
}

TEST(Cli, GroupInvariants) {
  EXPECT_EQ(qcw_run({"group", "invariants", sample("relations.mat")}).out, "Z/2 x Z/6 x Z/12\n");
}

TEST(Cli, Reduce) {
  const auto o = qcw_run({"reduce", "abelian-fin", "101;0", "--stage", "6", "--invariants"});
  ASSERT_EQ(o.exit_code, 0);
  EXPECT_NE(o.out.find("invariants: Z/2 x Z/2 x Z/2\n"), std::string::npos);
  EXPECT_NE(o.out.find("quotient order: 8\n"), std::string::npos);
  EXPECT_NE(o.out.find("classify: true\n"), std::string::npos);
  EXPECT_NE(qcw_run({"reduce", "ab-torsion", ";0", "--stage", "4"}).out.find("quotient order: infinite"),
            std::string::npos);
  EXPECT_EQ(qcw_run({"reduce", "ring-fin", ";0", "--invariants"}).exit_code, 2);
  EXPECT_EQ(qcw_run({"reduce", "bogus", ";0"}).exit_code, 2);
  EXPECT_EQ(qcw_run({"reduce", "ring-fin", "0"}).exit_code, 2);
  EXPECT_EQ(qcw_run({"reduce", "ring-fin", ";0", "--stage", "0"}).exit_code, 2);
}

TEST(Cli, Tree) {
  const auto r = qcw_run({"tree", "rank", sample("convergent.aut")});
  EXPECT_EQ(r.out, "cb_rank: 2\nkernel: empty\n");
  const auto c = qcw_run({"tree", "countable", sample("convergent.aut")});
  EXPECT_EQ(c.out, "countable: true\nsuperatomic: true\nseparable dual: true\n");
  EXPECT_EQ(qcw_run({"tree", "dist", sample("convergent.aut"), sample("cylinder1.step")}).out, "1\n");
  const auto empty = temp_file("empty.aut", "2 0\n0 0 1\n");
  const auto e = qcw_run({"tree", "rank", empty});
  EXPECT_EQ(e.exit_code, 3);
  EXPECT_TRUE(e.out.empty());
}

TEST(Cli, Encode) {
  const auto o = qcw_run({"encode", sample("z2.cong")});
  ASSERT_EQ(o.exit_code, 0);
  EXPECT_NE(o.out.find("rho: 0 1\n"), std::string::npos);
  const auto partial = temp_file("partial.cong", "0 2\n1 3\nadd 0 0 -> 2\n");
  const auto p = qcw_run({"encode", partial});
  EXPECT_EQ(p.exit_code, 3);
  EXPECT_TRUE(p.out.empty());
}

TEST(Cli, Sofic) {
  EXPECT_EQ(qcw_run({"sofic", "verify", sample("z2.table"), sample("z2.map")}).out, "ok\n");
  const auto bad = qcw_run({"sofic", "verify", sample("z2.table"), sample("z2.map"), "--eps", "0"});
  EXPECT_EQ(bad.exit_code, 0);
  EXPECT_EQ(bad.out.rfind("violated", 0), 0u);
  const auto s = qcw_run({"sofic", "search", sample("z2.table"), "--dmax", "3"});
  EXPECT_EQ(s.out, "found degree 2\n1 0 1\nx 1 0\n");
  EXPECT_EQ(qcw_run({"sofic", "search", sample("z2.table"), "--dmax", "1"}).out, "not found with degree <= 1\n");
  EXPECT_EQ(qcw_run({"sofic", "verify", sample("z2.table"), sample("z2.map"), "--eps", "x"}).exit_code, 2);
}

TEST(Cli, CorrectProjection) {
  const auto o = qcw_run({"correct-proj", sample("almost_proj.cmat")});
  EXPECT_EQ(o.exit_code, 0);
  const auto half = temp_file("half.cmat", "2 2\n0.5 0\n0 0.5\n");
  const auto h = qcw_run({"correct-proj", half});
  EXPECT_EQ(h.exit_code, 3);
  EXPECT_TRUE(h.out.empty());
  EXPECT_EQ(qcw_run({"correct-proj", "--random", "3", "--seed", "5"}).out,
            qcw_run({"correct-proj", "--seed", "5", "--random", "3"}).out);
  EXPECT_EQ(qcw_run({"correct-proj"}).exit_code, 2);
}

TEST(Cli, FormulaErrorsAndNegation) {
  const auto unbound = temp_file("unbound.formula", "A x. clopen(p, y)\n");
  const auto u = qcw_run({"rank", unbound});
  EXPECT_EQ(u.exit_code, 2);
  EXPECT_NE(u.err.find("line 1, column 16"), std::string::npos);
  const auto neg = temp_file("neg.formula", "not (Ec x. closed(p, x))\n");
  EXPECT_EQ(qcw_run({"rank", neg}).exit_code, 2);
  const auto clash = temp_file("clash.formula", "borel@Sigma1_1(a) & borel@Pi1_1(b)\n");
  EXPECT_EQ(qcw_run({"rank", clash}).exit_code, 3);
}

TEST(Cli, MaxLevelAndWarnings) {
  const auto f = temp_file("deep.formula", "A a. E b. A c. E d. closed(p, a, b, c, d)\n");
  const auto o = qcw_run({"rank", f, "--max-level", "3"});
  EXPECT_EQ(o.exit_code, 0);
  EXPECT_EQ(o.out, "Pi0_3\n");
  EXPECT_NE(o.err.find("warning:"), std::string::npos);
  const auto j = qcw_run({"--json", "rank", f, "--max-level", "3"});
  const auto env = nlohmann::json::parse(j.out);
  EXPECT_FALSE(env["warnings"].empty());
  EXPECT_TRUE(env["result"]["saturated"].get<bool>());
  EXPECT_EQ(qcw_run({"rank", f, "--max-level", "0"}).exit_code, 2);
}

TEST(Cli, UsageErrors) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {}, {"bogus"}, {"group"}, {"tree", "rank"}, {"k0"}, {"sofic", "search"}, {"rank", "--seed", "x"}}) {
    const auto o = qcw_run(args);
    EXPECT_EQ(o.exit_code, 2);
    EXPECT_TRUE(o.out.empty());
  }
  const auto help = qcw_run({"--help"});
  EXPECT_EQ(help.exit_code, 0);
  EXPECT_FALSE(help.out.empty());
}

TEST(Cli, JsonRoundTripsToText) {
  for (const auto& args : good_invocations()) {
    const auto text = qcw_run(args);
    ASSERT_EQ(text.exit_code, 0) << args[0] << ": " << text.err;
    auto json_args = args;
    json_args.insert(json_args.begin(), "--json");
    const auto js = qcw_run(json_args);
    ASSERT_EQ(js.exit_code, 0);
    const auto env = nlohmann::json::parse(js.out);
    EXPECT_TRUE(env.contains("subcommand") && env.contains("result") && env.contains("warnings"));
    EXPECT_EQ(qcw::cli::render_text(env), text.out) << args[0];
  }
}

TEST(Cli, NoResultOutputOnFailure) {
  const auto partial = temp_file("partial2.cong", "0 2\n1 3\nadd 0 0 -> 2\n");
  for (const auto& args : std::vector<std::vector<std::string>>{{"rank", "nope"},
                                                                {"--json", "rank", "nope"},
                                                                {"--json", "encode", partial},
                                                                {"--json", "k0", "1,1,1", "--rank-bound", "1"},
                                                                {"group", "invariants", sample("z2.map")}}) {
    const auto o = qcw_run(args);
    EXPECT_NE(o.exit_code, 0);
    EXPECT_TRUE(o.out.empty());
    EXPECT_FALSE(o.err.empty());
  }
}

TEST(CliProcess, ExitCodesAndStreams) {
  const std::string bin = QCW_BINARY;
  const auto out = std::filesystem::temp_directory_path() / "qcw_proc_out";
  const auto err = std::filesystem::temp_directory_path() / "qcw_proc_err";
  auto call = [&](const std::string& args) {
    const std::string cmd = "'" + bin + "' " + args + " >'" + out.string() + "' 2>'" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    std::ifstream o(out), e(err);
    std::stringstream so, se;
    so << o.rdbuf();
    se << e.rdbuf();
    return std::tuple{WEXITSTATUS(status), so.str(), se.str()};
  };
  auto [c1, o1, e1] = call("rank '" + sample("tsr.formula") + "'");
  EXPECT_EQ(c1, 0);
  EXPECT_EQ(o1, "Pi0_2\n");
  auto [c2, o2, e2] = call("k0 2,5");
  EXPECT_EQ(c2, 0);
  EXPECT_EQ(o2, "Z^2\n");
  auto [c3, o3, e3] = call("rank missing.formula");
  EXPECT_EQ(c3, 2);
  EXPECT_TRUE(o3.empty());
  EXPECT_FALSE(e3.empty());
  auto [c4, o4, e4] = call("rank --catalogue");
  EXPECT_EQ(c4, 0);
  EXPECT_NE(o4.find("entries passed"), std::string::npos);
}
