#include "charprod/cli.hpp"
#include "charprod/error.hpp"
#include "charprod/zoo.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

using namespace charprod;

namespace {

struct Result {
  int status;
  std::string out, err;
};

Result run_args(cli::Command c, std::optional<std::string> zoo, std::optional<std::string> chi = {},
                unsigned n = 0) {
  cli::RunConfig config;
  config.command = c;
  config.zoo = std::move(zoo);
  if (chi)
    config.chi = cli::parse_chi_selector(*chi);
  config.pmax_n = n;
  std::ostringstream out, err;
  const int s = cli::run(config, out, err);
  return {s, out.str(), err.str()};
}

} // namespace

TEST(Cli, EtaGolden) {
  const auto r = run_args(cli::Command::eta, "extraspecial:3", "deg=3");
  EXPECT_EQ(r.status, cli::exit_ok);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "eta=8");
}

TEST(Cli, PmaxGolden) {
  const auto r = run_args(cli::Command::pmax, std::nullopt, std::nullopt, 2);
  EXPECT_EQ(r.status, cli::exit_ok);
  EXPECT_EQ(r.out, "p(2)=2\n");
}

TEST(Cli, DecomposeA6) {
  const auto r = run_args(cli::Command::decompose, "A6", "deg=10");
  EXPECT_EQ(r.status, cli::exit_ok);
  EXPECT_EQ(r.out, "chi=6 deg=10 eta=6 decomp= 1*1 + 2*1 + 2*2 + 2*3 + 2*4 + 3*5 + 2*6\ncoeffs=1,2,2,2,2,3,2\n");
}

TEST(Cli, TableS3) {
  const auto r = run_args(cli::Command::table, "S3");
  EXPECT_EQ(r.out, "irr 3 classes 3 order 6 exponent 6\n1 1 1\n1 1 -1\n2 -1 0\n");
}

TEST(Cli, ChainAndVerify) {
  const auto chain = run_args(cli::Command::chain, "extraspecial:3", "deg=3");
  EXPECT_EQ(chain.status, cli::exit_ok);
  EXPECT_NE(chain.out.find("k=1"), std::string::npos);
  const auto verify = run_args(cli::Command::verify, "SL(2,3)");
  EXPECT_EQ(verify.status, cli::exit_ok);
  EXPECT_EQ(std::count(verify.out.begin(), verify.out.end(), '\n'), 7 * 11);
  const auto a6 = run_args(cli::Command::verify, "A6", "row=6");
  EXPECT_EQ(a6.status, cli::exit_ok);
  EXPECT_NE(a6.out.find("theorem-C group=A6 chi=6 status=hypotheses-not-met detail=hypotheses violated"),
            std::string::npos);
}

TEST(Cli, Errors) {
  EXPECT_EQ(run_args(cli::Command::table, "Nope").status, cli::exit_usage);
  EXPECT_EQ(run_args(cli::Command::eta, "S3", "row=9").status, cli::exit_usage);
  EXPECT_EQ(run_args(cli::Command::eta, "S3", "deg=5").status, cli::exit_usage);
  EXPECT_EQ(run_args(cli::Command::table, std::nullopt).status, cli::exit_usage);
  EXPECT_EQ(run_args(cli::Command::pmax, std::nullopt, std::nullopt, 0).status, cli::exit_usage);
  EXPECT_THROW(cli::parse_chi_selector("deg"), Error);
  EXPECT_THROW(cli::parse_chi_selector("col=1"), Error);
  EXPECT_THROW(cli::parse_chi_selector("row=-1"), Error);

  cli::RunConfig missing;
  missing.command = cli::Command::table;
  missing.file = "/nonexistent/group.cayley";
  std::ostringstream out, err;
  EXPECT_EQ(cli::run(missing, out, err), cli::exit_usage);
  EXPECT_FALSE(err.str().empty());
}

TEST(Cli, FileInput) {
  const std::string path = ::testing::TempDir() + "charprod_s3.cayley";
  {
    std::ofstream f(path);
    f << to_cayley_text(from_label("S3"));
  }
  cli::RunConfig config;
  config.command = cli::Command::table;
  config.file = path;
  std::ostringstream out, err;
  EXPECT_EQ(cli::run(config, out, err), cli::exit_ok);
  EXPECT_EQ(out.str(), run_args(cli::Command::table, "S3").out);
  std::remove(path.c_str());
}

TEST(Cli, Deterministic) {
  EXPECT_EQ(run_args(cli::Command::verify, "GL(2,3)").out, run_args(cli::Command::verify, "GL(2,3)").out);
  EXPECT_EQ(run_args(cli::Command::chain, "D4xQ8").out, run_args(cli::Command::chain, "D4xQ8").out);
}
