#include <sstream>

#include "doctest.h"
#include "qwallach/cli.hpp"

using namespace qwallach;
using qwallach::cli::main_entry;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qwallach");
  std::ostringstream out, err;
  const int status = main_entry(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit statuses") {
  CHECK(run_cli({"verify", "hecke-identity", "--n", "3"}).status == cli::kPass);
  CHECK(run_cli({"verify", "lemma3", "--n", "3", "--q", "2,3"}).status == cli::kPass);
  // the strict f1-versus-tau comparison does not hold for n = 3
  CHECK(run_cli({"verify", "structure-constants", "--n", "3", "--q", "2"}).status ==
        cli::kVerificationFailed);
  CHECK(run_cli({"verify", "structure-constants", "--n", "2", "--q", "3"}).status == cli::kPass);
  CHECK(run_cli({}).status == cli::kUsageError);
  CHECK(run_cli({"verify"}).status == cli::kUsageError);
  CHECK(run_cli({"verify", "nope"}).status == cli::kUsageError);
  CHECK(run_cli({"verify", "lemma3", "--n", "3", "--q", "4"}).status == cli::kUsageError);
  CHECK(run_cli({"verify", "lemma3", "--n", "1"}).status == cli::kUsageError);
  CHECK(run_cli({"verify", "lemma3", "--n", "5", "--q", "3"}).status == cli::kUsageError);
  CHECK(run_cli({"verify", "lemma3", "--n", "3", "--budget", "5"}).status == cli::kUsageError);
  CHECK(run_cli({"verify", "lemma3", "--n", "3", "--format", "xml"}).status == cli::kUsageError);
  CHECK(run_cli({"verify", "lemma3", "--n", "3", "--t", "x"}).status == cli::kUsageError);
  CHECK(run_cli({"multiplicities", "--n", "3", "--q", "0"}).status == cli::kUsageError);
  CHECK(run_cli({"--version"}).status == cli::kPass);
}

TEST_CASE("json output") {
  const std::vector<std::string> args{"verify", "factorization", "--n", "3", "--q", "2", "--format", "json"};
  const Result a = run_cli(args);
  const Result b = run_cli(args);
  REQUIRE(a.status == cli::kPass);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j.at("schema") == cli::kJsonSchema);
  CHECK(j.at("tool") == "qwallach");
  CHECK(j.at("overall") == "pass");
  CHECK(j.at("config").at("n") == 3);
  CHECK_FALSE(j.at("checks").empty());
  for (const auto& c : j.at("checks")) {
    CHECK(c.contains("name"));
    CHECK(c.contains("params"));
    CHECK(c.at("pass").is_boolean());
  }

  const Result f = run_cli({"verify", "structure-constants", "--n", "3", "--q", "2", "--format", "json"});
  CHECK(nlohmann::json::parse(f.out).at("overall") == "fail");
}

TEST_CASE("text output") {
  const Result r = run_cli({"multiplicities", "--n", "3", "--q", "2"});
  CHECK(r.status == cli::kPass);
  CHECK(r.out.find("PASS multiplicity") != std::string::npos);
  CHECK(r.out.find("overall: pass") != std::string::npos);
}

TEST_CASE("overall verdict follows the checks") {
  cli::RunConfig config;
  config.command = "span";
  config.n = 3;
  config.qs = {2};
  const cli::Report report = cli::run(config);
  CHECK(report.overall_pass() == all_pass(report.checks));
  CHECK(report.overall_pass());
  config.command = "bogus";
  CHECK_THROWS_AS(cli::validate(config), std::invalid_argument);
}

TEST_CASE("ranges") {
  CHECK(cli::parse_range("1..3") == std::pair{1, 3});
  CHECK(cli::parse_range("2-4") == std::pair{2, 4});
  CHECK(cli::parse_range("5") == std::pair{5, 5});
  CHECK_THROWS(cli::parse_range("3..1"));
  CHECK_THROWS(cli::parse_range(""));
}
