#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "commands.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"bigm1"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code =
      bigm1::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("table prints the sequence and a manifest") {
  const auto r = run_cli({"table", "--alpha", "0", "--beta", "0", "--c", "2", "--nmax", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("-9/4 + 1/2*x + x^2") != std::string::npos);
  CHECK(r.out.find("1/4") != std::string::npos);  // u_2
  CHECK(r.err.find("\"outcome\":\"pass\"") != std::string::npos);
}

TEST_CASE("table --json carries exact coefficient strings") {
  const auto r = run_cli({"table", "--alpha", "-1", "--beta", "1/2", "--c", "2", "--nmax",
                          "1", "--json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["rows"][1]["Q"] == nlohmann::json::array({"-1", "1"}));
  CHECK(doc["manifest"]["outcome"] == "pass");
}

TEST_CASE("table exit codes: usage and degenerate denominators") {
  CHECK(run_cli({"table", "--alpha", "0.5", "--beta", "0", "--c", "2", "--nmax", "1"}).code == 1);
  CHECK(run_cli({"table", "--alpha", "0", "--beta", "0", "--c", "2", "--nmax", "notanint"}).code ==
        1);
  // alpha + beta + 2 = 0 at n = 0
  const auto r = run_cli({"table", "--alpha", "0", "--beta", "-2", "--c", "2", "--nmax", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("n=0") != std::string::npos);
}

TEST_CASE("identical invocations emit byte-identical JSON") {
  const auto a = run_cli({"verify", "--suite", "lemma3", "--N", "1", "--beta", "1/2", "--c",
                          "2", "--mmax", "4"});
  const auto b = run_cli({"verify", "--suite", "lemma3", "--N", "1", "--beta", "1/2", "--c",
                          "2", "--mmax", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["all_ok"] == true);
  CHECK(doc["cases"].size() == 5);
}

TEST_CASE("verify suites succeed on their documented grids") {
  CHECK(run_cli({"verify", "--suite", "hyper", "--alpha", "1/2", "--beta", "0", "--c", "2",
                 "--nmax", "8"}).code == 0);
  CHECK(run_cli({"verify", "--suite", "lemma1", "--nmax", "4", "--Nmax", "2"}).code == 0);
  CHECK(run_cli({"verify", "--suite", "lemma2", "--kind", "beta", "--N", "1", "--alpha", "1/2",
                 "--c", "3", "--nmax", "6"}).code == 0);
  CHECK(run_cli({"verify", "--suite", "norms", "--alpha", "0", "--beta", "0", "--c", "2",
                 "--nmax", "12"}).code == 0);
  CHECK(run_cli({"verify", "--suite", "remark2", "--N", "0", "--beta", "0", "--c", "-2",
                 "--jmax", "5"}).code == 0);
}

TEST_CASE("verify norms falls back to the eps route at degenerate parameters") {
  const auto r = run_cli({"verify", "--suite", "norms", "--alpha", "-3", "--beta", "1", "--c",
                          "2", "--nmax", "8"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["cases"][0]["route"] == "eps-limit");
}

TEST_CASE("verify usage errors") {
  CHECK(run_cli({"verify", "--suite", "nope"}).code == 1);
  CHECK(run_cli({"verify", "--suite", "lemma3", "--kind", "alpha", "--N", "1", "--c", "2"}).code ==
        1);  // missing free parameter --beta
}

TEST_CASE("gram standard mode and its guards") {
  const auto r = run_cli({"gram", "--mode", "standard", "--alpha", "1/2", "--beta", "0", "--c",
                          "2", "--nmax", "3", "--tol", "1e-8"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["entries"].size() == 16);
  CHECK(doc["manifest"]["tol"] == "1e-08");

  CHECK(run_cli({"gram", "--mode", "standard", "--alpha", "0", "--beta", "0", "--c", "1/2",
                 "--nmax", "2", "--tol", "1e-8"}).code == 2);
}

TEST_CASE("gram degenerate mode") {
  const auto r = run_cli({"gram", "--mode", "degenerate", "--kind", "alpha", "--N", "1",
                          "--beta", "1/2", "--c", "-2", "--nmax", "6", "--tol", "1e-8"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["manifest"]["params"]["kind"] == "alpha");
  CHECK(doc["entries"].size() == 49);
}

TEST_CASE("gram degenerate rejects inadmissible flipped parameters") {
  // original c = 2 flips to -2 < 1: the continuous functional has no support
  const auto r = run_cli({"gram", "--mode", "degenerate", "--kind", "alpha", "--N", "0",
                          "--beta", "1/2", "--c", "2", "--nmax", "3", "--tol", "1e-8"});
  CHECK(r.code == 2);
}

TEST_CASE("verify hyper reports degenerate parameters as a domain error") {
  const auto r = run_cli({"verify", "--suite", "hyper", "--alpha", "-1", "--beta", "1/2",
                          "--c", "2", "--nmax", "3"});
  CHECK(r.code == 2);
}
