#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "process.hpp"

using testsupport::run_cli;

TEST_CASE("verify exit codes") {
  const auto ok = run_cli("verify --theorem 1 --n 3..20 --jobs 2");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("PASS n=20") != std::string::npos);
  CHECK(run_cli("verify --theorem 1 --n 2..2").exit_code == 2);
  CHECK(run_cli("verify --theorem 1 --n 5..4").exit_code == 2);
  CHECK(run_cli("verify --theorem 2 --n 4").exit_code == 2);
  CHECK(run_cli("verify --theorem 3 --n 4").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("verify output is independent of thread count") {
  const auto one = run_cli("verify --theorem 2 --m 1..6 --n 2..9 --format csv --jobs 1");
  const auto many = run_cli("verify --theorem 2 --m 1..6 --n 2..9 --format csv --jobs 4");
  CHECK(one.exit_code == 0);
  CHECK(one.out == many.out);
  CHECK(one.out.rfind("instance,lhs,rhs,pass\n", 0) == 0);
}

TEST_CASE("verify JSON report") {
  const auto r = run_cli("verify --theorem 2 --m 3 --n 4 --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["reports"][0]["lhs"] == "7/8");
  CHECK(j["reports"][0]["rhs"] == "7/8");
}

TEST_CASE("jobs from the environment") {
  const auto r = run_cli("verify --theorem 1 --n 3..5");
  const std::string env = "HYPERORDER_JOBS=3 ";
  const std::string cmd = env + HYPERORDER_CLI + " verify --theorem 1 --n 3..5";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[256];
  while (fgets(buf, sizeof buf, pipe)) out += buf;
  CHECK(pclose(pipe) == 0);
  CHECK(out == r.out);
}

TEST_CASE("out file") {
  const std::string path = "cli_out_test.json";
  const auto r = run_cli("count --family k12 --m 2 --n 5 --method both --format json --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream file(path);
  std::stringstream ss;
  ss << file.rdbuf();
  const auto j = nlohmann::json::parse(ss.str());
  CHECK(j["results"]["brute"]["probability"] == "14/17");
  CHECK(j["match"] == true);
  std::remove(path.c_str());
}

TEST_CASE("count") {
  const auto r = run_cli("count --family k3 --n 6 --method both");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("18/19") != std::string::npos);
  CHECK(r.out.find("2304854534062080000") != std::string::npos);
  CHECK(r.out.find("match") != std::string::npos);
  const auto cap = run_cli("count --family k3 --n 7 --method brute");
  CHECK(cap.exit_code == 2);
  CHECK(cap.out.find("capacity") != std::string::npos);
  CHECK(run_cli("count --family k3 --n 30 --method formula").exit_code == 0);
  CHECK(run_cli("count --family k12 --n 3").exit_code == 2);
}

TEST_CASE("gosper") {
  const auto fam = run_cli("gosper --family t1 --n 6");
  CHECK(fam.exit_code == 0);
  CHECK(fam.out.find("closed form = 3/2") != std::string::npos);
  const auto one = run_cli("gosper --ratio 1");
  CHECK(one.exit_code == 0);
  CHECK(one.out == "R(k) = k\n");
  const auto none = run_cli("gosper --ratio 'k/(k+1)'");
  CHECK(none.exit_code == 0);
  CHECK(none.out == "not summable\n");
  CHECK(run_cli("gosper --ratio 'k/('").exit_code == 2);
  CHECK(run_cli("gosper").exit_code == 2);
  CHECK(run_cli("gosper --family t2 --m 4 --n 9 --format json").exit_code == 0);
}
