#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dilemma/cli.hpp"

using namespace dilemma;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "dilemma");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("analyze the figure game") {
  const auto r = run({"analyze", "--n", "25", "--c", "4.2827", "--d", "2.2827"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["game"]["k_star"] == 18);
  CHECK(j["game"]["alpha"].get<double>() == doctest::Approx(2.151392).epsilon(1e-12));
  for (const auto& it : j["structure"].items()) CHECK(it.value() == true);
  CHECK(j["institution"]["regime"] == "Mixed");
}

TEST_CASE("analyze reports constructor errors with exit code 2") {
  const auto r = run({"analyze", "--n", "3", "--c", "10", "--d", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("RejectsDConstraint") != std::string::npos);
  CHECK(r.out.empty());

  CHECK(run({"analyze", "--n", "4", "--c", "10", "--d", "3"}).err.find("RejectsIntegerRatio") !=
        std::string::npos);
  CHECK(run({"analyze", "--n", "25"}).code == 2);
  CHECK(run({"analyze", "--n", "x", "--c", "1", "--d", "1"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("analyze full participation") {
  const auto r = run({"analyze", "--n", "3", "--c", "5", "--d", "2.1129"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["institution"]["regime"] == "FullParticipation");
  CHECK(j["institution"]["t"] == 1.0);
}

TEST_CASE("analyze csv") {
  const auto r = run({"analyze", "--n", "25", "--c", "4.2827", "--d", "2.2827", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  CHECK(ls.front() == "section,field,value");
  CHECK(std::find(ls.begin(), ls.end(), "game,k_star,18") != ls.end());
  CHECK(std::find(ls.begin(), ls.end(), "structure,dominance,true") != ls.end());
  CHECK(run({"analyze", "--n", "25", "--c", "4.2827", "--d", "2.2827", "--format", "xml"}).code == 2);
}

TEST_CASE("table1 rows") {
  const auto r = run({"table1"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 21);
  CHECK(ls[0] == "n,k_star,beta,t,p_A,p_I,p_F,beta_3dp,t_3dp,p_A_3dp,p_I_3dp,p_F_3dp,status");
  // n = 10: k* = 7, beta 0.037, t 0.078
  CHECK(ls[8].starts_with("10,7,"));
  CHECK(ls[8].ends_with(",0.037,0.077,0.000,0.000,0.000,ok"));
  CHECK(ls[15].starts_with("25,17,"));
  CHECK(ls[15].ends_with(",0.002,0.004,0.000,0.000,0.000,ok"));
  CHECK(ls[4].ends_with(",0.236,0.204,0.031,ok"));
  CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("table1 flags bad rows instead of dropping them") {
  const auto r = run({"table1", "--d0", "3", "--n-min", "3", "--n-max", "8"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 7);
  CHECK(ls[1].ends_with(",ok"));
  CHECK(ls[2] == "4,,,,,,,,,,,,error:RejectsIntegerRatio");
  CHECK(ls[6] == "8,,,,,,,,,,,,error:RejectsIntegerRatio");
  CHECK(run({"table1", "--d0", "1.5", "--n-min", "3", "--n-max", "3"}).out.ends_with(
      "3,,,,,,,,,,,,error:RejectsDConstraint\n"));

  const auto j = Json::parse(run({"table1", "--d0", "3", "--n-min", "4", "--n-max", "5",
                                  "--format", "json"}).out);
  CHECK(j[0]["status"] == "error:RejectsIntegerRatio");
  CHECK(j[1]["status"] == "ok");
  CHECK(j[1].contains("p_F"));
}

TEST_CASE("fig1") {
  const auto r = run({"fig1"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 26);
  CHECK(ls[0] == "k,payoff_NC,payoff_C,marker");
  CHECK(std::abs(std::stod(ls[1].substr(2)) - 1.131308) < 1e-12);
  CHECK(ls[1].find(",3.2827") != std::string::npos);
  CHECK(ls[25].starts_with("24,4.2827,6.434092"));
  int marked = 0;
  for (const auto& l : ls) {
    if (l.ends_with(",crossing")) {
      ++marked;
      CHECK(l.starts_with("17,"));
    }
  }
  CHECK(marked == 1);
}

TEST_CASE("fig2") {
  const auto r = run({"fig2"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 99);
  CHECK(ls[1] == "3,1,3,FullParticipation,ok");
  std::vector<double> t;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    std::istringstream row(ls[i]);
    std::string n, tv;
    std::getline(row, n, ',');
    std::getline(row, tv, ',');
    if (!tv.empty()) t.push_back(std::stod(tv));
    if (n == "50") CHECK(std::abs(std::stod(tv) - 0.004) < 1.5e-3);
  }
  // max over n >= N of t(n) never increases with N
  double running = 0.0;
  std::vector<double> env(t.size());
  for (std::size_t i = t.size(); i-- > 0;) env[i] = running = std::max(running, t[i]);
  for (std::size_t i = 1; i < env.size(); ++i) CHECK(env[i] <= env[i - 1]);
}

TEST_CASE("mc determinism and shards") {
  const std::vector<std::string> base = {"mc", "--n", "5", "--seed", "11", "--trials", "200000"};
  auto with = [&](std::vector<std::string> extra) {
    auto a = base;
    a.insert(a.end(), extra.begin(), extra.end());
    return run(a);
  };
  const auto one = with({"--shards", "1"});
  const auto again = with({"--shards", "1"});
  const auto eight = with({"--shards", "8"});
  REQUIRE(one.code == 0);
  CHECK(one.out == again.out);
  CHECK(one.out == eight.out);
  const auto j = Json::parse(one.out);
  CHECK(j[0]["rng_algorithm"] == std::string(kRngAlgorithm));
  CHECK(j[0]["trials"] == 200000);
  CHECK(with({"--shards", "0"}).code == 2);
  CHECK(run({"mc"}).code == 2);
}

TEST_CASE("dynamics") {
  const auto r = run({"dynamics", "--n", "12", "--c", "6", "--d", "2.5", "--seed", "4"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["fixed_point"] == true);
  CHECK(j["equilibrium"] == true);
  CHECK(j["final_nc_count"] == 0);
  CHECK(j["rounds"].get<int>() <= 2);
}

TEST_CASE("dynamics with a population file") {
  const std::string path = "dynamics_population_test.json";
  {
    std::ofstream f(path);
    f << R"({"types":[)";
    for (int i = 0; i < 10; ++i) f << (i ? "," : "") << (i < 6 ? R"({"a":0,"b":1})" : R"({"a":1,"b":0})");
    f << "]}";
  }
  const auto r = run({"dynamics", "--n", "10", "--c", "5", "--d", "3", "--population", path});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["equilibrium"] == true);
  CHECK(run({"dynamics", "--n", "11", "--c", "5", "--d", "3", "--population", path}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("output file") {
  const std::string path = "fig1_test_output.csv";
  const auto r = run({"fig1", "--output", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == run({"fig1"}).out);
  std::remove(path.c_str());
}

TEST_CASE("binary exit codes and logs stay off stdout") {
  const std::string bin = DILEMMA_CLI_PATH;
  CHECK(WEXITSTATUS(std::system((bin + " analyze --n 3 --c 10 --d 1 2>/dev/null >/dev/null").c_str())) == 2);
  CHECK(WEXITSTATUS(std::system((bin + " fig1 >/dev/null").c_str())) == 0);
  const std::string out_path = "cli_log_test.out";
  const int status = std::system(("DILEMMA_LOG=debug " + bin + " mc --n 5 --trials 1000 > " + out_path + " 2>/dev/null").c_str());
  CHECK(WEXITSTATUS(status) == 0);
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(Json::parse(ss.str()).size() == 3);
  std::remove(out_path.c_str());
}
