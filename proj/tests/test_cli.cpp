// Copyright 2026 The primq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "primq/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = primq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const auto r = run(args);
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j.at("version") == "0.1.0");
  CHECK(j.contains("seed"));
  CHECK(j.contains("wall_time_ms"));
  return j;
}

std::string without_time(json j) {
  j.erase("wall_time_ms");
  return j.dump();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("classical gen") {
  for (int seed = 0; seed < 8; ++seed) {
    const auto j = run_json({"classical", "gen", "--n", "4", "--seed", std::to_string(seed)});
    CHECK((j.at("poly") == "0x13" || j.at("poly") == "0x19"));
    CHECK(j.at("seed") == seed);
    CHECK(j.at("expected_trials").get<double>() == doctest::Approx(4.0 * 15 / 8));
  }
  CHECK(run_json({"classical", "gen", "--n", "1", "--seed", "5"}).at("poly") == "0x3");
  const auto a = run_json({"classical", "gen", "--n", "10", "--seed", "1"});
  const auto b = run_json({"classical", "gen", "--n", "10", "--seed", "1"});
  CHECK(without_time(a) == without_time(b));
  const auto text = run({"classical", "gen", "--n", "10", "--seed", "1"});
  CHECK(text.code == 0);
  CHECK(text.out.rfind(a.at("poly").get<std::string>() + "\n", 0) == 0);
  CHECK(run({"classical", "gen", "--n", "80"}).code == 4);
  CHECK(run({"classical", "gen", "--n", "0"}).code == 3);
}

TEST_CASE("generated seed is echoed") {
  const auto j = run_json({"classical", "gen", "--n", "6"});
  const auto again = run_json({"classical", "gen", "--n", "6", "--seed", std::to_string(j.at("seed").get<std::uint64_t>())});
  CHECK(without_time(j) == without_time(again));
}

TEST_CASE("classical test") {
  const auto j = run_json({"classical", "test", "--poly", "0x1F"});
  CHECK(j.at("irreducible") == true);
  CHECK(j.at("primitive") == false);
  CHECK(j.at("order_of_x") == 5);
  CHECK(run_json({"classical", "test", "--poly", "0x13"}).at("primitive") == true);
  CHECK(run({"classical", "test", "--poly", "0xZZ"}).code == 3);
  CHECK(run({"classical", "test", "--poly", "13"}).out == run({"classical", "test", "--poly", "0x13"}).out);
  CHECK(run({"classical", "test", "--poly", "0x"}).code == 3);
}

TEST_CASE("quantum order-test") {
  const auto j = run_json({"quantum", "order-test", "--poly", "0x1F", "--seed", "42"});
  CHECK(j.at("verdict") == "NOT_PRIMITIVE");
  CHECK(j.at("r") == 5);
  CHECK(j.at("N") == 15);
  for (const auto& t : j.at("trials")) CHECK(t.at("l").get<int>() % 3 == 0);
  const auto p = run_json({"quantum", "order-test", "--poly", "0x13", "--seed", "1", "--backend", "gates"});
  CHECK(p.at("verdict") == "PRIMITIVE");
  const auto again = run_json({"quantum", "order-test", "--poly", "0x1F", "--seed", "42"});
  CHECK(without_time(j) == without_time(again));

  const auto reducible = run({"quantum", "order-test", "--poly", "0x11", "--json"});
  CHECK(reducible.code == 3);
  const auto err = json::parse(reducible.err);
  CHECK(err.at("exit_code") == 3);
  CHECK(err.at("error") == "invalid_input");
  CHECK(run({"quantum", "order-test", "--poly", "0x13", "--backend", "qpu"}).code == 3);

  // A single trial that lands on l = 0 leaves the order open.
  bool undecided = false;
  for (int seed = 0; seed < 200 && !undecided; ++seed)
    undecided = run({"quantum", "order-test", "--poly", "0x1F", "--trials", "1", "--seed", std::to_string(seed)}).code == 2;
  CHECK(undecided);
}

TEST_CASE("quantum element-search") {
  const auto j = run_json({"quantum", "element-search", "--p", "2", "--m", "1", "--n", "8", "--D", "7", "--L", "3",
                           "--seed", "7"});
  CHECK(j.at("field") == "GF(2^8)");
  CHECK(j.contains("alpha"));
  CHECK(j.contains("minpoly"));
  CHECK(j.at("candidates_tried").get<int>() >= 1);
  for (const auto& t : j.at("tests")) {
    CHECK(t.contains("stage"));
    CHECK(t.contains("w"));
    CHECK(t.contains("outcome"));
    CHECK(t.contains("prob"));
  }
  const auto again = run_json({"quantum", "element-search", "--n", "8", "--seed", "7"});
  CHECK(without_time(j) == without_time(again));
  CHECK(run({"quantum", "element-search", "--n", "30"}).code == 4);
  CHECK(run({"quantum", "element-search", "--p", "4", "--n", "2"}).code == 3);
}

TEST_CASE("circuit build-ux") {
  const auto r = run({"circuit", "build-ux", "--poly", "0x3B", "--emit", "text"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int cnot = 0, swap = 0;
  while (std::getline(lines, line)) {
    cnot += line.rfind("CNOT ", 0) == 0;
    swap += line.rfind("SWAP ", 0) == 0;
  }
  CHECK(cnot == 3);
  CHECK(swap == 4);
  const auto j = json::parse(run({"circuit", "build-ux", "--poly", "0x3B", "--emit", "json"}).out);
  CHECK(j.at("counts").at("CNOT") == 3);
  CHECK(j.at("counts").at("SWAP") == 4);
  CHECK(j.at("version") == "0.1.0");
  CHECK(run({"circuit", "build-ux", "--poly", "0x3A"}).code == 3);
}

TEST_CASE("stats") {
  const auto a = run({"stats", "coprime", "--r", "1023", "--L", "2,3", "--samples", "2000", "--seed", "4"});
  REQUIRE(a.code == 0);
  std::istringstream lines(a.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "r,L,samples,estimate,stderr,seed");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.rfind("1023,", 0) == 0);
  }
  CHECK(rows == 2);
  CHECK(run({"stats", "coprime", "--r", "1023", "--L", "2,3", "--samples", "2000", "--seed", "4"}).out == a.out);

  const auto pr2 = run({"stats", "pr2", "--r-min", "1", "--r-max", "3", "--seed", "0"});
  CHECK(pr2.out == "r,L,samples,estimate,stderr,seed\n1,2,0,1,0,0\n2,2,0,0.75,0,0\n3,2,0,0.7777777778,0,0\n");
  const auto fig = run({"stats", "fig2", "--count", "5", "--samples", "1000", "--seed", "2"});
  CHECK(fig.code == 0);
  CHECK(std::count(fig.out.begin(), fig.out.end(), '\n') == 6);
  CHECK(run({"stats", "coprime", "--r", "0", "--L", "2"}).code == 3);
}

TEST_CASE("output file") {
  const auto path = (std::filesystem::temp_directory_path() / "primq_cli_out.txt").string();
  const auto r = run({"circuit", "build-ux", "--poly", "0x13", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream body;
  body << f.rdbuf();
  CHECK(body.str() == run({"circuit", "build-ux", "--poly", "0x13"}).out);
  std::remove(path.c_str());
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 3);
  CHECK(run({"bogus"}).code == 3);
  CHECK(run({"classical", "gen", "--n", "4", "--json", "--csv"}).code == 3);
}

}  // TEST_SUITE
