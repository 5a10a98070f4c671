#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "adm/json_io.hpp"
#include "adm/reduced.hpp"
#include "cli.hpp"

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = adm::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("zpoly text output") {
  auto r = run({"zpoly", "4", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "u1*u3 + 1/2*u2^2\n");
  CHECK(r.err.empty());

  CHECK(run({"zpoly", "7", "2"}).out == "u1*u6 + u2*u5 + u3*u4\n");
  CHECK(run({"zpoly", "3", "3"}).out == "1/6*u1^3\n");
}

TEST_CASE("apoly text output") {
  auto r = run({"apoly", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "u1*F^(1)(u0)\n");
  CHECK(run({"apoly", "0"}).out == "F(u0)\n");
  auto r3 = run({"apoly", "3"});
  CHECK(r3.out ==
        "u3*F^(1)(u0) + u1*u2*F^(2)(u0) + 1/6*u1^3*F^(3)(u0)\n");
}

TEST_CASE("count output") {
  CHECK(run({"count", "7", "2"}).out == "3\n");
  CHECK(run({"count", "12", "6"}).out == "11\n");
  CHECK(run({"count", "3", "7"}).out == "0\n");

  auto table = run({"count", "5"});
  CHECK(table.code == 0);
  CHECK(table.out == "k=1: 1\nk=2: 2\nk=3: 2\nk=4: 1\nk=5: 1\ntotal: 7\n");
}

TEST_CASE("json zpoly round-trips through the library parser") {
  for (auto args : {std::vector<std::string>{"--format", "json", "zpoly", "4", "2"},
                    std::vector<std::string>{"zpoly", "4", "2", "--format", "json"}}) {
    auto r = run(args);
    REQUIRE(r.code == 0);
    auto parsed = adm::reduced_from_json(adm::Json::parse(r.out));
    CHECK(parsed == adm::reduced_polynomial(4, 2));
  }
}

TEST_CASE("json apoly totals agree with json count totals") {
  for (int m = 1; m <= 15; ++m) {
    auto apoly = run({"--format", "json", "apoly", std::to_string(m)});
    auto count = run({"--format", "json", "count", std::to_string(m)});
    REQUIRE(apoly.code == 0);
    REQUIRE(count.code == 0);
    auto a = adm::Json::parse(apoly.out);
    auto c = adm::Json::parse(count.out);
    CHECK(a["m"] == m);
    REQUIRE(a["parts"].size() == static_cast<std::size_t>(m));
    std::size_t term_total = 0;
    for (const auto& part : a["parts"]) term_total += part["z"]["terms"].size();
    CHECK(term_total == c["total"].get<std::size_t>());
    CHECK(adm::adomian_from_json(a) == adm::adomian_polynomial(m));
  }
}

TEST_CASE("json count of a single pair") {
  auto r = run({"count", "10", "3", "--format", "json"});
  auto j = adm::Json::parse(r.out);
  CHECK(j["m"] == 10);
  CHECK(j["k"] == 3);
  CHECK(j["count"] == 8);
}

TEST_CASE("errors are reported on the error stream with nonzero status") {
  auto bad_k = run({"zpoly", "3", "5"});
  CHECK(bad_k.code != 0);
  CHECK(bad_k.out.empty());
  CHECK(bad_k.err.find("k <= m") != std::string::npos);

  auto missing = run({"zpoly", "3"});
  CHECK(missing.code != 0);

  CHECK(run({"unknown-subcommand"}).code != 0);
  CHECK(run({}).code != 0);
  CHECK(run({"--format", "yaml", "apoly", "2"}).code != 0);
  CHECK(run({"count", "0"}).code != 0);
}

TEST_CASE("pendulum exact domain emits rational coefficients") {
  auto r = run({"pendulum", "--a", "pi/2", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = adm::Json::parse(r.out);
  CHECK(j["domain"] == "rational");
  CHECK(j["M"] == 10);
  CHECK(j["N"] == 20);
  CHECK(j["b"] == 1.0);
  REQUIRE(j["coefficients"].size() == 21);
  CHECK(j["coefficients"][0] == "0");
  CHECK(j["coefficients"][2] == "-1/2");
  CHECK(j["coefficients"][6] == "1/240");
  CHECK(j["coefficients"][10] == "-1/19200");
  CHECK(j["coefficients"][14] == "11/13977600");
  CHECK(j["coefficients"][18] == "-211/16293888000");
  CHECK(j["coefficients"][20] == "0");
}

TEST_CASE("pendulum exact domain in text form") {
  auto r = run({"pendulum", "--a", "pi/2", "--b", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("a = pi/2\n") != std::string::npos);
  CHECK(r.out.find("domain = rational\n") != std::string::npos);
  CHECK(r.out.find("u(t) = a + sum c[n] t^n\n") != std::string::npos);
  CHECK(r.out.find("c[2] = -1\n") != std::string::npos);       // -b/2 with b = 2
  CHECK(r.out.find("c[6] = 1/30\n") != std::string::npos);     // b^3/240
}

TEST_CASE("pendulum float domain") {
  auto r = run({"pendulum", "--a", "0.5", "--b", "2", "--components", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = adm::Json::parse(r.out);
  CHECK(j["domain"] == "float");
  CHECK(j["N"] == 6);  // defaults to 2M
  REQUIRE(j["coefficients"].size() == 7);
  CHECK(j["coefficients"][2].get<double>() == doctest::Approx(-std::sin(0.5)).epsilon(1e-14));
  CHECK(j["coefficients"][1].get<double>() == 0.0);
}

TEST_CASE("pendulum sampling grid") {
  auto text = run({"pendulum", "--a", "pi/2", "--eval", "0,0.5"});
  REQUIRE(text.code == 0);
  CHECK(text.out.find("# t u(t)\n") != std::string::npos);

  auto json = run({"pendulum", "--a", "0.3", "--eval", "0,0.25,0.5", "--format", "json"});
  REQUIRE(json.code == 0);
  auto j = adm::Json::parse(json.out);
  REQUIRE(j["samples"].size() == 3);
  CHECK(j["samples"][0][0] == 0.0);
  CHECK(j["samples"][0][1].get<double>() == doctest::Approx(0.3));  // u(0) = a
  CHECK(j["samples"][2][0] == 0.5);
}

TEST_CASE("pendulum input validation") {
  auto fractional_b = run({"pendulum", "--a", "pi/2", "--b", "1.5"});
  CHECK(fractional_b.code == 2);
  CHECK(fractional_b.err.find("integer b") != std::string::npos);

  CHECK(run({"pendulum", "--a", "0.5", "--b", "-1"}).code == 2);
  CHECK(run({"pendulum", "--a", "0.5", "--order", "5"}).code == 2);  // N < 2M
  CHECK(run({"pendulum"}).code != 0);                                // --a required
}

TEST_CASE("output redirection writes the same bytes to a file") {
  const std::string path = "cli_output_test.tmp";
  auto direct = run({"apoly", "4", "--format", "json"});
  auto redirected = run({"apoly", "4", "--format", "json", "--output", path});
  REQUIRE(redirected.code == 0);
  CHECK(redirected.out.empty());
  std::ifstream in(path);
  std::stringstream contents;
  contents << in.rdbuf();
  CHECK(contents.str() == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("byte determinism across repeated runs") {
  for (auto args : {std::vector<std::string>{"apoly", "8", "--format", "json"},
                    std::vector<std::string>{"pendulum", "--a", "1.0", "--eval", "0.1,0.2"},
                    std::vector<std::string>{"zpoly", "9", "4"}}) {
    CHECK(run(args).out == run(args).out);
  }
}
