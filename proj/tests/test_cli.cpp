#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hilb/cli.hpp"

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = hilb::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) {
  return slurp(std::string(HILB_TEST_DIR) + "/golden/" + name);
}

}  // namespace

TEST_CASE("member reports membership with exit code 0") {
  RunResult r = run({"member", "--cone", "Q", "--n", "3", "--a", "-1",
                     "--genfun", R"({"den_exp":2,"numer":[1,2]})", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\n  \"member\": true\n}\n");
  CHECK(r.err.empty());

  RunResult t = run({"member", "--cone", "Q", "--n", "3", "--a", "-1",
                     "--genfun", R"({"den_exp":2,"numer":[1,2]})", "--format", "text"});
  CHECK(t.code == 0);
  CHECK(t.out == "member\n");

  RunResult c = run({"member", "--cone", "P", "--n", "3", "--a", "-1",
                     "--hilb-poly", "1,3", "--format", "csv"});
  CHECK(c.code == 0);
  CHECK(c.out == "member,kind,index\ntrue,,\n");
}

TEST_CASE("member reports violations with exit code 1") {
  RunResult r = run({"member", "--cone", "P", "--n", "2", "--a", "1",
                     "--genfun", R"({"den_exp":0,"numer":[1,-1]})", "--format", "json"});
  CHECK(r.code == 1);
  CHECK(r.out ==
        "{\n  \"member\": false,\n  \"violation\": {\n    \"index\": 1,\n"
        "    \"kind\": \"coefficient\"\n  }\n}\n");

  RunResult inf = run({"member", "--cone", "Q", "--n", "3", "--a", "-1",
                       "--genfun", R"({"den_exp":3,"numer":[0,-1]})", "--format", "json"});
  CHECK(inf.code == 1);
  CHECK(inf.out ==
        "{\n  \"member\": false,\n  \"violation\": {\n    \"kind\": \"infinity\"\n  }\n}\n");

  RunResult f = run({"member", "--cone", "R", "--n", "3", "--m", "0",
                     "--genfun", R"({"den_exp":2,"numer":[1,2]})", "--format", "text"});
  CHECK(f.code == 1);
  CHECK(f.out == "not member: facet 1\n");
}

TEST_CASE("betti-bounds matches the golden tables") {
  RunResult m1 = run({"betti-bounds", "--n", "3", "--m", "1", "--hilb-poly", "1,3",
                      "--format", "text"});
  CHECK(m1.code == 0);
  CHECK(m1.out == golden("betti_m1.txt"));

  RunResult m2 = run({"betti-bounds", "--n", "3", "--m", "2", "--hilb-poly", "1,3",
                      "--format", "text"});
  CHECK(m2.code == 0);
  CHECK(m2.out == golden("betti_m2.txt"));
}

TEST_CASE("cross-section matches the golden csv") {
  RunResult r = run({"cross-section", "--i-max", "2", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == golden("cross_section_2.csv"));
}

TEST_CASE("decompose emits quoted ray labels in csv") {
  RunResult r = run({"decompose", "--n", "3", "--m", "2",
                     "--genfun", R"({"den_exp":2,"numer":[1,2]})", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "ray,alpha\n\"cyclic:4,1\",0\n\"cyclic:4,2\",3/10\n\"cyclic:4,3\",0\n"
        "\"cyclic:3,3\",1/5\n\"cyclic:2,3\",1/2\n\"cyclic:1,3\",0\n");
}

TEST_CASE("simplicial expansion of a truncated Hilbert function") {
  RunResult r = run({"simplicial", "--n", "2", "--h-values", "1,3,6,10,14",
                     "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\n  \"all_nonneg\": true,\n  \"d\": [\n    \"0\",\n    \"0\",\n"
        "    \"0\",\n    \"1/15\"\n  ]\n}\n");

  RunResult bad = run({"simplicial", "--n", "2", "--h-values", "1,4", "--format", "text"});
  CHECK(bad.code == 0);
  CHECK(bad.out.find("negative") != std::string::npos);
}

TEST_CASE("rays with normalization") {
  RunResult r = run({"rays", "--cone", "P", "--n", "3", "--a", "-1",
                     "--max-part", "1", "--normalize", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "label,series\nlambda:,(1)/(1-t)\nlambda:0,(2*t^2)/(1-t)^3\n"
        "lambda:1,(3*t^2 - 3*t + 1)/(1-t)^3\nmu:,(t)/(1-t)^2\n");

  RunResult reg = run({"rays", "--cone", "R", "--n", "2", "--m", "1", "--format", "text"});
  CHECK(reg.code == 0);
  CHECK(reg.out ==
        "cyclic:3,1  1\ncyclic:3,2  3*t + 1\ncyclic:2,2  (2*t + 1)/(1-t)\n"
        "cyclic:1,2  (t + 1)/(1-t)^2\n");
}

TEST_CASE("realize lists the module summands") {
  RunResult r = run({"realize", "--n", "3", "--a", "-1", "--label", "lambda:1",
                     "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\n  \"scalar\": \"1\",\n  \"summands\": [\n    {\n      \"ell\": 4,\n"
        "      \"mult\": \"1/2\",\n      \"power\": 1\n    },\n    {\n"
        "      \"ell\": 1,\n      \"mult\": \"1/2\",\n      \"power\": 4\n    }\n"
        "  ],\n  \"working_a\": 0\n}\n");
}

TEST_CASE("oracle campaign reports its seed") {
  RunResult r = run({"oracle", "--vars", "3", "--maxdeg", "4", "--gens", "4",
                     "--trials", "5", "--seed", "42", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "5/5 pass\nrng: splitmix64 seed: 42\n");
}

TEST_CASE("output is byte-deterministic across runs") {
  std::vector<std::string> args = {"betti-bounds", "--n", "3", "--m", "2",
                                   "--hilb-poly", "1,3"};
  CHECK(run(args).out == run(args).out);
  std::vector<std::string> oracle = {"oracle", "--vars", "4", "--maxdeg", "5",
                                     "--gens", "5", "--trials", "3", "--seed", "7"};
  CHECK(run(oracle).out == run(oracle).out);
}

TEST_CASE("--output writes the same bytes to a file") {
  std::string path = std::string(HILB_TEST_DIR) + "/cli_out.tmp";
  RunResult direct = run({"rays", "--cone", "R", "--n", "2", "--m", "1"});
  RunResult filed = run({"rays", "--cone", "R", "--n", "2", "--m", "1",
                         "--output", path});
  CHECK(filed.code == 0);
  CHECK(filed.out.empty());
  CHECK(slurp(path) == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("series can come from a json file") {
  std::string path = std::string(HILB_TEST_DIR) + "/cli_series.tmp";
  {
    std::ofstream f(path);
    f << R"({"den_exp":2,"numer":[1,2]})";
  }
  RunResult r = run({"member", "--cone", "Q", "--n", "3", "--a", "-1",
                     "--input", path, "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "member\n");
  std::remove(path.c_str());
}

TEST_CASE("usage and input errors exit with code 2") {
  // ambient mismatch surfaces as an error, not a certificate
  RunResult amb = run({"member", "--cone", "P", "--n", "2", "--a", "0",
                       "--genfun", R"({"den_exp":0,"numer":[1,-1]})"});
  CHECK(amb.code == 2);
  CHECK(amb.err.find("error:") == 0);

  RunResult badjson = run({"member", "--cone", "P", "--n", "2", "--a", "0",
                           "--genfun", "{not json"});
  CHECK(badjson.code == 2);

  RunResult both = run({"member", "--cone", "P", "--n", "2", "--a", "0",
                        "--genfun", R"({"den_exp":0,"numer":[1]})",
                        "--hilb-poly", "1"});
  CHECK(both.code == 2);

  RunResult neither = run({"member", "--cone", "P", "--n", "2", "--a", "0"});
  CHECK(neither.code == 2);

  RunResult lonely_start = run({"member", "--cone", "P", "--n", "2", "--a", "0",
                                "--genfun", R"({"den_exp":0,"numer":[1]})",
                                "--start", "1"});
  CHECK(lonely_start.code == 2);

  RunResult noseed = run({"oracle", "--trials", "2"});
  CHECK(noseed.code == 2);

  RunResult badlabel = run({"realize", "--n", "3", "--a", "-1",
                            "--label", "nonsense:1"});
  CHECK(badlabel.code == 2);
  CHECK(badlabel.err.find("error:") == 0);

  RunResult nosub = run({"frobnicate"});
  CHECK(nosub.code == 2);

  RunResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("Usage: hilbcone") != std::string::npos);
}
