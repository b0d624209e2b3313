#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#ifndef CMKIT_BIN
#define CMKIT_BIN "cmkit"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = (env.empty() ? "" : env + " ") + std::string(CMKIT_BIN) + " " + args +
                    " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

const char* kE0 = R"({"p": "5", "e": "1", "model": "short-weierstrass", "A": "1", "B": "0"})";
const char* kP1 = R"({"q": "5", "zeta_numerator": ["1"]})";

struct Fixture {
  Fixture() {
    write_file("cli_e0.json", kE0);
    write_file("cli_p1.json", kP1);
  }
  ~Fixture() {
    std::remove("cli_e0.json");
    std::remove("cli_p1.json");
  }
};
Fixture fixture;

}  // namespace

TEST_CASE("classify emits the expected JSON") {
  RunResult r = run("classify --curve cli_e0.json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"ordinary\":true") != std::string::npos);
  CHECK(r.out.find("\"trace\":\"2\"") != std::string::npos);
  CHECK(r.out.find("\"cm_m\":\"-1\"") != std::string::npos);
  CHECK(r.out.find("\"alpha\":{\"x\":\"1\",\"y\":\"2\"}") != std::string::npos);
}

TEST_CASE("zeta command") {
  RunResult r = run("zeta --curve cli_e0.json --power 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[\"1\",\"-2\",\"5\"]") != std::string::npos);
  RunResult r2 = run("zeta --curve cli_e0.json --power 2");
  CHECK(r2.exit_code == 0);
  // P_2 = (1+6t+25t^2)(1-5t)^4
  CHECK(r2.out.find("\"dim\":\"2\"") != std::string::npos);
}

TEST_CASE("domain errors exit 1 with a JSON error object") {
  write_file("cli_singular.json",
             R"({"p": "5", "e": "1", "model": "short-weierstrass", "A": "0", "B": "0"})");
  RunResult r = run("classify --curve cli_singular.json");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("\"error\":\"Singular\"") != std::string::npos);
  std::remove("cli_singular.json");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("classify --no-such-flag x").exit_code == 2);
  CHECK(run("").exit_code == 2);
  CHECK(run("zeta --curve cli_e0.json").exit_code == 2);  // missing --power
}

TEST_CASE("bb-rank and tate-rank commands") {
  RunResult r = run("bb-rank --fiber cli_e0.json --power 1 --base cli_e0.json --codim 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"bb_rank\":\"2\"") != std::string::npos);
  CHECK(r.out.find("\"witnesses\":[") != std::string::npos);

  RunResult t = run("tate-rank --fiber cli_e0.json --power 2 --codim 1");
  CHECK(t.exit_code == 0);
  CHECK(t.out.find("\"tate_dim\":\"4\"") != std::string::npos);
  CHECK(t.out.find("\"predicted_chow_dim\":\"4\"") != std::string::npos);

  RunResult p = run("picard --fiber cli_e0.json --power 3");
  CHECK(p.exit_code == 0);
  CHECK(p.out.find("\"picard\":\"9\"") != std::string::npos);
}

TEST_CASE("lcheck and weil-verify commands") {
  RunResult l = run("lcheck --fiber cli_e0.json --power 1 --base cli_p1.json --codim 1 --order 6");
  CHECK(l.exit_code == 0);
  CHECK(l.out.find("\"pass\":true") != std::string::npos);

  RunResult w = run("weil-verify --curve cli_e0.json --max-r 4 --max-s 4");
  CHECK(w.exit_code == 0);
  CHECK(w.out.find("\"pass\":true") != std::string::npos);
  CHECK(w.out.find("\"witnesses\":[]") != std::string::npos);
}

TEST_CASE("match command") {
  write_file("cli_match.json",
             R"({"q": "113", "left": [{"m": "-1", "r": "2", "s": "0"}, {"m": "-7", "r": "1", "s": "1"}], "right": [{"m": "-7", "r": "1", "s": "1"}, {"m": "-1", "r": "2", "s": "0"}]})");
  RunResult r = run("match --input cli_match.json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"match\":true") != std::string::npos);
  CHECK(r.out.find("\"permutation\":[\"1\",\"0\"]") != std::string::npos);

  write_file("cli_match_bad.json",
             R"({"q": "5", "left": [{"m": "-1", "r": "2", "s": "0"}], "right": [{"m": "-1", "r": "0", "s": "-1"}]})");
  RunResult bad = run("match --input cli_match_bad.json");
  CHECK(bad.exit_code == 0);
  CHECK(bad.out.find("\"match\":false") != std::string::npos);
  std::remove("cli_match.json");
  std::remove("cli_match_bad.json");
}

TEST_CASE("cache file reuse keeps output identical") {
  std::remove("cli_cache.jsonl");
  std::string cmd = "zeta --curve cli_e0.json --power 1 --verify 3 --cache cli_cache.jsonl";
  RunResult miss = run(cmd);
  CHECK(miss.exit_code == 0);
  std::ifstream cache("cli_cache.jsonl");
  REQUIRE(cache.good());
  int lines = 0;
  std::string line;
  while (std::getline(cache, line)) ++lines;
  CHECK(lines == 3);
  RunResult hit = run(cmd);
  CHECK(hit.exit_code == 0);
  CHECK(hit.out == miss.out);
  std::remove("cli_cache.jsonl");
}

TEST_CASE("cache path can come from the environment") {
  std::remove("cli_env_cache.jsonl");
  RunResult r = run("zeta --curve cli_e0.json --power 1 --verify 2",
                    "CMKIT_CACHE=cli_env_cache.jsonl");
  CHECK(r.exit_code == 0);
  std::ifstream cache("cli_env_cache.jsonl");
  CHECK(cache.good());
  std::remove("cli_env_cache.jsonl");
}

TEST_CASE("decompose output notes both multiplicity views") {
  RunResult r = run("decompose --g 3 --level Q");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"recurrence\"") != std::string::npos);
  CHECK(r.out.find("\"notes\"") != std::string::npos);
}
