#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  std::string out;
  int status = -1;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run pcalc(const std::string& args) {
  const std::string cmd = std::string(PCALC_BINARY) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string scenario(const std::string& name) { return std::string(PCALC_SCENARIOS) + "/" + name; }

}  // namespace

TEST_CASE("run prints one block per command") {
  const Run r = pcalc("run " + scenario("weinstein_dim4.pc"));
  CHECK(r.status == 0);
  CHECK(r.out.find("> pfaffian Pi\nx1\n") != std::string::npos);
  CHECK(r.out.find("> integrable Pi\nintegrable: true\n") != std::string::npos);
  CHECK(r.out.find("isomorphism: true\ndeterminant: 1\n") != std::string::npos);
}

TEST_CASE("hilbert square scenario") {
  const Run r = pcalc("run " + scenario("hilb_square.pc"));
  CHECK(r.status == 0);
  CHECK(r.out.find("multiplicity: 2\nproper transform: t^2 + t*b1 + b0\n") != std::string::npos);
  CHECK(r.out.find("transverse: true") != std::string::npos);
  CHECK(r.out.find("> anticanonical Dt E 2 1\nDt + E\n") != std::string::npos);
}

TEST_CASE("check mode maps verdicts to exit codes") {
  CHECK(pcalc("--check run " + scenario("weinstein_dim4.pc")).status == 0);
  CHECK(pcalc("--check run " + scenario("nodal.pc")).status == 1);
  CHECK(pcalc("--check chern --pspace 4 --obstruction").status == 1);
  CHECK(pcalc("chern --pspace 4 --obstruction").status == 0);
  CHECK(pcalc("--check eval " + quote("chart X dim 4\npoisson P = x3*@1/\\@2 + @3/\\@4\nintegrable P")).status == 1);
  // the obstruction has weight 4, so smaller models are rejected
  CHECK(pcalc("--check chern --pspace 2").status == 3);
}

TEST_CASE("chern subcommand") {
  const Run r = pcalc("chern --pspace 4");
  CHECK(r.out == "> chern pspace 4 obstruction\nobstruction: 200*h^4\nvanishes: false\n");
  const Run f = pcalc("chern --free 4 --obstruction");
  CHECK(f.out.find("c1^2*c2 - c1*c3") != std::string::npos);
  const Run c = pcalc("chern --pspace 4 --classes");
  CHECK(c.out.find("c1 = 5*h\nc2 = 10*h^2\nc3 = 10*h^3\nc4 = 5*h^4") != std::string::npos);
  CHECK(pcalc("chern --pspace 4 --free 4").status == 2);
}

TEST_CASE("json records") {
  const Run r = pcalc("--json run " + scenario("product.pc"));
  CHECK(r.status == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.at("status") == "ok");
    CHECK(j.contains("result"));
    if (j.at("command") == "pfaffian Pi") CHECK(j.at("result").at("text") == "x1*x3");
    if (j.at("command").get<std::string>().rfind("pnormal", 0) == 0) {
      CHECK(j.at("verdict") == "holds");
      CHECK(j.at("result").at("singular_coranks") == nlohmann::json::array({4, 4}));
    }
    ++count;
  }
  CHECK(count == 12);
}

TEST_CASE("eval one-liners") {
  const Run r = pcalc("eval " + quote("chart X dim 2\npoisson P = x1*@1/\\@2\npbracket P x1 x2"));
  CHECK(r.status == 0);
  CHECK(r.out == "> pbracket P x1 x2\nx1\n");
  const Run s = pcalc("eval " + quote("chart X dim 2; print (x1 + x2)^2"));
  CHECK(s.out == "> print (x1 + x2)^2\nx1^2 + 2*x1*x2 + x2^2\n");
}

TEST_CASE("errors and exit codes") {
  const Run missing = pcalc("run " + scenario("does_not_exist.pc"));
  CHECK(missing.status == 2);
  CHECK(missing.out.find("cannot open") != std::string::npos);

  const Run parse = pcalc("eval " + quote("chart X dim 2\nlet f = x1 +* x2"));
  CHECK(parse.status == 2);
  CHECK(parse.out == "<eval>:2:13: expected an expression, found '*'\n");

  const std::string pole = quote("chart X dim 2\neval (1/x1) (0,0)\nprint x1");
  const Run lenient = pcalc("eval " + pole);
  CHECK(lenient.status == 3);
  CHECK(lenient.out.find("error (pole) at 2:1") != std::string::npos);
  CHECK(lenient.out.find("> print x1\nx1\n") != std::string::npos);
  const Run strict = pcalc("--strict eval " + pole);
  CHECK(strict.status == 3);
  CHECK(strict.out.find("print x1") == std::string::npos);

  const Run j = pcalc("--json eval " + pole);
  std::istringstream first(j.out);
  std::string line;
  std::getline(first, line);
  const auto rec = nlohmann::json::parse(line);
  CHECK(rec.at("status") == "error");
  CHECK(rec.at("error").at("kind") == "pole");
  CHECK(rec.at("line") == 2);

  CHECK(pcalc("").status == 2);
  CHECK(pcalc("frobnicate").status == 2);
}

TEST_CASE("output is identical across runs") {
  for (const char* name : {"hilb_square.pc", "p4_obstruction.pc", "log_duality.pc"}) {
    CHECK(pcalc("run " + scenario(name)).out == pcalc("run " + scenario(name)).out);
    CHECK(pcalc("--json run " + scenario(name)).out == pcalc("--json run " + scenario(name)).out);
  }
}
