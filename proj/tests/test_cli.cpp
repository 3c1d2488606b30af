#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ldiag/law.hpp"
#include "ldiag/text.hpp"
#include "oracles.hpp"

using nlohmann::json;
using oracles::W;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(LDIAG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(LDIAG_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("product command") {
  RunResult r = run("product x1 x1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "qs*x1*x2 + x1.x2 + qc*x2.x1\n");
  // Output parses back to the computed value.
  CHECK(ldiag::parse_lin(r.out) == ldiag::infil_shifted(W("x1"), W("x1")));

  CHECK(run("product --qc 0 --qs 0 x1 x1").out == "x1.x2\n");
  CHECK(run("product --no-shift x1 x1").out == "qs*x1^2 + (1 + qc)*x1.x1\n");
  // Shuffle specialization: infil(x1.x2, x3) at (1,0).
  CHECK(run("product --qc 1 --qs 0 x1.x2 x1").out ==
        "x1.x2.x3 + x1.x3.x2 + x3.x1.x2\n");
}

TEST_CASE("product input errors exit with code 2") {
  CHECK(run("product \"x1 .\" x1").exit_code == 2);
  CHECK(run("product x0 x1").exit_code == 2);
  CHECK(run("product --qc foo x1 x1").exit_code == 2);
}

TEST_CASE("expand command") {
  RunResult r1 = run("expand 1");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == "n=1\nx1\t1\talpha={1:1}\tbeta={1:1}\ntotal = 1 ; fubini(1)^2 = 1\n");
  RunResult r3 = run("expand 3");
  CHECK(r3.exit_code == 0);
  CHECK(r3.out.find("total = 169 ; fubini(3)^2 = 169") != std::string::npos);
  CHECK(run("expand 6").exit_code == 2);
  CHECK(run("expand 5 --bound 4").exit_code == 2);
  RunResult r5 = run("expand 5");
  CHECK(r5.exit_code == 0);
  CHECK(r5.out.find("total = 292681 ; fubini(5)^2 = 292681") != std::string::npos);
}

TEST_CASE("code, decode and diagram product commands") {
  const std::string fig = "'{\"weights\":[{\"i\":1,\"j\":2,\"w\":2},{\"i\":1,\"j\":3,\"w\":1},"
                          "{\"i\":2,\"j\":1,\"w\":1},{\"i\":2,\"j\":2,\"w\":1},"
                          "{\"i\":2,\"j\":3,\"w\":3},{\"i\":3,\"j\":3,\"w\":1},"
                          "{\"i\":3,\"j\":4,\"w\":2}]}'";
  CHECK(run("code " + fig).out == "x2^2*x3.x1*x2*x3^3.x3*x4^2\n");
  RunResult dec = run("decode 'x2^2*x3 . x1*x2*x3^3 . x3*x4^2'");
  CHECK(dec.exit_code == 0);
  CHECK(json::parse(dec.out)["weights"].size() == 7);
  CHECK(run("decode x2").exit_code == 2);

  RunResult dp = run("diagram-product '{\"weights\":[{\"i\":1,\"j\":1,\"w\":1}]}' "
                     "'{\"weights\":[{\"i\":1,\"j\":1,\"w\":1}]}'");
  CHECK(dp.exit_code == 0);
  CHECK(dp.out ==
        "qs :: x1*x2 :: {\"weights\":[{\"i\":1,\"j\":1,\"w\":1},{\"i\":1,\"j\":2,\"w\":1}]}\n"
        "1 :: x1.x2 :: {\"weights\":[{\"i\":1,\"j\":1,\"w\":1},{\"i\":2,\"j\":2,\"w\":1}]}\n"
        "qc :: x2.x1 :: {\"weights\":[{\"i\":1,\"j\":2,\"w\":1},{\"i\":2,\"j\":1,\"w\":1}]}\n");
}

TEST_CASE("factor command") {
  RunResult r = run("factor x1.x2.x3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "x1\nx1\nx1\nl(w) = 3\n");
  // Non-code words are accepted, with a note on non-code factors.
  RunResult nc = run("factor x2.x2");
  CHECK(nc.exit_code == 0);
  CHECK(nc.out.find("not a diagram code") != std::string::npos);
}

TEST_CASE("verify command") {
  RunResult r = run("verify cocycle");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS cocycle") != std::string::npos);
  CHECK(r.out.find("perturbed rejected at") != std::string::npos);
  CHECK(run("verify assoc --max-degree 4").out.find("PASS assoc") == 0);
  CHECK(run("verify duality --max-degree 5").out.find("PASS duality") == 0);
  CHECK(run("verify nosuch").exit_code == 2);
  RunResult js = run("verify shift-lemma --seed 42 --format json");
  CHECK(js.exit_code == 0);
  json rep = json::parse(js.out);
  CHECK(rep["reports"][0]["passed"] == true);
}

TEST_CASE("golden outputs") {
  CHECK(run("product x1 x1").out == read_file("product_x1_x1.txt"));
  CHECK(run("product x1 x1 --format json").out == read_file("product_x1_x1.json"));
  CHECK(run("expand 2").out == read_file("expand_2.txt"));
  CHECK(run("expand 2 --format json").out == read_file("expand_2.json"));
}

TEST_CASE("text and JSON outputs carry the same information") {
  json p = json::parse(run("product x2.x1 x1*x1 --format json").out);
  std::string text = run("product x2.x1 x1*x1").out;
  CHECK(p["result"].get<std::string>() + "\n" == text);
  // Terms reassemble to the rendered linear combination.
  ldiag::Lin from_terms;
  for (const auto& t : p["terms"])
    from_terms.add(ldiag::parse_word(t["word"].get<std::string>()),
                   ldiag::parse_coeff(t["coeff"].get<std::string>()));
  CHECK(from_terms == ldiag::parse_lin(text));

  json e = json::parse(run("expand 2 --format json").out);
  std::string etext = run("expand 2").out;
  long long total = 0;
  for (const auto& row : e["rows"]) total += row["mult"].get<long long>();
  CHECK(total == e["total"].get<long long>());
  CHECK(etext.find("total = " + std::to_string(total)) != std::string::npos);
  for (const auto& row : e["rows"])
    CHECK(etext.find(row["code"].get<std::string>()) != std::string::npos);
}
