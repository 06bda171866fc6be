// Golden transcripts for the command-line tool: each case pins the exact
// stdout bytes and the exit code.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  std::string out;
  int exit_code = -1;
};

RunResult run(const std::string& args) {
  const std::string command =
      std::string(RAAG_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

const std::string& graph_file() {
  static const std::string path = [] {
    auto p = std::filesystem::temp_directory_path() / "raag_cli_test_P.txt";
    std::ofstream out(p);
    out << "# a-b commute, c is free\nvertices: a b c\nedges: a-b\n";
    return p.string();
  }();
  return path;
}

RunResult run_p(const std::string& args) {
  return run("--graph " + graph_file() + " " + args);
}

}  // namespace

TEST_CASE("cli: normalize") {
  auto r = run_p("normalize \"+a +b -a\"");
  CHECK(r.out == "b^1\n");
  CHECK(r.exit_code == 0);

  r = run_p("normalize \"+a ~c\"");
  CHECK(r.out == "{a^1.c^1.a^-1}|a^1\n");
  CHECK(r.exit_code == 0);

  r = run_p("normalize 1");
  CHECK(r.out == "1\n");
  CHECK(r.exit_code == 0);
}

TEST_CASE("cli: eq and commute decisions drive the exit code") {
  auto r = run_p("eq \"~a ~b\" \"~b ~a\"");
  CHECK(r.out == "true\n");
  CHECK(r.exit_code == 0);

  r = run_p("eq \"~a ~c\" \"~c ~a\"");
  CHECK(r.out == "false\n");
  CHECK(r.exit_code == 1);

  r = run_p("eq \"+a ~a\" \"~a +a\"");
  CHECK(r.out == "true\n");
  CHECK(r.exit_code == 0);

  r = run_p("commute \"~a\" \"+b\"");
  CHECK(r.out == "true\n");
  CHECK(r.exit_code == 0);

  r = run_p("commute \"~a\" \"+c\"");
  CHECK(r.out == "false\n");
  CHECK(r.exit_code == 1);
}

TEST_CASE("cli: the identity token composes anywhere") {
  auto r = run_p("eq \"+a 1 ~b\" \"+a ~b\"");
  CHECK(r.out == "true\n");
  CHECK(r.exit_code == 0);

  r = run_p("eq \"+a -a\" 1");
  CHECK(r.out == "true\n");
  CHECK(r.exit_code == 0);
}

TEST_CASE("cli: theta, ord, eta") {
  auto r = run_p("theta \"~a -b\"");
  CHECK(r.out == "a^1.b^-1\n");
  CHECK(r.exit_code == 0);

  r = run_p("theta \"+a ~c\"");
  CHECK(r.out == "a^1.c^1\n");
  CHECK(r.exit_code == 0);

  r = run_p("ord \"+a ~b ~c\"");
  CHECK(r.out == "2\n");
  CHECK(r.exit_code == 0);

  r = run_p("eta \"~a\"");
  CHECK(r.out == "+1*[a^1] -1*[a^-1]\n");
  CHECK(r.exit_code == 0);

  r = run_p("eta \"~a ~a\"");
  CHECK(r.out == "-2*[1] +1*[a^2] +1*[a^-2]\n");
  CHECK(r.exit_code == 0);
}

TEST_CASE("cli: eta-trunc") {
  auto r = run_p("eta-trunc --cutoff 5 \"!a\"");
  CHECK(r.out == "1: -1*[a^1]\n2: 0\n3: -1*[a^3]\n4: 0\n5: -1*[a^5]\n");
  CHECK(r.exit_code == 0);

  r = run_p("eta-trunc --cutoff 5 \"~a !a\"");
  CHECK(r.out == "0: +1*[1]\n1: 0\n2: 0\n3: 0\n4: 0\n5: 0\n");
  CHECK(r.exit_code == 0);

  r = run_p("eta-trunc --cutoff 3 \"~a\"");
  CHECK(r.out == "-1: -1*[a^-1]\n0: 0\n1: +1*[a^1]\n2: 0\n3: 0\n");
  CHECK(r.exit_code == 0);

  r = run_p("eta-trunc --cutoff 2 \"~a ~b\"");
  CHECK(r.out ==
        "-2: +1*[a^-1.b^-1]\n-1: 0\n0: -1*[a^1.b^-1] -1*[a^-1.b^1]\n1: 0\n"
        "2: +1*[a^1.b^1]\n");
  CHECK(r.exit_code == 0);

  r = run_p("eta-trunc --cutoff 1 \"+a -a\"");
  CHECK(r.out == "0: +1*[1]\n1: 0\n");
  CHECK(r.exit_code == 0);
}

TEST_CASE("cli: ribbon and frz") {
  auto r = run_p("ribbon --s a --t a \"+b\"");
  CHECK(r.out == "true\n");
  CHECK(r.exit_code == 0);

  r = run_p("ribbon --s a --t a \"+c\"");
  CHECK(r.out == "false\n");
  CHECK(r.exit_code == 1);

  r = run_p("frz --family sigma --s a --t a --k 2 \"~b\"");
  CHECK(r.out == "true\n");
  CHECK(r.exit_code == 0);

  r = run_p("frz --family tau --s a --t a --k 1 \"~b\"");
  CHECK(r.out == "true\n");
  CHECK(r.exit_code == 0);

  r = run_p("frz --family sigma --s a --t a --k 1 \"+c\"");
  CHECK(r.out == "false\n");
  CHECK(r.exit_code == 1);
}

TEST_CASE("cli: scan verbs") {
  auto r = run_p("birman-scan --max-len 1");
  CHECK(r.out == "words: 10\ndistinct elements: 10\neta collisions: 0\n");
  CHECK(r.exit_code == 0);

  r = run_p("nf-orbit-check --max-syll 2 --max-exp 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("N: expressions=") != std::string::npos);
  CHECK(r.out.find("ZxZ: expressions=") != std::string::npos);
  CHECK(r.out.find("nf_mismatches=0") != std::string::npos);

  r = run_p("lemma42-scan --max-l 2 --max-p 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("violations: 0") != std::string::npos);
}

TEST_CASE("cli: usage and parse errors exit 2") {
  CHECK(run_p("eq \"+d\" \"+a\"").exit_code == 2);       // unknown vertex
  CHECK(run_p("normalize \"*a\"").exit_code == 2);         // bad token
  CHECK(run_p("frz --family sigma --s a --t a --k 0 \"~b\"").exit_code == 2);
  CHECK(run_p("frz --family tau --s a --t a --k -1 \"~b\"").exit_code == 2);
  CHECK(run_p("ribbon --s a --t a \"~b\"").exit_code == 2);  // not a group word
  CHECK(run_p("eta-trunc --cutoff 0 \"!a !a\"").exit_code == 2);
  CHECK(run_p("no-such-verb").exit_code == 2);
  CHECK(run("--graph /nonexistent.txt normalize 1").exit_code == 2);
  CHECK(run("normalize 1").exit_code == 2);  // --graph is required
}

TEST_CASE("cli: output is byte-deterministic") {
  const auto first = run_p("eta \"~a ~b -c\"");
  const auto second = run_p("eta \"~a ~b -c\"");
  CHECK(first.out == second.out);
  CHECK(first.exit_code == second.exit_code);
}
