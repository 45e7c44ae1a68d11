#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "../support/toy_suite.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const fs::path out = fs::temp_directory_path() / "rz_cli_out.txt";
  const std::string cmd = std::string(RZSOLVE_PATH) + " " + args + " > " + out.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("solve a tiny problem") {
  const fs::path dir = rz::testing::write_toy_suite("rz_toy_suite_cli");
  const fs::path stats = dir / "stats.jsonl";
  const fs::path sgf = dir / "solution.out";
  const Run r = run("solve " + (dir / "a_straight3_live.sgf").string() + " --backend tt --stats " + stats.string() +
                    " --out " + sgf.string() + " --ascii");
  CHECK(r.code == 0);
  CHECK(r.out.find("winner: black") != std::string::npos);
  CHECK(r.out.find("winning move: B5") != std::string::npos);
  CHECK(r.out.find("    A B C D E") != std::string::npos);
  const std::string st = slurp(stats);
  CHECK(st.find("\"backend\":\"tt\"") != std::string::npos);
  CHECK(slurp(sgf).rfind("(;", 0) == 0);
}

TEST_CASE("same arguments give identical outputs") {
  const fs::path dir = rz::testing::write_toy_suite("rz_toy_suite_cli2");
  const std::string f = (dir / "d_enclosed.sgf").string();
  run("solve " + f + " --out " + (dir / "one.out").string() + " --seed 4");
  run("solve " + f + " --out " + (dir / "two.out").string() + " --seed 4");
  CHECK(slurp(dir / "one.out") == slurp(dir / "two.out"));
}

TEST_CASE("budget exhaustion exits with 2") {
  const fs::path dir = rz::testing::write_toy_suite("rz_toy_suite_cli3");
  CHECK(run("solve " + (dir / "d_enclosed.sgf").string() + " --max-nodes 1").code == 2);
}

TEST_CASE("errors exit with 1") {
  CHECK(run("solve /nonexistent/problem.sgf").code == 1);
  CHECK(run("solve").code == 1);
  CHECK(run("frobnicate").code == 1);
  const fs::path dir = rz::testing::write_toy_suite("rz_toy_suite_cli4");
  CHECK(run("solve " + (dir / "a_straight3_live.sgf").string() + " --backend zz").code == 1);
  CHECK(run("solve " + (dir / "a_straight3_live.sgf").string() + " --goal seki").code == 1);
  const fs::path empty = fs::temp_directory_path() / "rz_cli_empty";
  fs::remove_all(empty);
  fs::create_directories(empty);
  const Run r = run("bench " + empty.string());
  CHECK(r.code == 1);
  CHECK(r.out.find("no .sgf") != std::string::npos);
}

TEST_CASE("bench writes a table and a report") {
  const fs::path dir = rz::testing::write_toy_suite("rz_toy_suite_cli5");
  const fs::path rep = fs::temp_directory_path() / "rz_cli_report.jsonl";
  const Run r = run("bench " + dir.string() + " --max-nodes 20000 --report " + rep.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("TOTAL") != std::string::npos);
  const std::string text = slurp(rep);
  CHECK(std::count(text.begin(), text.end(), '\n') == 6);
}

TEST_CASE("render") {
  const fs::path dir = rz::testing::write_toy_suite("rz_toy_suite_cli6");
  const Run plain = run("render " + (dir / "c_straight4.sgf").string());
  CHECK(plain.code == 0);
  CHECK(plain.out.find(" 5  . . . . X") != std::string::npos);
  const Run zoned = run("render " + (dir / "c_straight4.sgf").string() + " --zone");
  CHECK(zoned.code == 0);
  CHECK(zoned.out.find('x') != std::string::npos);
}
