// End-to-end checks of the command-line front end: exit codes, output
// formats, determinism, config file and environment fallback.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef DDZETA_BIN
#define DDZETA_BIN "./ddzeta"
#endif
#ifndef DDZETA_DATA_DIR
#define DDZETA_DATA_DIR "data"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args, const std::string& extra_env = "") {
  std::string cmd = extra_env + " " + std::string(DDZETA_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

const std::string zeros_flag = std::string("--zeros-file ") + DDZETA_DATA_DIR + "/zeros100.txt";

}  // namespace

TEST_CASE("residue subcommand: exact rational output and parity errors") {
  auto a = run("residue --m 2 --n 1 --series lambda --output text");
  CHECK(a.exit_code == 0);
  CHECK(a.out == "-1/12\n");
  auto b = run("residue --m 1 --n 2 --series lambda --output text");
  CHECK(b.out == "0\n");
  auto c = run("residue --m 1 --n 1 --series lambda");
  CHECK(c.exit_code == 2);
  auto d = run("residue --m 1 --n 0 --series mu --precision 40 " + zeros_flag);
  CHECK(d.exit_code == 0);
  CHECK(d.out.find("-1.642119333144247") != std::string::npos);
}

TEST_CASE("verify subcommand: exit codes and csv") {
  auto a = run("verify --suite all --max 12");
  CHECK(a.exit_code == 0);
  auto b = run("verify --suite reciprocity --max 3 --output csv");
  CHECK(b.exit_code == 0);
  CHECK(b.out.find("case,inputs,expected,actual,status") == 0);
  CHECK(b.out.find("reciprocity,(1;2),0,0,ok") != std::string::npos);
  auto c = run("verify --suite all --max 0");
  CHECK(c.exit_code == 0);
  auto d = run("verify --suite all --max 500");
  CHECK(d.exit_code == 2);
  auto e = run("verify --suite thm41 --max 20 --output json");
  CHECK(e.out.find("\"all_exact\":true") != std::string::npos);
}

TEST_CASE("eval subcommand: json value, singular exit 3, parse exit 2, missing table exit 4") {
  auto a = run("eval --s1 3 --s2 3 --series lambda --precision 30 " + zeros_flag);
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("\"re\": \"7.16475750528730997526") != std::string::npos);
  CHECK(a.out.find("\"terms\"") != std::string::npos);
  auto b = run("eval --s1 0 --s2 1 --series lambda --precision 30 " + zeros_flag);
  CHECK(b.exit_code == 3);
  CHECK(b.out.find("s2 = 1") != std::string::npos);
  auto c = run("eval --s1 3 --s2 bo,gus --precision 30 " + zeros_flag);
  CHECK(c.exit_code == 2);
  auto d = run("eval --s1 3 --s2 3 --precision 30 --zeros-file /nonexistent.txt");
  CHECK(d.exit_code == 4);
}

TEST_CASE("complex literals RE,IM parse at working precision") {
  auto a = run("eval --s1 1.3 --s2 2.2,0.7 --series mu --precision 30 " + zeros_flag);
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("\"im\"") != std::string::npos);
}

TEST_CASE("oracle subcommand: region and cutoff preconditions") {
  auto a = run("oracle --s1 3 --s2 3 --series mu --cutoff 2000 --precision 10");
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("tail_estimate") != std::string::npos);
  auto b = run("oracle --s1 0.5 --s2 1.2 --series lambda --cutoff 2000");
  CHECK(b.exit_code == 2);
  auto c = run("oracle --s1 3 --s2 3 --cutoff 10");
  CHECK(c.exit_code == 2);
}

TEST_CASE("fit subcommand emits the full ladder") {
  auto a = run("fit --m 1 --n 0 --series lambda --ladder-start 1e-7 --ladder-len 6 "
               "--precision 30 " + zeros_flag);
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("\"c1\"") != std::string::npos);
  CHECK(a.out.find("\"ladder\"") != std::string::npos);
  CHECK(a.out.find("-5.0000000") != std::string::npos);  // c1 = -1/2
}

TEST_CASE("zeros subcommand and environment fallback") {
  auto a = run(std::string("zeros --validate 2 --precision 40 ") + zeros_flag);
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("\"all_ok\": true") != std::string::npos);
  auto b = run("zeros --validate 1 --precision 40",
               std::string("DDZETA_ZEROS=") + DDZETA_DATA_DIR + "/zeros100.txt");
  CHECK(b.exit_code == 0);
  auto c = run("zeros", "DDZETA_ZEROS=/nonexistent.txt");
  CHECK(c.exit_code == 4);
}

TEST_CASE("identical invocations produce byte-identical output") {
  std::string cmd = "eval --s1 2.5 --s2 2.5,0.5 --series lambda --precision 30 " + zeros_flag;
  auto a = run(cmd);
  auto b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("config file supplies defaults, flags override") {
  std::ofstream conf("/tmp/ddzeta_test.conf");
  conf << "precision = 35\noutput = text\n";
  conf.close();
  auto a = run("--config /tmp/ddzeta_test.conf residue --m 2 --n 1 --series lambda");
  CHECK(a.exit_code == 0);
  CHECK(a.out == "-1/12\n");  // output=text from config
  auto b = run("--config /tmp/ddzeta_test.conf --output json residue --m 2 --n 1 --series lambda");
  CHECK(b.out.find("\"residue\":\"-1/12\"") != std::string::npos);
  std::remove("/tmp/ddzeta_test.conf");
}
