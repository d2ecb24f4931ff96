#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string arq_bin() {
  const char* path = std::getenv("ARQ_BIN");
  REQUIRE_MESSAGE(path != nullptr, "ARQ_BIN must point at the arq binary");
  return path;
}

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = arq_bin() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  REQUIRE(f.good());
  f << content;
}

}  // namespace

TEST_CASE("analyze a catalog name") {
  RunResult r = run_cli("analyze x2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("chamber count: 34") != std::string::npos);
  CHECK(r.output.find("yoshinaga: true") != std::string::npos);
}

TEST_CASE("analyze with json output") {
  RunResult r = run_cli("analyze d4 --json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"schema\": 1") != std::string::npos);
  CHECK(r.output.find("\"chamber_count\": 192") != std::string::npos);
  CHECK(r.output.find("\"yoshinaga\": true") != std::string::npos);
}

TEST_CASE("analyze a text input file") {
  const std::string path = "/tmp/arq_cli_tri.txt";
  write_file(path, "2 3\n1 0 -1\n0 1 -1\n");
  RunResult r = run_cli("analyze " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("n: 3") != std::string::npos);
  CHECK(r.output.find("chamber count: 6") != std::string::npos);
}

TEST_CASE("analyze a json input file") {
  const std::string path = "/tmp/arq_cli_tri.json";
  write_file(path,
             "{\"normals\": [[\"1\", \"0\"], [\"0\", \"1\"], [\"-1\", \"-1\"]]}\n");
  RunResult r = run_cli("analyze " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("chamber count: 6") != std::string::npos);
}

TEST_CASE("rational entries parse in text inputs") {
  const std::string path = "/tmp/arq_cli_rat.txt";
  write_file(path, "2 3\n1/2 0 -3/2\n0 2/3 -1\n");
  RunResult r = run_cli("analyze " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("chamber count: 6") != std::string::npos);
}

TEST_CASE("invalid inputs exit 1") {
  CHECK(run_cli("analyze nonsense_name").exit_code == 1);
  CHECK(run_cli("analyze x2 --field fp:6").exit_code == 1);
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("analyze").exit_code == 1);
  CHECK(run_cli("frobnicate x2").exit_code == 1);

  const std::string bad1 = "/tmp/arq_cli_bad1.txt";
  write_file(bad1, "2 3\n1 0\n");  // too few entries
  CHECK(run_cli("analyze " + bad1).exit_code == 1);

  const std::string bad2 = "/tmp/arq_cli_bad2.txt";
  write_file(bad2, "2 2\n1 2\n2 4\n");  // proportional normals
  CHECK(run_cli("analyze " + bad2).exit_code == 1);

  const std::string bad3 = "/tmp/arq_cli_bad3.json";
  write_file(bad3, "{\"normals\": \"oops\"}");
  CHECK(run_cli("analyze " + bad3).exit_code == 1);

  const std::string bad4 = "/tmp/arq_cli_bad4.txt";
  write_file(bad4, "2 3\n1 0 -1\n0 1 -1\nextra\n");  // trailing junk
  CHECK(run_cli("analyze " + bad4).exit_code == 1);
}

TEST_CASE("cap overruns exit 2") {
  RunResult r = run_cli("analyze x2 --node-cap 10");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("error") != std::string::npos);

  CHECK(run_cli("analyze d4 --chamber-cap 5").exit_code == 2);
}

TEST_CASE("help exits 0") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("analyze --help").exit_code == 0);
}

TEST_CASE("sigma chain flag adds the chain line") {
  RunResult r = run_cli("analyze x2 --sigma-chain");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("sigma chain: 128 34 34") != std::string::npos);
}

TEST_CASE("field flag routes the verdicts through F_p") {
  RunResult r = run_cli("analyze x2 --field fp:3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("cordovil quadratic (over fp:3): true") != std::string::npos);
}

TEST_CASE("export-cas writes the presentation") {
  const std::string path = "/tmp/arq_cli_export.txt";
  std::remove(path.c_str());
  RunResult r = run_cli("analyze x2 --export-cas " + path + " --export-k 2");
  CHECK(r.exit_code == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string first;
  std::getline(f, first);
  CHECK(first == "ring e1,e2,e3,e4,e5,e6,e7");

  // defaults to the full ideal at k = rank; out-of-range k fails
  CHECK(run_cli("analyze x2 --export-cas " + path).exit_code == 0);
  CHECK(run_cli("analyze x2 --export-cas " + path + " --export-k 9").exit_code == 1);
}

TEST_CASE("bench subcommand") {
  RunResult r = run_cli("bench x2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("bench: x2") != std::string::npos);
  CHECK(r.output.find("sigma_2 = 34") != std::string::npos);
  CHECK(run_cli("bench nonsense").exit_code == 1);
}

TEST_CASE("list subcommand names the catalog") {
  RunResult r = run_cli("list");
  CHECK(r.exit_code == 0);
  for (const char* name : {"remark13", "x2", "bracelet", "d4", "primegap6", "ziegler"})
    CHECK(r.output.find(name) != std::string::npos);
}
