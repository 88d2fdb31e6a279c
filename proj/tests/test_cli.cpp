#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// Drives the installed binary end to end through files and exit codes.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "ncqd_cli_test";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run_cli(const std::string& args) {
  const fs::path out_file = work_dir() / "stdout.txt";
  const std::string cmd = std::string(NCQD_CLI_PATH) + " " + args + " > " +
                          out_file.string() + " 2> " + (work_dir() / "stderr.txt").string();
  const int raw = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return {WEXITSTATUS(raw), buffer.str()};
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path path = work_dir() / name;
  std::ofstream out(path);
  out << text;
  return path;
}

const std::string kBellFile =
    "pure 2 2\n0.7071067811865476 0 0 0.7071067811865476\n";
const std::string kWernerHalf =
    "dims 2 2\n"
    "0.375 0 0 0.25\n"
    "0 0.125 0 0\n"
    "0 0 0.125 0\n"
    "0.25 0 0 0.375\n";
const std::string kPsi3File =
    "pure 2 2\n0.5773502691896258 0.5773502691896258 0.5773502691896258 0\n";

// Value printed as "<anchor>...) = 1.234"; the flag-style "side=A" pieces
// have no spaces, so match the padded equals sign.
double extract_value(const std::string& output, const std::string& anchor) {
  const auto pos = output.find(anchor);
  REQUIRE(pos != std::string::npos);
  const auto eq = output.find(" = ", pos);
  REQUIRE(eq != std::string::npos);
  return std::strtod(output.c_str() + eq + 3, nullptr);
}

}  // namespace

TEST_CASE("eval prints the Bell value in any basis") {
  const fs::path file = write_file("bell.txt", kBellFile);
  const RunResult comp = run_cli("eval " + file.string());
  CHECK(comp.exit_code == 0);
  CHECK(std::abs(extract_value(comp.output, "D'_G") - 1.3535534) < 5e-7);

  const RunResult sch = run_cli("eval " + file.string() + " --basis schmidt");
  CHECK(sch.exit_code == 0);
  CHECK(std::abs(extract_value(sch.output, "D'_G") - 1.3535534) < 5e-7);
}

TEST_CASE("eval reports both sides and the trace norm") {
  const fs::path file = write_file("psi3.txt", kPsi3File);
  const RunResult both = run_cli("eval " + file.string() + " --side both");
  CHECK(both.exit_code == 0);
  CHECK(both.output.find("side=A") != std::string::npos);
  CHECK(both.output.find("side=B") != std::string::npos);
  CHECK(std::abs(extract_value(both.output, "side=A") - 1.0460237) < 1e-6);

  const RunResult trace = run_cli("eval " + file.string() + " --norm trace");
  CHECK(trace.exit_code == 0);
  CHECK(trace.output.find("D_G") != std::string::npos);
}

TEST_CASE("eval accepts an explicit parameter basis") {
  const fs::path file = write_file("psi3b.txt", kPsi3File);
  const RunResult res = run_cli("eval " + file.string() + " --basis 0.3,1.2,0.7");
  CHECK(res.exit_code == 0);
  CHECK(extract_value(res.output, "D'_G") > 0.0);
}

TEST_CASE("validation problems exit with code 2") {
  const fs::path bad = write_file("bad.txt",
                                  "dims 2 2\n"
                                  "0.5 0 0 0\n0 0.5 0 0\n0 0 0.5 0\n0 0 0 0.5\n");
  CHECK(run_cli("eval " + bad.string()).exit_code == 2);

  const fs::path garbled = write_file("garbled.txt", "dims 2 2\nnot numbers\n");
  CHECK(run_cli("eval " + garbled.string()).exit_code == 2);

  CHECK(run_cli("eval " + work_dir().string() + "/does_not_exist.txt").exit_code == 2);

  const fs::path mixed = write_file("mixed.txt", kWernerHalf);
  CHECK(run_cli("eval " + mixed.string() + " --basis schmidt").exit_code == 2);
  CHECK(run_cli("schmidt " + mixed.string()).exit_code == 2);
  CHECK(run_cli("scan --family bogus").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("minimize reproduces the Werner hand value") {
  const fs::path file = write_file("werner.txt", kWernerHalf);
  const RunResult res = run_cli("minimize " + file.string());
  CHECK(res.exit_code == 0);
  CHECK(std::abs(extract_value(res.output, "d'(side=A)") - 0.3383883476) < 1e-7);
  CHECK(res.output.find("start minima:") != std::string::npos);

  const fs::path bell = write_file("bell2.txt", kBellFile);
  const RunResult bell_res = run_cli("minimize " + bell.string());
  CHECK(std::abs(extract_value(bell_res.output, "d'(side=A)") - 1.3535534) < 5e-7);
}

TEST_CASE("minimize exits 3 when no start converges") {
  const fs::path file = write_file("pp.txt", kPsi3File);
  const RunResult res =
      run_cli("minimize " + file.string() + " --starts 2 --iters 3 --tol 1e-300");
  CHECK(res.exit_code == 3);
}

TEST_CASE("random writes deterministic CSV with the expected shape") {
  const fs::path out1 = work_dir() / "r1.csv";
  const fs::path out2 = work_dir() / "r2.csv";
  CHECK(run_cli("random --n 50 --seed 9 --out " + out1.string()).exit_code == 0);
  CHECK(run_cli("random --n 50 --seed 9 --out " + out2.string()).exit_code == 0);
  std::ifstream f1(out1), f2(out2);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  const std::string text1 = s1.str(), text2 = s2.str();
  CHECK(text1 == text2);
  CHECK(std::count(text1.begin(), text1.end(), '\n') == 51);
}

TEST_CASE("scan covers the rho2 zero-discord point") {
  const fs::path out = work_dir() / "scan.csv";
  CHECK(run_cli("scan --family rho2 --grid 3 --out " + out.string()).exit_code == 0);
  std::ifstream f(out);
  std::string header, row0, row1;
  std::getline(f, header);
  std::getline(f, row0);
  std::getline(f, row1);
  CHECK(header == "p,dg_comp,d_prime,converged");
  double p = 0.0, comp = 0.0, dp = 0.0;
  int conv = 0;
  REQUIRE(std::sscanf(row1.c_str(), "%lf,%lf,%lf,%d", &p, &comp, &dp, &conv) == 4);
  CHECK(p == doctest::Approx(0.5));
  CHECK(comp <= 1e-8);
  CHECK(dp <= 1e-8);
  CHECK(conv == 1);
}

TEST_CASE("schmidt prints the Bell coefficients") {
  const fs::path file = write_file("bell3.txt", kBellFile);
  const RunResult res = run_cli("schmidt " + file.string());
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("lambdas: 0.5 0.5") != std::string::npos);
  CHECK(res.output.find("basis A columns:") != std::string::npos);
}
