// Runs the built unicrit binary and checks output and exit codes.

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args, const std::string& env = "") {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string err_path = (dir / "unicrit_cli_test.err").string();
  const std::string cmd = env + " '" + std::string(UNICRIT_CLI) + "' " + args + " 2>'" + err_path + "'";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err_path);
  return r;
}

}  // namespace

TEST_CASE("orbit example") {
  const auto r = run("orbit --d 2 --c -460 --alpha 22");
  CHECK(r.code == 0);
  CHECK(r.out.find("Escaping") != std::string::npos);
  CHECK(r.out.find("22, 24, 116, 12996") != std::string::npos);
  CHECK(r.out.find("12996 = 114^2") != std::string::npos);

  const auto j = json::parse(run("orbit --d 2 --c -1 --alpha 0 --format json").out);
  CHECK(j.at("orbit").at("kind") == "Preperiodic");
  CHECK(j.at("orbit").at("period") == 2);
}

TEST_CASE("classify examples") {
  auto r = run("classify --d 4 --coeffs -252,4,-4,-260 --format json");
  CHECK(r.code == 1);
  auto j = json::parse(r.out);
  CHECK(j.at("outcome") == "Exceptional");
  CHECK(j.at("y") == 2);
  CHECK(j.at("p") == 2);
  CHECK(j.at("statement") == 2);

  r = run("classify --d 2 --coeffs 1,-2 --format json");
  CHECK(r.code == 0);
  j = json::parse(r.out);
  CHECK(j.at("outcome") == "CertifiedFamily");
  CHECK(j.at("rule") == "Stability");
  CHECK(j.at("density_lower_bound") == "1/16");
  CHECK(j.at("F") == json::array({1, 1, 1, 1}));

  r = run("classify --d 5 --coeffs -33554400,32");
  CHECK(r.code == 1);
  CHECK(r.out.find("Exceptional") != std::string::npos);

  // Unsorted, duplicated input gives the same answer.
  CHECK(run("classify --d 2 --coeffs -2,1,1 --format json").out == run("classify --d 2 --coeffs 1,-2 --format json").out);
}

TEST_CASE("irreducible subcommand") {
  auto r = run("irreducible --d 2 --coeffs 1,-2 --word 1,0 --format json");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).at("result").at("verdict") == "Irreducible");

  r = run("irreducible --d 2 --coeffs -5,3 --word 0,1");
  CHECK(r.code == 1);
  CHECK(r.out.find("Unknown") != std::string::npos);

  r = run("irreducible --d 4 --coeffs 4,-252 --word 1,0 --format json");
  CHECK(r.code == 1);
  CHECK(json::parse(r.out).at("result").at("verdict") == "Reducible");

  r = run("irreducible --d 2 --coeffs 1,-2 --word 0,5");
  CHECK(r.code == 2);
  CHECK(r.err.find("out of range") != std::string::npos);
}

TEST_CASE("powered-points") {
  const auto r = run("powered-points --d 4 --c -252");
  CHECK(r.code == 0);
  CHECK(r.out.find("2^2") != std::string::npos);
}

TEST_CASE("census output is independent of workers") {
  const std::string args = "census --d 2 --coeffs -5,-2,1,3,4 --max-len 5";
  const auto one = run(args + " --workers 1");
  const auto many = run(args + " --workers 4");
  const auto env = run(args, "UNICRIT_WORKERS=3");
  CHECK(one.code == 0);
  CHECK(one.out == many.out);
  CHECK(one.out == env.out);
  CHECK(one.out.rfind("length,total,irreducible,reducible,unknown,resolved_by_modq\n1,5,", 0) == 0);

  const auto j1 = run(args + " --workers 1 --format json");
  const auto j4 = run(args + " --workers 4 --format json");
  CHECK(j1.out == j4.out);
  CHECK(json::parse(j1.out).at("rows").size() == 5);
}

TEST_CASE("census writes to a file") {
  const auto path = (std::filesystem::temp_directory_path() / "unicrit_cli_census.csv").string();
  const auto r = run("census --d 2 --coeffs 1,-2 --max-len 2 -o '" + path + "'");
  CHECK(r.code == 0);
  CHECK(slurp(path) == "length,total,irreducible,reducible,unknown,resolved_by_modq\n1,2,2,0,0,0\n2,4,4,0,0,0\n");
  std::filesystem::remove(path);

  const auto bad = run("census --d 2 --coeffs 1,-2 --max-len 2 -o /nonexistent-dir/out.csv");
  CHECK(bad.code == 1);
  CHECK(bad.err.find("/nonexistent-dir/out.csv") != std::string::npos);
}

TEST_CASE("verify") {
  auto r = run("verify --suite mod8");
  CHECK(r.code == 0);
  CHECK(r.out.find("128") != std::string::npos);

  r = run("verify --suite mod8 --format json");
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j.at("cases") == 128);
  CHECK(j.at("violations").empty());

  r = run("verify --suite sharpness --param r_max=5 --param d_max=3 --format json");
  CHECK(r.code == 0);
  j = json::parse(r.out);
  CHECK(j.at("params").at("r_max") == 5);
  CHECK(j.at("cases") == 4 * 2 + 1);

  r = run("verify --suite no-such-suite");
  CHECK(r.code == 2);
  r = run("verify --suite mod8 --param nope=1");
  CHECK(r.code == 2);
}

TEST_CASE("usage errors exit 2 with usage on stderr") {
  auto r = run("");
  CHECK(r.code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(r.out.empty());

  r = run("orbit --d 2 --c 1 --alpha 0 --bogus");
  CHECK(r.code == 2);
  CHECK(r.err.find("--bogus") != std::string::npos);
  CHECK(r.err.find("Usage") != std::string::npos);

  r = run("frobnicate");
  CHECK(r.code == 2);

  r = run("classify --d 2 --coeffs 1,x");
  CHECK(r.code == 2);

  r = run("census --d 2 --coeffs 1,-2,3,4,5,6,7 --max-len 30");
  CHECK(r.code == 2);
}
