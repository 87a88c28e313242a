#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QMF_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("expand prints the golden Y4_2 expansion") {
  const auto r = run("expand Y4_2 --order 5");
  CHECK(r.code == 0);
  CHECK(r.out == "q + 2q^2 + 12q^3 + 4q^4 + 30q^5\n");
}

TEST_CASE("expand json carries exact coefficients") {
  const auto r = run("expand E4 --order 3 --format json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto want = nlohmann::json::parse(R"([["1","1"],["240","1"],["2160","1"],["6720","1"]])");
  CHECK(j.at("coeffs") == want);
  CHECK(j.at("weight") == 4);
}

TEST_CASE("identity --all succeeds") {
  const auto r = run("identity --all --order 40");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("lambert certificate json round-trips byte for byte") {
  const auto dir = std::filesystem::temp_directory_path() / "qmf_cli_test";
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.json";
  const auto b = dir / "b.json";
  CHECK(run("lambert-certify --all --emit " + a.string()).code == 0);
  const auto first = slurp(a);
  REQUIRE(!first.empty());
  CHECK(run("lambert-certify --check " + a.string()).code == 0);
  CHECK(run("lambert-certify --all --emit " + b.string()).code == 0);
  CHECK(slurp(b) == first);
  const auto parsed = nlohmann::json::parse(first);
  CHECK(parsed.dump(2) + "\n" == first);
  std::filesystem::remove_all(dir);
}

TEST_CASE("tampered certificate is rejected") {
  const auto dir = std::filesystem::temp_directory_path() / "qmf_cli_tamper";
  std::filesystem::create_directories(dir);
  const auto a = dir / "d2.json";
  REQUIRE(run("lambert-certify D2 --emit " + a.string()).code == 0);
  auto j = nlohmann::json::parse(slurp(a));
  auto& r = j.at("R");
  r[r.size() - 1] = "-1";
  std::ofstream(a) << j.dump(2) << "\n";
  CHECK(run("lambert-certify --check " + a.string()).code == 1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("unknown labels are usage errors") {
  CHECK(run("expand NOPE --order 3").code == 2);
  const auto r = run("--format json expand NOPE");
  CHECK(r.code == 2);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("error").at("kind") == "UnknownLabel");
  CHECK(run("identity NO-SUCH-ID").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("non-completely-positive form exits 1") {
  CHECK(run("positivity X12_1 --order 30").code == 0);
  CHECK(run("positivity P2 --order 30").code == 1);
}

TEST_CASE("scan of t^11 X12_1 is monotone") {
  const auto r = run("scan X12_1 --m 11 --points 20 --format json");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("verdict") == "monotone_decreasing_on_grid");
}

TEST_CASE("plotdata emits a tsv table") {
  const auto r = run("plotdata X81 --points 5");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("# figure: X81\n", 0) == 0);
}

TEST_CASE("environment overrides default order") {
  const auto r = run("expand Y4_2");
  const auto s = std::string("QMF_ORDER=3 ") + QMF_CLI_PATH + " expand Y4_2";
  FILE* p = popen(s.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[256] = {};
  const std::size_t n = fread(buf, 1, sizeof buf - 1, p);
  pclose(p);
  CHECK(std::string(buf, n) == "q + 2q^2 + 12q^3\n");
  CHECK(r.out.size() > n);
}
