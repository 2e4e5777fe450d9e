#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(RESONAX_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("quasi-resonance") {
  const auto r = run("quasi-resonance --rho '[[1],[2]]' --rhop '[[1],[2]]'");
  CHECK(r.code == 0);
  const auto j = parse(r);
  CHECK(j["quasi_resonance"]["orders"] == nlohmann::json::parse("[2,4]"));
  CHECK(j["quasi_resonance"]["order"] == 4);
  CHECK(j["cartan"]["linear"] == false);
}

TEST_CASE("check") {
  auto r = run("check --rho '[[1],[-1]]'");
  CHECK(r.code == 1);
  CHECK(parse(r)["certificate"]["witness"] == nlohmann::json::parse("[1,1]"));

  r = run("check --rho '{\"rows\": [[1,0],[1,1],[1,-1]]}'");
  CHECK(r.code == 0);
  CHECK(parse(r)["certificate"]["positive_functional"] == nlohmann::json::parse(R"(["1","0"])"));
}

TEST_CASE("weight-space, resonance, bound") {
  auto r = run("weight-space --rho '[[1],[2]]' --k '[2]'");
  CHECK(r.code == 0);
  auto j = parse(r);
  CHECK(j["weight_space"]["basis"] == nlohmann::json::parse("[[0,1],[2,0]]"));

  r = run("resonance --rho '[[2],[3]]'");
  CHECK(r.code == 0);
  CHECK(parse(r)["resonance"]["order"] == 1);

  r = run("bound --rho '[[2],[3]]'");
  CHECK(r.code == 0);
  j = parse(r);
  CHECK(j["bound"]["global_bound"] == "9/4");
  CHECK(j["bound"]["exact_global"] == 1);

  r = run("bound --rho '[[1],[2]]' --rhop '[[1],[2]]'");
  CHECK(r.code == 0);
  CHECK(parse(r)["bound"]["exact"] == 4);

  r = run("weight-space --rho '[[1],[-1]]' --k '[0]'");
  CHECK(r.code == 1);
  CHECK(parse(r)["error"]["type"] == "inadmissible");
}

TEST_CASE("verify-map from a file") {
  const std::string path = std::string(RESONAX_TEST_DIR) + "/shear3.json";
  std::ofstream(path) << R"([[{"exp":[1,0],"re":"1"}],[{"exp":[0,1],"re":"1"},{"exp":[3,0],"re":"1"}]])";
  auto r = run("verify-map --map @" + path + " --rho '[[1],[1]]' --rhop '[[1],[3]]'");
  CHECK(r.code == 0);
  CHECK(parse(r)["compliance"]["pass"] == true);

  r = run("verify-map --map " + path + " --rho '[[1],[1]]' --rhop '[[1],[2]]'");
  CHECK(r.code == 1);
}

TEST_CASE("mc") {
  const std::string ball = R"('{"kind":"unit-ball","n":2}')";
  auto r = run("mc --task inner --domain " + ball + R"( --p '[{"exp":[0,0],"re":"1"}]' --q '[{"exp":[0,0],"re":"1"}]' --count 100000)");
  CHECK(r.code == 0);
  auto j = parse(r);
  CHECK(j["seed"] == 42);
  CHECK(std::abs(j["estimate"]["value"][0].get<double>() - 4.9348) < 0.05);

  r = run("mc --task invariance --domain '{\"kind\":\"shear-image\",\"base\":{\"kind\":\"unit-ball\",\"n\":2},\"shear\":2}'"
          " --rho '[[1],[3]]' --count 20000");
  CHECK(r.code == 1);

  r = run("mc --task orthogonality --domain " + ball + " --rho '[[1,0],[0,1]]' --max-degree 2 --count 100000 --seed 7");
  CHECK(r.code == 0);
  CHECK(parse(r)["seed"] == 7);

  r = run(R"(mc --task cov --domain )" + ball +
          R"( --map '[[{"exp":[1,0],"re":1}],[{"exp":[0,1],"re":1},{"exp":[3,0],"re":1}]]')"
          R"( --inverse '[[{"exp":[1,0],"re":1}],[{"exp":[0,1],"re":1},{"exp":[3,0],"re":-1}]]')"
          R"( --phi '[{"exp":[3,0],"re":1}]' --psi '[{"exp":[0,1],"re":1}]' --count 200000)");
  CHECK(r.code == 0);
  CHECK(parse(r)["change_of_variables"]["pass"] == true);
}

TEST_CASE("seed from the environment, flag wins") {
  const std::string args = R"(mc --task inner --domain '{"kind":"polydisc","radii":[1]}' --p '[{"exp":[0],"re":1}]' --q '[{"exp":[0],"re":1}]' --count 1000)";
  CHECK(parse(run(args, "RESONAX_SEED=5"))["seed"] == 5);
  CHECK(parse(run(args + " --seed 9", "RESONAX_SEED=5"))["seed"] == 9);
  CHECK(parse(run(args))["seed"] == 42);
  CHECK(run(args, "RESONAX_SEED=abc").code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("check").code == 2);
  CHECK(run("check --rho '[[1],'").code == 2);
  CHECK(run("check --rho '[[1],[2,3]]'").code == 2);
  CHECK(run("check --rho @/nonexistent/file.json").code == 2);
  CHECK(run("mc --task nope --domain '{\"kind\":\"unit-ball\",\"n\":2}'").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("output file") {
  const std::string path = std::string(RESONAX_TEST_DIR) + "/out.json";
  std::remove(path.c_str());
  CHECK(run("resonance --rho '[[1],[2]]' -o " + path).code == 0);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["resonance"]["orders"] == nlohmann::json::parse("[1,2]"));
}
