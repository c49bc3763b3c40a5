#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "adjointlab/graph_io.hpp"

#ifndef ADJOINTLAB_CLI
#error "ADJOINTLAB_CLI must name the command-line binary"
#endif
#ifndef ADJOINTLAB_TEST_DATA
#error "ADJOINTLAB_TEST_DATA must name the fixture directory"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(ADJOINTLAB_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* name) { return std::string(ADJOINTLAB_TEST_DATA) + "/" + name; }

nlohmann::json coeffs(const Run& r) { return nlohmann::json::parse(r.out).at("coeffs"); }

std::filesystem::path scratch(const char* name) {
  const auto dir = std::filesystem::temp_directory_path() / "adjointlab_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("compute") {
  Run r = run("compute adjoint " + data("example5.el"));
  CHECK(r.code == 0);
  CHECK(coeffs(r) == nlohmann::json::parse(R"(["0","0","-2","10","-7","1"])"));
  r = run("compute hstar " + data("k3.el"));
  CHECK(coeffs(r) == nlohmann::json::parse(R"(["1","-3","1"])"));
  r = run("compute adjoint " + data("k1.el"));
  CHECK(coeffs(r) == nlohmann::json::parse(R"(["0","1"])"));
  r = run("compute indep " + data("p3.g6"));
  CHECK(coeffs(r) == nlohmann::json::parse(R"(["1","-3","1"])"));
  r = run("compute matching " + data("k3.g6"));
  CHECK(coeffs(r) == nlohmann::json::parse(R"(["0","0","-3","1"])"));
  r = run("compute chromatic " + data("k3.el"));
  CHECK(coeffs(r) == nlohmann::json::parse(R"(["0","2","-3","1"])"));
}

TEST_CASE("exit codes") {
  CHECK(run("compute adjoint " + data("loop.el")).code == 2);
  CHECK(run("compute adjoint /nonexistent/graph.el").code == 2);
  CHECK(run("compute adjoint --cap 2 " + data("k3.el")).code == 3);
  CHECK(run("hat " + data("k1.el")).code == 4);
  CHECK(run("roots " + data("two_k2.el")).code == 5);
  CHECK(run("roots --force " + data("two_k2.el")).code == 0);
  CHECK(run("compute nonsense " + data("k3.el")).code == 2);
  CHECK(run("verify identity --max-n 9").code == 2);
  CHECK(run("verify bogus --max-n 2").code == 2);
}

TEST_CASE("format flag overrides the extension") {
  const auto path = scratch("k3_as_text.txt");
  std::ofstream(path) << "Bw\n";
  const Run r = run("compute hstar --format g6 " + path.string());
  CHECK(r.code == 0);
  CHECK(coeffs(r) == nlohmann::json::parse(R"(["1","-3","1"])"));
}

TEST_CASE("hat output") {
  Run r = run("hat " + data("example5.el"));
  REQUIRE(r.code == 0);
  CHECK(r.out.find("# label 1 (1,2)") != std::string::npos);
  CHECK(r.out.find("# label 7 (4,5)") != std::string::npos);
  const adjointlab::Graph h = adjointlab::parse_edge_list(r.out);
  CHECK(h.order() == 7);
  CHECK(h.edge_count() == 11);

  r = run("hat " + data("k2.el"));
  REQUIRE(r.code == 0);
  CHECK(adjointlab::parse_edge_list(r.out).order() == 1);
  CHECK(adjointlab::parse_edge_list(r.out).edge_count() == 0);

  r = run("hat " + data("k3.el"));
  CHECK(adjointlab::parse_edge_list(r.out).edge_count() == 2);

  const Run a = run("hat --ordering random --seed 5 " + data("example5.el"));
  const Run b = run("hat --ordering random --seed 5 " + data("example5.el"));
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("hat --ordering 5,4,3,2,1 " + data("example5.el")).out == run("hat --ordering reverse " + data("example5.el")).out);
  CHECK(run("hat --ordering 1,2 " + data("example5.el")).code == 2);
}

TEST_CASE("roots") {
  Run r = run("roots " + data("k3.el"));
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(std::abs(std::stod(j.at("gamma").at("value").get<std::string>()) - 2.6180339887498949) < 1e-11);
  CHECK(std::abs(std::stod(j.at("beta").at("value").get<std::string>()) - 0.3819660112501051) < 1e-11);
  CHECK(j.at("gamma_multiplicity") == 1);
  CHECK(j.at("gamma_dominance").at("status") == "pass");

  j = nlohmann::json::parse(run("roots " + data("p3.el")).out);
  CHECK(j.at("gamma").at("lo") == "2");
  CHECK(j.at("gamma").at("exact") == true);
  CHECK(j.at("t").at("lo") == "2");
  CHECK(j.at("matching_bound") == 4);

  j = nlohmann::json::parse(run("roots " + data("k1.el")).out);
  CHECK(j.at("gamma").at("lo") == "0");

  j = nlohmann::json::parse(run("roots --tol 1e-6 " + data("k3.el")).out);
  CHECK(j.at("gamma").at("digits") == 6);
}

TEST_CASE("series") {
  Run r = run("series --num " + data("p3.el") + " --den " + data("k3.el") + " --which hstar --terms 5");
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("coeffs") == nlohmann::json::parse(R"(["1","1","2","5","13"])"));
  CHECK(j.at("all_positive_integers") == true);

  j = nlohmann::json::parse(
      run("series --num " + data("k1.el") + " --den " + data("p3.el") + " --which indep --terms 5").out);
  CHECK(j.at("coeffs") == nlohmann::json::parse(R"(["1","2","5","13","34"])"));

  j = nlohmann::json::parse(run("series --num " + data("k3.el") + " --den " + data("k3.el") + " --terms 5").out);
  CHECK(j.at("coeffs") == nlohmann::json::parse(R"(["1","0","0","0","0"])"));
  CHECK(j.at("all_positive_integers") == false);
  CHECK(j.at("first_violation_index") == 1);

  CHECK(run("series --num " + data("k1.el") + " --den " + data("two_k2.el")).code == 5);
}

TEST_CASE("verify and replay") {
  Run r = run("verify identity --max-n 4 --orderings 3");
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("summary").at("status") == "pass");

  r = run("verify identity --max-n 4 --sabotage");
  CHECK(r.code == 1);
  j = nlohmann::json::parse(r.out);
  REQUIRE_FALSE(j.at("witnesses").empty());
  const nlohmann::json w = j.at("witnesses").at(0);
  std::string ord;
  for (const auto& v : w.at("ordering")) ord += (ord.empty() ? "" : ",") + std::to_string(v.get<int>());

  const Run replay = run("verify identity --sabotage --graph6 '" + w.at("graph6").get<std::string>() +
                         "' --ordering " + ord);
  CHECK(replay.code == 1);
  const nlohmann::json rj = nlohmann::json::parse(replay.out);
  CHECK(rj.at("checks").at(w.at("check").get<std::string>()).at("fail").get<int>() > 0);

  const Run clean = run("verify identity --graph6 '" + w.at("graph6").get<std::string>() + "' --ordering " + ord);
  CHECK(clean.code == 0);
}

TEST_CASE("verify output files and jobs") {
  const auto json_path = scratch("report.json");
  const auto csv_path = scratch("report.csv");
  std::filesystem::remove(json_path);
  std::filesystem::remove(csv_path);
  const Run r = run("verify chromatic --max-n 3 --out " + json_path.string() + " --csv " + csv_path.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream jf(json_path);
  const nlohmann::json j = nlohmann::json::parse(jf);
  CHECK(j.at("checks").at("chromatic.falling_factorial_identity").at("pass") == 11);
  CHECK(std::filesystem::exists(csv_path));

  const Run env = run("--jobs 1 verify chromatic --max-n 3");
  CHECK(env.code == 0);
  const std::string with_env = "ADJOINTLAB_JOBS=2 " + std::string(ADJOINTLAB_CLI) + " verify chromatic --max-n 3";
  FILE* pipe = popen(with_env.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  pclose(pipe);
  CHECK(nlohmann::json::parse(out).at("timing").at("jobs") == 2);
}

TEST_CASE("sweep") {
  const Run a = run("sweep oracle --n 6 --count 25 --seed 3");
  CHECK(a.code == 0);
  nlohmann::json ja = nlohmann::json::parse(a.out);
  CHECK(ja.at("graphs").at("total") == 25);
  const Run b = run("sweep oracle --n 6 --count 25 --seed 3");
  nlohmann::json jb = nlohmann::json::parse(b.out);
  ja.erase("timing");
  jb.erase("timing");
  CHECK(ja == jb);
}
