#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "doctest.h"
#include "ftspan/graph.hpp"
#include "ftspan/spanner.hpp"
#include "json.hpp"

namespace {

using namespace ftspan;

// Scratch directory under the test's working directory (the build tree).
std::string make_temp_dir() {
  char tmpl[] = "ftspan_cli_XXXXXX";
  char* got = mkdtemp(tmpl);
  REQUIRE(got != nullptr);
  return std::string(got);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::string& dir, const std::string& args) {
  const std::string cmd = std::string("\"") + FTSPAN_CLI_PATH + "\" " + args +
                          " >" + dir + "/stdout.txt 2>" + dir + "/stderr.txt";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(dir + "/stdout.txt");
  r.err = slurp(dir + "/stderr.txt");
  return r;
}

}  // namespace

TEST_CASE("gen prints an edge list with metadata comments") {
  const std::string dir = make_temp_dir();
  RunResult r = run(dir, "gen --generator petersen");
  CHECK(r.code == 0);
  CHECK(r.out.find("# generator: petersen\n") != std::string::npos);
  const Graph g = read_edge_list(r.out);
  CHECK(g.num_vertices() == 10);
  CHECK(g.num_edges() == 15);
}

TEST_CASE("gen, build, verify round trip passes") {
  const std::string dir = make_temp_dir();
  const std::string graph = dir + "/g.txt";
  const std::string spanner = dir + "/sp.json";

  RunResult gen = run(dir, "gen --generator gnp --n 24 --prob 0.2 --seed 3 "
                           "--connected --out " + graph);
  CHECK(gen.code == 0);
  CHECK(gen.err.find("wrote") != std::string::npos);

  RunResult build = run(dir, "build --graph " + graph +
                             " --pipeline alg1-preserver --out " + spanner);
  CHECK(build.code == 0);
  CHECK(build.err.find("spanner_edges=") != std::string::npos);

  RunResult verify =
      run(dir, "verify --graph " + graph + " --spanner " + spanner);
  CHECK(verify.code == 0);
  CHECK(verify.err.find("PASS") != std::string::npos);
  const auto rep = nlohmann::json::parse(verify.out);
  CHECK(rep.at("pass").get<bool>());
  CHECK(rep.at("claim").at("beta").get<int>() == 2);
  CHECK(rep.at("claim").at("kind").get<std::string>() == "edge");
}

TEST_CASE("verify exits 1 when the claim fails") {
  const std::string dir = make_temp_dir();
  auto host = std::make_shared<const Graph>(
      4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  write_edge_list_file(*host, dir + "/g.txt");
  // Spanning tree missing edge (2,3): one edge fault disconnects it, so a
  // one-fault claim cannot hold.
  const Spanner tree(host, {0, 1, 2}, Claim{1, 2, 1, FaultKind::Edge}, "test");
  {
    std::ofstream out(dir + "/sp.json", std::ios::binary);
    REQUIRE(out.good());
    out << tree.to_json();
  }
  RunResult verify =
      run(dir, "verify --graph " + dir + "/g.txt --spanner " + dir + "/sp.json");
  CHECK(verify.code == 1);
  CHECK(verify.err.find("FAIL") != std::string::npos);
  const auto rep = nlohmann::json::parse(verify.out);
  CHECK_FALSE(rep.at("pass").get<bool>());
  CHECK(rep.at("disconnected").get<bool>());
}

TEST_CASE("verify exits 2 when the work budget is exceeded") {
  const std::string dir = make_temp_dir();
  const std::string graph = dir + "/g.txt";
  RunResult gen = run(dir, "gen --generator gnp --n 20 --prob 0.3 --seed 1 "
                           "--connected --out " + graph);
  REQUIRE(gen.code == 0);
  RunResult build = run(dir, "build --graph " + graph +
                             " --pipeline union-f --out " + dir + "/sp.json");
  REQUIRE(build.code == 0);
  RunResult verify = run(dir, "verify --graph " + graph + " --spanner " + dir +
                             "/sp.json --budget 1");
  CHECK(verify.code == 2);
  CHECK(verify.err.find("error:") != std::string::npos);
  CHECK(verify.err.find("budget") != std::string::npos);
}

TEST_CASE("build --instrument emits selection statistics as JSON") {
  const std::string dir = make_temp_dir();
  RunResult build = run(dir, "build --generator gnp --n 30 --prob 0.2 --seed 4 "
                             "--connected --pipeline alg1-2additive --out " +
                             dir + "/sp.json --instrument");
  CHECK(build.code == 0);
  const auto instr = nlohmann::json::parse(build.out);
  CHECK(instr.contains("sources"));
  CHECK(instr.contains("threshold_edges"));
  CHECK(instr.contains("white_incident_edges"));
  CHECK(instr.at("sourcewise_stage").contains("n"));
}

TEST_CASE("experiment --no-timing output is byte identical across runs") {
  const std::string dir = make_temp_dir();
  const std::string args = "experiment --generator gnp --n 18 --prob 0.25 "
                           "--seed 5 --connected --pipeline union-f --count 2 "
                           "--no-timing --out " + dir;
  RunResult first = run(dir, args + "/a.csv");
  CHECK(first.code == 0);
  CHECK(first.out.find("total: 2/2 pass") != std::string::npos);
  RunResult second = run(dir, args + "/b.csv");
  CHECK(second.code == 0);
  CHECK(slurp(dir + "/a.csv") == slurp(dir + "/b.csv"));

  SUBCASE("report summarizes and filters the CSV") {
    RunResult rep = run(dir, "report --csv " + dir + "/a.csv");
    CHECK(rep.code == 0);
    CHECK(rep.out.find("total: 2/2 pass") != std::string::npos);

    RunResult filtered =
        run(dir, "report --csv " + dir + "/a.csv --filter union-f");
    CHECK(filtered.code == 0);

    RunResult empty =
        run(dir, "report --csv " + dir + "/a.csv --filter nonexistent");
    CHECK(empty.code == 2);
    CHECK(empty.err.find("no rows") != std::string::npos);
  }
}

TEST_CASE("bad invocations do not exit 0") {
  const std::string dir = make_temp_dir();
  CHECK(run(dir, "build --generator gnp --n 8").code != 0);  // no --pipeline
  CHECK(run(dir, "frobnicate").code != 0);
  CHECK(run(dir, "verify --graph nope.txt --spanner nope.json").code == 2);
  CHECK(run(dir, "report --csv missing.csv").code == 2);
}
