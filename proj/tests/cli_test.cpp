#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nucleus/gen.hpp"
#include "nucleus/graph.hpp"

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("nucleus_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

int run_cli(const std::string& args) {
  std::string cmd = std::string(NUCLEUS_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("cli decompose") {
  TempDir tmp;
  write_file(tmp.path / "tri.txt", "0 1\n1 2\n2 0\n");
  int rc = run_cli("decompose --input " + (tmp.path / "tri.txt").string() + " --r 1 --s 2 --output " +
                   (tmp.path / "out").string());
  REQUIRE(rc == 0);
  CHECK(slurp(tmp.path / "out" / "kappa.csv") == "v1,kappa\n0,2\n1,2\n2,2\n");
  std::string summary = slurp(tmp.path / "out" / "summary.json");
  CHECK(summary.find("\"n\": 3") != std::string::npos);
  CHECK(summary.find("\"m\": 3") != std::string::npos);
  CHECK(summary.find("\"max_kappa\": 2") != std::string::npos);
}

TEST_CASE("cli forest on K5 emits one red circle") {
  TempDir tmp;
  std::ostringstream el;
  nucleus::write_edge_list(nucleus::complete_graph(5), el);
  write_file(tmp.path / "k5.txt", el.str());
  int rc = run_cli("forest --input " + (tmp.path / "k5.txt").string() +
                   " --r 3 --s 4 --min-size 1 --format dot --format json --output " +
                   (tmp.path / "out").string());
  REQUIRE(rc == 0);
  std::string dot = slurp(tmp.path / "out" / "forest.dot");
  CHECK(dot.find("shape=circle") != std::string::npos);
  CHECK(dot.find("#FF0000") != std::string::npos);
  std::string json = slurp(tmp.path / "out" / "forest.json");
  CHECK(json.find("\"k\": 2") != std::string::npos);
}

TEST_CASE("cli forest on an empty graph") {
  TempDir tmp;
  write_file(tmp.path / "empty.txt", "# nothing here\n");
  int rc = run_cli("forest --input " + (tmp.path / "empty.txt").string() +
                   " --r 3 --s 4 --output " + (tmp.path / "out").string());
  REQUIRE(rc == 0);
  std::string json = slurp(tmp.path / "out" / "forest.json");
  nlohmann::json j = nlohmann::json::parse(json);
  CHECK(j["nodes"].empty());
  CHECK(j["roots"].empty());
}

TEST_CASE("cli metrics on K5") {
  TempDir tmp;
  std::ostringstream el;
  nucleus::write_edge_list(nucleus::complete_graph(5), el);
  write_file(tmp.path / "k5.txt", el.str());
  int rc = run_cli("metrics --input " + (tmp.path / "k5.txt").string() +
                   " --r 3 --s 4 --min-size 1 --output " + (tmp.path / "out").string());
  REQUIRE(rc == 0);
  CHECK(slurp(tmp.path / "out" / "size_density.csv") == "size,density\n5,1.000000\n");
  CHECK(slurp(tmp.path / "out" / "overlaps.csv") ==
        "node_a,node_b,overlap,jaccard,density_hi,density_lo\n");
}

TEST_CASE("cli decompose (2,3) on the shared-edge K4 pair") {
  TempDir tmp;
  std::ostringstream el;
  nucleus::write_edge_list(nucleus::two_k4_sharing_edge(), el);
  write_file(tmp.path / "g.txt", el.str());
  int rc = run_cli("decompose --input " + (tmp.path / "g.txt").string() + " --r 2 --s 3 --output " +
                   (tmp.path / "out").string());
  REQUIRE(rc == 0);
  // every edge, the shared one included, peels at kappa 2
  std::istringstream csv(slurp(tmp.path / "out" / "kappa.csv"));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "v1,v2,kappa");
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    CHECK(line.substr(line.rfind(',') + 1) == "2");
  }
  CHECK(rows == 11);
}

TEST_CASE("cli validate") {
  SECTION("random property run passes") {
    int rc = run_cli("validate --random 12 0.4 3 --seed 7");
    CHECK(rc == 0);
  }
  SECTION("the documented 50-trial run passes") {
    int rc = run_cli("validate --random 15 0.4 50 --seed 7");
    CHECK(rc == 0);
  }
  SECTION("shared-edge K4 pair file passes") {
    TempDir tmp;
    std::ostringstream el;
    nucleus::write_edge_list(nucleus::two_k4_sharing_edge(), el);
    write_file(tmp.path / "g.txt", el.str());
    int rc = run_cli("validate --input " + (tmp.path / "g.txt").string());
    CHECK(rc == 0);
  }
  SECTION("disconnected triangles pass") {
    TempDir tmp;
    write_file(tmp.path / "g.txt", "0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n");
    int rc = run_cli("validate --input " + (tmp.path / "g.txt").string());
    CHECK(rc == 0);
  }
}

TEST_CASE("cli exit codes") {
  TempDir tmp;
  write_file(tmp.path / "tri.txt", "0 1\n1 2\n2 0\n");
  std::string tri = (tmp.path / "tri.txt").string();
  std::string out = (tmp.path / "out").string();
  SECTION("usage errors: 1") {
    CHECK(run_cli("decompose --input " + tri + " --r 3 --s 3 --output " + out) == 1);
    CHECK(run_cli("decompose --input " + tri + " --r 0 --s 2 --output " + out) == 1);
    CHECK(run_cli("bogus-subcommand") == 1);
    CHECK(run_cli("forest --input " + tri + " --r 2 --s 3 --format csv --output " + out) == 1);
  }
  SECTION("i/o errors: 2") {
    CHECK(run_cli("decompose --input " + (tmp.path / "missing.txt").string() +
                  " --r 1 --s 2 --output " + out) == 2);
    write_file(tmp.path / "bad.txt", "0 x\n");
    CHECK(run_cli("decompose --input " + (tmp.path / "bad.txt").string() +
                  " --r 1 --s 2 --output " + out) == 2);
  }
  SECTION("capacity errors: 3") {
    CHECK(run_cli("decompose --input " + tri + " --r 2 --s 3 --memory-budget 8 --output " + out) ==
          3);
  }
}

TEST_CASE("cli outputs are byte-identical across runs") {
  TempDir tmp;
  std::ostringstream el;
  nucleus::write_edge_list(nucleus::gnp(40, 0.3, 99), el);
  write_file(tmp.path / "g.txt", el.str());
  std::string base = "--input " + (tmp.path / "g.txt").string() + " --r 3 --s 4 --min-size 1";
  REQUIRE(run_cli("forest " + base + " --format json --format dot --vertices --output " +
                  (tmp.path / "a").string()) == 0);
  REQUIRE(run_cli("forest " + base + " --format json --format dot --vertices --output " +
                  (tmp.path / "b").string()) == 0);
  CHECK(slurp(tmp.path / "a" / "forest.json") == slurp(tmp.path / "b" / "forest.json"));
  CHECK(slurp(tmp.path / "a" / "forest.dot") == slurp(tmp.path / "b" / "forest.dot"));
  REQUIRE(run_cli("metrics " + base + " --output " + (tmp.path / "ma").string()) == 0);
  REQUIRE(run_cli("metrics " + base + " --output " + (tmp.path / "mb").string()) == 0);
  for (const char* f : {"density_histogram.csv", "size_density.csv", "overlaps.csv"})
    CHECK(slurp(tmp.path / "ma" / f) == slurp(tmp.path / "mb" / f));
}
