#include <catch2/catch_amalgamated.hpp>

#include "nucleus/decompose.hpp"
#include "nucleus/gen.hpp"
#include "nucleus/oracle.hpp"
#include "reference.hpp"

using namespace nucleus;

TEST_CASE("set_k on canonical graphs") {
  SECTION("K5 (3,4): every triangle gets kappa 2") {
    auto ka = set_k(complete_graph(5), 3, 4);
    REQUIRE(ka.kappa.size() == 10);
    for (auto k : ka.kappa) CHECK(k == 2);
    CHECK(ka.max_kappa == 2);
  }
  SECTION("two K4s sharing an edge (3,4): all 8 triangles get kappa 1") {
    auto ka = set_k(two_k4_sharing_edge(), 3, 4);
    REQUIRE(ka.kappa.size() == 8);
    for (auto k : ka.kappa) CHECK(k == 1);
  }
  SECTION("two K4s sharing an edge (2,3): every edge gets kappa 2") {
    Graph g = two_k4_sharing_edge();
    auto ka = set_k(g, 2, 3);
    REQUIRE(ka.kappa.size() == 11);
    for (auto k : ka.kappa) CHECK(k == 2);
    auto truss = refimpl::truss_numbers(g);
    CliqueIndex idx = enumerate_r_cliques(g, 2);
    for (CliqueId e = 0; e < idx.size(); ++e)
      CHECK(ka.kappa[e] == truss.at(idx.edge_vertices(e)));
  }
  SECTION("triangle (1,2): all kappa 2") {
    auto ka = set_k(complete_graph(3), 1, 2);
    for (auto k : ka.kappa) CHECK(k == 2);
  }
  SECTION("empty graph") {
    Graph g;
    auto ka = set_k(g, 1, 2);
    CHECK(ka.kappa.empty());
    CHECK(ka.max_kappa == 0);
    CHECK(ka.transition_times.empty());
  }
  SECTION("isolated triangles decompose independently") {
    Graph g = from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    auto ka = set_k(g, 2, 3);
    for (auto k : ka.kappa) CHECK(k == 1);
  }
}

TEST_CASE("special cases match independent peelers") {
  SECTION("(1,2) kappa is the classical core number") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Graph g = gnp(80, 0.06 + 0.02 * static_cast<double>(seed % 3), 1000 + seed);
      auto ka = set_k(g, 1, 2);
      auto cores = refimpl::core_numbers(g);
      REQUIRE(ka.kappa.size() == cores.size());
      for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(ka.kappa[v] == cores[v]);
    }
  }
  SECTION("(2,3) kappa is the truss-style edge number") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      Graph g = gnp(40, 0.2, 2000 + seed);
      CliqueIndex idx = enumerate_r_cliques(g, 2);
      auto ka = set_k(g, idx, 3);
      auto truss = refimpl::truss_numbers(g);
      for (CliqueId e = 0; e < idx.size(); ++e)
        CHECK(ka.kappa[e] == truss.at(idx.edge_vertices(e)));
    }
  }
}

TEST_CASE("set_k equals oracle_kappa for all r < s <= 4 on random graphs") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Graph g = gnp(15 + (seed % 6), 0.25 + 0.1 * static_cast<double>(seed % 3), 3000 + seed);
    for (int r = 1; r <= 3; ++r) {
      CliqueIndex idx = enumerate_r_cliques(g, r);
      for (int s = r + 1; s <= 4; ++s) {
        auto ka = set_k(g, idx, s);
        auto ora = oracle_kappa(g, r, s);
        REQUIRE(ka.kappa.size() == ora.kappa.size());
        CHECK(ka.kappa == ora.kappa);
      }
    }
  }
}

TEST_CASE("kappa along processing order is monotone and tie-break invariant") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    Graph g = gnp(20, 0.4, 4000 + seed);
    CliqueIndex idx = enumerate_r_cliques(g, 3);
    auto base = set_k(g, idx, 4);
    std::uint32_t prev = 0;
    for (std::size_t t = 0; t < base.processing_order.size(); ++t) {
      std::uint32_t k = base.kappa[base.processing_order[t]];
      CHECK(k >= prev);
      prev = k;
    }
    for (int run = 0; run < 20; ++run) {
      SetKOptions opt;
      opt.tie_break_seed = seed * 100 + run;
      auto alt = set_k(g, idx, 4, opt);
      REQUIRE(alt.kappa == base.kappa);
    }
  }
}

TEST_CASE("transition times") {
  SECTION("uniform kappa 2 over K5 triangles: single transition at time 0") {
    auto ka = set_k(complete_graph(5), 3, 4);
    REQUIRE(ka.transition_times.size() == 1);
    CHECK(ka.transition_times.at(2) == 0);
  }
  SECTION("forced sequence [0,0,1,1,1,3]") {
    std::vector<std::uint32_t> kappa{0, 0, 1, 1, 1, 3};
    std::vector<CliqueId> order{0, 1, 2, 3, 4, 5};
    auto tt = transition_times(kappa, order);
    REQUIRE(tt.size() == 3);
    CHECK(tt.at(0) == 0);
    CHECK(tt.at(1) == 2);
    CHECK(tt.at(3) == 5);
    CHECK(tt.count(2) == 0);
  }
  SECTION("recomputation agrees with the recorded map") {
    Graph g = gnp(18, 0.45, 5);
    auto ka = set_k(g, 3, 4);
    CHECK(transition_times(ka) == ka.transition_times);
  }
}

TEST_CASE("delta equals the S_t-degree at transition times") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    Graph g = gnp(14, 0.5, 6000 + seed);
    for (int r = 1; r <= 3; ++r) {
      CliqueIndex idx = enumerate_r_cliques(g, r);
      for (int s = r + 1; s <= 4; ++s) {
        SetKOptions opt;
        opt.check_transition_degrees = true;  // throws internally on violation
        CHECK_NOTHROW(set_k(g, idx, s, opt));
      }
    }
  }
}

TEST_CASE("cost predictor") {
  SECTION("triangle, r=3 s=4: 3 * 1 * 2") {
    Graph g = complete_graph(3);
    CliqueIndex idx = enumerate_r_cliques(g, 3);
    auto p = cost_predictor(g, idx, 4);
    CHECK(p.value == 6);
    CHECK_FALSE(p.saturated);
  }
  SECTION("star has no triangles") {
    Graph g = star_graph(5);
    CliqueIndex idx = enumerate_r_cliques(g, 3);
    CHECK(cost_predictor(g, idx, 4).value == 0);
  }
  SECTION("(1,2) predictor is the degree sum") {
    Graph g = gnp(20, 0.3, 9);
    CliqueIndex idx = enumerate_r_cliques(g, 1);
    CHECK(cost_predictor(g, idx, 2).value == 2 * g.edge_count());
  }
}
