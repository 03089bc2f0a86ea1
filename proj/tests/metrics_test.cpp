#include <catch2/catch_amalgamated.hpp>

#include "nucleus/gen.hpp"
#include "nucleus/metrics.hpp"
#include "nucleus/oracle.hpp"

using namespace nucleus;

namespace {

NucleusForest make_forest(const Graph& g, int r, int s) {
  CliqueIndex idx = enumerate_r_cliques(g, r);
  auto ka = set_k(g, idx, s);
  return build_forest(g, idx, ka);
}

}  // namespace

TEST_CASE("density histogram") {
  SECTION("a single density-1 nucleus lands in the closed top bin") {
    auto f = make_forest(complete_graph(5), 3, 4);
    auto h = density_histogram(filter_by_size(f, 1));
    REQUIRE(h.counts.size() == 20);
    CHECK(h.counts.back() == 1);
    Count total = 0;
    for (Count c : h.counts) total += c;
    CHECK(total == 1);
  }
  SECTION("size filter flows into the histogram") {
    auto f = make_forest(two_k4_sharing_edge(), 3, 4);
    auto h10 = density_histogram(filter_by_size(f, 10));
    for (Count c : h10.counts) CHECK(c == 0);
    CHECK(h10.min_size == 10);
    auto h4 = density_histogram(filter_by_size(f, 4));
    CHECK(h4.counts.back() == 2);
  }
  SECTION("boundary densities go to the upper bin") {
    // density exactly 0.5: path on 4 vertices has density 3/6; (1,2) root
    Graph g = path_graph(4);
    auto f = make_forest(g, 1, 2);
    REQUIRE(f.node_count() == 1);
    CHECK(f.node(0).density == 0.5);
    auto h = density_histogram(full_view(f));
    CHECK(h.counts[10] == 1);  // [0.50, 0.55), not [0.45, 0.50)
  }
  SECTION("bin width must divide 1") {
    auto f = make_forest(complete_graph(4), 2, 3);
    CHECK_THROWS_AS(density_histogram(full_view(f), 0.3), UnsupportedParameterError);
    CHECK_NOTHROW(density_histogram(full_view(f), 0.25));
  }
  SECTION("empty view gives an all-zero histogram") {
    auto f = make_forest(complete_graph(5), 3, 4);
    auto h = density_histogram(filter_by_size(f, 100));
    for (Count c : h.counts) CHECK(c == 0);
  }
}

TEST_CASE("size-density scatter") {
  SECTION("K5 yields a single (5, 1.0) record") {
    auto f = make_forest(complete_graph(5), 3, 4);
    auto recs = size_density_scatter(filter_by_size(f, 1));
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].size == 5);
    CHECK(recs[0].density == 1.0);
  }
  SECTION("records are sorted by size then density") {
    Graph g = gnp(18, 0.5, 11);
    auto f = make_forest(g, 3, 4);
    auto recs = size_density_scatter(full_view(f));
    for (std::size_t i = 1; i < recs.size(); ++i) {
      CHECK(recs[i - 1].size <= recs[i].size);
      if (recs[i - 1].size == recs[i].size) CHECK(recs[i - 1].density <= recs[i].density);
    }
  }
}

TEST_CASE("overlap analysis") {
  SECTION("the shared-edge K4 pair yields one overlap record") {
    auto f = make_forest(two_k4_sharing_edge(), 3, 4);
    auto recs = overlap_analysis(filter_by_size(f, 1), 1);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].overlap_vertices == 2);
    CHECK(recs[0].jaccard == Catch::Approx(2.0 / 6.0));
    CHECK(recs[0].density_a == 1.0);
    CHECK(recs[0].density_b == 1.0);
    CHECK(recs[0].node_a < recs[0].node_b);  // tie on density: lower id first
  }
  SECTION("a pure chain forest has no non-ancestor pairs") {
    Graph g = from_pairs(11, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                              {2, 3}, {2, 4}, {3, 4},
                              {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7},
                              {7, 8}, {8, 9}, {9, 7},
                              {9, 10}});
    auto f = make_forest(g, 1, 2);
    REQUIRE(f.node_count() == 4);
    CHECK(overlap_analysis(full_view(f), 1).empty());
  }
  SECTION("min_overlap filters pairs") {
    auto f = make_forest(two_k4_sharing_edge(), 3, 4);
    CHECK(overlap_analysis(filter_by_size(f, 1), 3).empty());
    CHECK_THROWS_AS(overlap_analysis(filter_by_size(f, 1), 0), UnsupportedParameterError);
  }
  SECTION("overlapping nuclei never share an r-clique") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      Graph g = gnp(16, 0.5, 12000 + seed);
      CliqueIndex idx = enumerate_r_cliques(g, 3);
      auto ka = set_k(g, idx, 4);
      auto f = build_forest(g, idx, ka);
      for (const auto& rec : overlap_analysis(full_view(f), 1)) {
        auto ma = f.member_rcliques(rec.node_a);
        auto mb = f.member_rcliques(rec.node_b);
        std::vector<CliqueId> inter;
        std::set_intersection(ma.begin(), ma.end(), mb.begin(), mb.end(),
                              std::back_inserter(inter));
        CHECK(inter.empty());
        // overlap really is the vertex-set intersection size
        VertexSet vi;
        std::set_intersection(f.node(rec.node_a).vertex_set.begin(),
                              f.node(rec.node_a).vertex_set.end(),
                              f.node(rec.node_b).vertex_set.begin(),
                              f.node(rec.node_b).vertex_set.end(), std::back_inserter(vi));
        CHECK(vi.size() == rec.overlap_vertices);
        CHECK(rec.density_a >= rec.density_b);
      }
    }
  }
  SECTION("deterministic output order") {
    Graph g = gnp(18, 0.5, 13);
    auto f = make_forest(g, 3, 4);
    auto a = overlap_analysis(full_view(f), 1);
    auto b = overlap_analysis(full_view(f), 1);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].node_a == b[i].node_a);
      CHECK(a[i].node_b == b[i].node_b);
    }
    for (std::size_t i = 1; i < a.size(); ++i) {
      CHECK(a[i - 1].node_a <= a[i].node_a);
    }
  }
}
