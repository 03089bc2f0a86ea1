#pragma once

// Deterministic graph constructors for validation runs and tests.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "nucleus/common.hpp"
#include "nucleus/graph.hpp"

namespace nucleus {

inline Graph from_pairs(Count n, std::vector<std::pair<VertexId, VertexId>> pairs) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u == v) continue;
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return Graph::from_normalized_edges(n, std::move(edges));
}

inline Graph complete_graph(Count n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_normalized_edges(n, std::move(e));
}

inline Graph path_graph(Count n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph::from_normalized_edges(n, std::move(e));
}

inline Graph cycle_graph(Count n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  if (n > 2) e.emplace_back(0, static_cast<VertexId>(n - 1));
  return Graph::from_normalized_edges(n, std::move(e));
}

/// Star: vertex 0 joined to `leaves` leaves.
inline Graph star_graph(Count leaves) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::from_normalized_edges(leaves + 1, std::move(e));
}

/// Two K_4s {0,1,2,3} and {0,1,4,5} sharing the edge {0,1}: 6 vertices, 11 edges.
inline Graph two_k4_sharing_edge() {
  std::vector<std::pair<VertexId, VertexId>> e = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                                  {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}};
  return Graph::from_normalized_edges(6, std::move(e));
}

namespace detail {
// engine-portable Bernoulli: top 53 bits against a fixed threshold
inline bool coin(std::mt19937_64& rng, std::uint64_t threshold53) {
  return (rng() >> 11) < threshold53;
}
inline std::uint64_t threshold53(double p) {
  if (p <= 0) return 0;
  if (p >= 1) return 1ull << 53;
  return static_cast<std::uint64_t>(p * 9007199254740992.0);  // p * 2^53
}
}  // namespace detail

/// Erdos-Renyi G(n, p), reproducible for a given seed across platforms.
inline Graph gnp(Count n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uint64_t th = detail::threshold53(p);
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (detail::coin(rng, th)) e.emplace_back(u, v);
  return Graph::from_normalized_edges(n, std::move(e));
}

// Disjoint G(size, p_in) blocks plus random inter-block edges; a cheap way to
// get large inputs with plenty of small dense structures.
inline Graph planted_communities(Count blocks, Count size, double p_in, Count inter_edges,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uint64_t th = detail::threshold53(p_in);
  Count n = blocks * size;
  std::vector<std::pair<VertexId, VertexId>> e;
  for (Count b = 0; b < blocks; ++b) {
    auto base = static_cast<VertexId>(b * size);
    for (VertexId i = 0; i < size; ++i)
      for (VertexId j = i + 1; j < size; ++j)
        if (detail::coin(rng, th)) e.emplace_back(base + i, base + j);
  }
  for (Count k = 0; k < inter_edges; ++k) {
    auto u = static_cast<VertexId>(rng() % n);
    auto v = static_cast<VertexId>(rng() % n);
    if (u == v) continue;
    e.emplace_back(std::min(u, v), std::max(u, v));
  }
  return Graph::from_normalized_edges(n, std::move(e));
}

}  // namespace nucleus
