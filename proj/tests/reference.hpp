#pragma once

// Test-only reference implementations, kept textbook-plain and structurally
// independent of the library code they check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "nucleus/graph.hpp"

namespace refimpl {

using nucleus::Count;
using nucleus::Graph;
using nucleus::VertexId;

// Batagelj-Zaversnik array implementation of Matula-Beck core decomposition.
inline std::vector<std::uint32_t> core_numbers(const Graph& g) {
  std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> deg(n), core(n);
  std::uint32_t md = 0;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = static_cast<std::uint32_t>(g.degree(static_cast<VertexId>(v)));
    md = std::max(md, deg[v]);
  }
  std::vector<std::size_t> bin(md + 2, 0), pos(n), vert(n);
  for (std::size_t v = 0; v < n; ++v) ++bin[deg[v]];
  std::size_t start = 0;
  for (std::uint32_t d = 0; d <= md; ++d) {
    std::size_t c = bin[d];
    bin[d] = start;
    start += c;
  }
  for (std::size_t v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (std::uint32_t d = md + 1; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t v = vert[i];
    core[v] = deg[v];
    for (VertexId u : g.neighbors(static_cast<VertexId>(v))) {
      if (deg[u] > deg[v]) {
        std::size_t du = deg[u], pu = pos[u];
        std::size_t pw = bin[du], w = vert[pw];
        if (u != w) {
          pos[u] = pw;
          vert[pu] = w;
          pos[w] = pu;
          vert[pw] = u;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  return core;
}

inline std::uint32_t degeneracy(const Graph& g) {
  std::uint32_t d = 0;
  for (std::uint32_t c : core_numbers(g)) d = std::max(d, c);
  return d;
}

// Set-based truss peeling with a running maximum; returns the truss-style
// kappa per edge keyed by its sorted endpoint pair.
inline std::map<std::pair<VertexId, VertexId>, std::uint32_t> truss_numbers(const Graph& g) {
  std::map<std::pair<VertexId, VertexId>, std::uint32_t> support;
  auto common = [&](VertexId u, VertexId v) {
    std::vector<VertexId> out;
    auto a = g.neighbors(u), b = g.neighbors(v);
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  };
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v : g.neighbors(u))
      if (u < v) support[{u, v}] = static_cast<std::uint32_t>(common(u, v).size());

  std::set<std::pair<std::uint32_t, std::pair<VertexId, VertexId>>> queue;
  std::set<std::pair<VertexId, VertexId>> alive;
  for (const auto& [e, s] : support) {
    queue.insert({s, e});
    alive.insert(e);
  }
  std::map<std::pair<VertexId, VertexId>, std::uint32_t> kappa;
  std::uint32_t running = 0;
  while (!queue.empty()) {
    auto [s, e] = *queue.begin();
    queue.erase(queue.begin());
    running = std::max(running, s);
    kappa[e] = running;
    alive.erase(e);
    auto [u, v] = e;
    for (VertexId w : common(u, v)) {
      std::pair<VertexId, VertexId> e1{std::min(u, w), std::max(u, w)};
      std::pair<VertexId, VertexId> e2{std::min(v, w), std::max(v, w)};
      if (!alive.count(e1) || !alive.count(e2)) continue;
      for (const auto& f : {e1, e2}) {
        queue.erase({support[f], f});
        --support[f];
        queue.insert({support[f], f});
      }
    }
  }
  return kappa;
}

// every r-subset of pairwise-adjacent vertices, lexicographic, r <= 4
inline std::vector<std::array<VertexId, 4>> brute_cliques(const Graph& g, int r) {
  std::vector<std::array<VertexId, 4>> out;
  auto n = static_cast<VertexId>(g.vertex_count());
  std::array<VertexId, 4> t{0, 0, 0, 0};
  auto rec = [&](auto&& self, int depth, VertexId from) -> void {
    if (depth == r) {
      out.push_back(t);
      return;
    }
    for (VertexId v = from; v < n; ++v) {
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i) ok = g.has_edge(t[i], v);
      if (!ok) continue;
      t[depth] = v;
      self(self, depth + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

// triangle count by edge iteration: for each edge (u,v), u < v, common
// neighbors w > v contribute one triangle each
inline Count triangle_count(const Graph& g) {
  Count total = 0;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    auto nu = g.neighbors(u);
    for (VertexId v : nu) {
      if (v < u) continue;
      auto nv = g.neighbors(v);
      auto i = std::upper_bound(nu.begin(), nu.end(), v);
      auto j = std::upper_bound(nv.begin(), nv.end(), v);
      while (i != nu.end() && j != nv.end()) {
        if (*i < *j)
          ++i;
        else if (*i > *j)
          ++j;
        else {
          ++total;
          ++i;
          ++j;
        }
      }
    }
  }
  return total;
}

inline Count per_edge_triangles(const Graph& g, VertexId u, VertexId v) {
  Count c = 0;
  for (VertexId w = 0; w < g.vertex_count(); ++w)
    if (w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w)) ++c;
  return c;
}

}  // namespace refimpl
