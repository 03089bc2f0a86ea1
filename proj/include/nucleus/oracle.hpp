#pragma once

// Brute-force reference decomposition, straight from the definitions: delete
// s-cliques whose member r-cliques fall under the degree threshold until a
// fixpoint, then split survivors into S-connected components. Deliberately
// slow and entirely independent of the peeling implementation; shares only
// the Graph type. Guarded to small inputs.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "nucleus/common.hpp"
#include "nucleus/graph.hpp"

namespace nucleus {

inline constexpr Count kOracleMaxVertices = 30;

using OracleTuple = std::array<VertexId, 4>;  // first r/s entries meaningful

struct OracleDecomposition {
  int r = 0;
  int s = 0;
  std::vector<OracleTuple> cliques;  // all r-cliques, lexicographic
  std::vector<std::uint32_t> kappa;  // aligned with cliques
};

namespace oracle_detail {

inline void check_guard(const Graph& g, int r, int s) {
  if (g.vertex_count() > kOracleMaxVertices)
    throw GuardError("oracle accepts at most " + std::to_string(kOracleMaxVertices) + " vertices");
  if (r < 1 || s <= r || s > 4) throw GuardError("oracle needs 1 <= r < s <= 4");
}

// every k-subset of 0..n-1 whose vertices are pairwise adjacent, lex order
inline std::vector<OracleTuple> all_cliques(const Graph& g, int k) {
  std::vector<OracleTuple> out;
  auto n = static_cast<VertexId>(g.vertex_count());
  OracleTuple t{0, 0, 0, 0};
  auto rec = [&](auto&& self, int depth, VertexId from) -> void {
    if (depth == k) {
      out.push_back(t);
      return;
    }
    for (VertexId v = from; v < n; ++v) {
      bool ok = true;
      for (int i = 0; i < depth; ++i)
        if (!g.has_edge(t[i], v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      t[depth] = v;
      self(self, depth + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

struct Universe {
  std::vector<OracleTuple> rcliques;
  std::vector<OracleTuple> scliques;
  std::vector<std::vector<std::uint32_t>> members;  // per s-clique: r-clique indices
};

inline Universe build_universe(const Graph& g, int r, int s) {
  Universe u;
  u.rcliques = all_cliques(g, r);
  u.scliques = all_cliques(g, s);
  std::map<OracleTuple, std::uint32_t> rindex;
  for (std::uint32_t i = 0; i < u.rcliques.size(); ++i) rindex[u.rcliques[i]] = i;
  u.members.resize(u.scliques.size());
  for (std::uint32_t si = 0; si < u.scliques.size(); ++si) {
    const OracleTuple& sv = u.scliques[si];
    std::array<int, 4> pick{};
    for (int i = 0; i < r; ++i) pick[i] = i;
    for (;;) {
      OracleTuple sub{0, 0, 0, 0};
      for (int i = 0; i < r; ++i) sub[i] = sv[pick[i]];
      u.members[si].push_back(rindex.at(sub));
      int i = r - 1;
      while (i >= 0 && pick[i] == s - r + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return u;
}

// deletes s-cliques containing an under-threshold r-clique until stable
inline void fixpoint(const Universe& u, std::uint32_t k, std::vector<bool>& alive) {
  std::vector<Count> deg(u.rcliques.size());
  for (bool changed = true; changed;) {
    changed = false;
    std::fill(deg.begin(), deg.end(), 0);
    for (std::uint32_t si = 0; si < u.scliques.size(); ++si)
      if (alive[si])
        for (std::uint32_t ri : u.members[si]) ++deg[ri];
    for (std::uint32_t si = 0; si < u.scliques.size(); ++si) {
      if (!alive[si]) continue;
      for (std::uint32_t ri : u.members[si])
        if (deg[ri] < k) {
          alive[si] = false;
          changed = true;
          break;
        }
    }
  }
}

}  // namespace oracle_detail

// kappa(R) = the largest k such that R survives the degree-only fixpoint at
// threshold k (connectivity never affects kappa values).
inline OracleDecomposition oracle_kappa(const Graph& g, int r, int s) {
  oracle_detail::check_guard(g, r, s);
  auto u = oracle_detail::build_universe(g, r, s);
  OracleDecomposition out;
  out.r = r;
  out.s = s;
  out.cliques = u.rcliques;
  out.kappa.assign(u.rcliques.size(), 0);
  std::vector<bool> alive(u.scliques.size(), true);
  for (std::uint32_t k = 1;; ++k) {
    oracle_detail::fixpoint(u, k, alive);
    bool any = false;
    for (std::uint32_t si = 0; si < u.scliques.size(); ++si)
      if (alive[si]) {
        any = true;
        for (std::uint32_t ri : u.members[si]) out.kappa[ri] = k;
      }
    if (!any) break;
  }
  return out;
}

// The k-(r,s)-nuclei per Definition: survivors of the fixpoint at k, split
// into S-connected components; returns each component's r-clique set (sorted
// tuples), components ordered by their smallest tuple.
inline std::vector<std::vector<OracleTuple>> oracle_nuclei(const Graph& g, int r, int s,
                                                           std::uint32_t k) {
  oracle_detail::check_guard(g, r, s);
  if (k < 1) throw GuardError("oracle_nuclei needs k >= 1");
  auto u = oracle_detail::build_universe(g, r, s);
  std::vector<bool> alive(u.scliques.size(), true);
  oracle_detail::fixpoint(u, k, alive);

  // two s-cliques sharing an r-clique are S-connected; chains of such shares
  // generate exactly the S-connectivity classes
  std::vector<std::uint32_t> comp(u.scliques.size());
  for (std::uint32_t i = 0; i < comp.size(); ++i) comp[i] = i;
  auto find = [&](std::uint32_t x) {
    while (comp[x] != x) {
      comp[x] = comp[comp[x]];
      x = comp[x];
    }
    return x;
  };
  std::vector<std::uint32_t> owner(u.rcliques.size(), static_cast<std::uint32_t>(-1));
  for (std::uint32_t si = 0; si < u.scliques.size(); ++si) {
    if (!alive[si]) continue;
    for (std::uint32_t ri : u.members[si]) {
      if (owner[ri] == static_cast<std::uint32_t>(-1))
        owner[ri] = si;
      else
        comp[find(owner[ri])] = find(si);
    }
  }

  std::map<std::uint32_t, std::vector<OracleTuple>> groups;
  for (std::uint32_t ri = 0; ri < u.rcliques.size(); ++ri)
    if (owner[ri] != static_cast<std::uint32_t>(-1))
      groups[find(owner[ri])].push_back(u.rcliques[ri]);

  std::vector<std::vector<OracleTuple>> out;
  for (auto& [root, tuples] : groups) {
    std::sort(tuples.begin(), tuples.end());
    out.push_back(std::move(tuples));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nucleus
