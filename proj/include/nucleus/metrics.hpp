#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "nucleus/common.hpp"
#include "nucleus/forest.hpp"

namespace nucleus {

struct DensityHistogram {
  double bin_width = 0.05;
  Count min_size = 1;               // size filter of the underlying view
  std::vector<double> bin_edges;    // ascending, bins partition [0,1]
  std::vector<Count> counts;
};

// Bins are [lo, hi) except the last, which closes at 1.0 so perfect cliques
// land in the top bin. Binning uses exact integer arithmetic on the nucleus's
// edge count, so boundary densities never wobble across platforms.
inline DensityHistogram density_histogram(const ForestView& view, double bin_width = 0.05) {
  auto bins = static_cast<Count>(std::llround(1.0 / bin_width));
  if (bins < 1 || std::abs(bin_width * static_cast<double>(bins) - 1.0) > 1e-9)
    throw UnsupportedParameterError("bin width must divide 1 evenly");
  DensityHistogram h;
  h.bin_width = bin_width;
  h.min_size = view.min_size;
  h.counts.assign(bins, 0);
  h.bin_edges.resize(bins + 1);
  for (Count i = 0; i <= bins; ++i) h.bin_edges[i] = static_cast<double>(i) / static_cast<double>(bins);
  for (std::uint32_t id : view.nodes) {
    const NucleusNode& n = view.node(id);
    Count sz = n.size();
    unsigned __int128 num = static_cast<unsigned __int128>(2) * n.internal_edges * bins;
    Count den = sz * (sz - 1);
    Count b = static_cast<Count>(num / den);
    if (b >= bins) b = bins - 1;  // density exactly 1.0
    ++h.counts[b];
  }
  return h;
}

struct SizeDensityRecord {
  Count size = 0;
  double density = 0.0;
};

/// One record per nucleus in the view, sorted by size then density.
inline std::vector<SizeDensityRecord> size_density_scatter(const ForestView& view) {
  std::vector<SizeDensityRecord> out;
  out.reserve(view.nodes.size());
  for (std::uint32_t id : view.nodes) {
    const NucleusNode& n = view.node(id);
    out.push_back({n.size(), n.density});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size != b.size ? a.size < b.size : a.density < b.density;
  });
  return out;
}

// Vertex overlap between two nuclei neither of which contains the other.
// node_a is the denser of the pair (ties: lower id).
struct OverlapRecord {
  std::uint32_t node_a = 0;
  std::uint32_t node_b = 0;
  Count overlap_vertices = 0;
  double jaccard = 0.0;
  double density_a = 0.0;  // >= density_b
  double density_b = 0.0;
};

// All unordered non-ancestor pairs with vertex intersection >= min_overlap.
// Candidate pairs come from a vertex -> nuclei incidence index (only nuclei
// sharing a vertex can overlap), which also yields the exact intersection
// counts; ancestor pairs are discarded with DFS interval containment.
inline std::vector<OverlapRecord> overlap_analysis(const ForestView& view, Count min_overlap = 1) {
  if (min_overlap < 1) throw UnsupportedParameterError("min_overlap must be >= 1");
  std::vector<OverlapRecord> out;
  if (view.nodes.empty()) return out;
  const NucleusForest& f = *view.forest;

  // DFS numbering over the view
  std::vector<std::uint64_t> tin(f.node_count(), 0), tout(f.node_count(), 0);
  std::uint64_t clock = 0;
  std::vector<std::pair<std::uint32_t, bool>> stack;
  for (auto it = view.roots.rbegin(); it != view.roots.rend(); ++it) stack.push_back({*it, false});
  while (!stack.empty()) {
    auto [id, done] = stack.back();
    stack.pop_back();
    if (done) {
      tout[id] = clock++;
      continue;
    }
    tin[id] = clock++;
    stack.push_back({id, true});
    const auto& ch = view.children[view.pos[id]];
    for (auto cit = ch.rbegin(); cit != ch.rend(); ++cit) stack.push_back({*cit, false});
  }
  auto is_ancestor = [&](std::uint32_t a, std::uint32_t b) {
    return tin[a] <= tin[b] && tout[b] <= tout[a];
  };

  std::vector<std::vector<std::uint32_t>> at_vertex;
  {
    VertexId maxv = 0;
    for (std::uint32_t id : view.nodes)
      if (!view.node(id).vertex_set.empty()) maxv = std::max(maxv, view.node(id).vertex_set.back());
    at_vertex.resize(static_cast<std::size_t>(maxv) + 1);
  }
  for (std::uint32_t id : view.nodes)
    for (VertexId v : view.node(id).vertex_set) at_vertex[v].push_back(id);

  std::unordered_map<std::uint64_t, Count> shared;
  for (const auto& lst : at_vertex)
    for (std::size_t i = 0; i < lst.size(); ++i)
      for (std::size_t j = i + 1; j < lst.size(); ++j)
        ++shared[(static_cast<std::uint64_t>(lst[i]) << 32) | lst[j]];

  for (const auto& [key, cnt] : shared) {
    if (cnt < min_overlap) continue;
    auto a = static_cast<std::uint32_t>(key >> 32);
    auto b = static_cast<std::uint32_t>(key & 0xFFFFFFFFu);
    if (is_ancestor(a, b) || is_ancestor(b, a)) continue;
    const NucleusNode& na = f.node(a);
    const NucleusNode& nb = f.node(b);
    OverlapRecord rec;
    bool a_first = na.density > nb.density || (na.density == nb.density && a < b);
    rec.node_a = a_first ? a : b;
    rec.node_b = a_first ? b : a;
    rec.density_a = a_first ? na.density : nb.density;
    rec.density_b = a_first ? nb.density : na.density;
    rec.overlap_vertices = cnt;
    rec.jaccard = static_cast<double>(cnt) /
                  static_cast<double>(na.size() + nb.size() - cnt);
    out.push_back(rec);
  }
  std::sort(out.begin(), out.end(), [](const OverlapRecord& x, const OverlapRecord& y) {
    return x.node_a != y.node_a ? x.node_a < y.node_a : x.node_b < y.node_b;
  });
  return out;
}

}  // namespace nucleus
