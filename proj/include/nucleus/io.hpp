#pragma once

// Export formats: kappa CSV, forest JSON/DOT, metrics CSVs. All output is
// deterministic for a given graph and configuration; numeric CSV fields use
// '.' as the decimal separator and densities carry 6 decimals.

#include <algorithm>
#include <array>
#include <cstdio>
#include <ostream>
#include <string>

#include "json.hpp"
#include "nucleus/cliques.hpp"
#include "nucleus/decompose.hpp"
#include "nucleus/forest.hpp"
#include "nucleus/graph.hpp"
#include "nucleus/metrics.hpp"

namespace nucleus {

namespace detail {
inline std::string fixed6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}
}  // namespace detail

inline void write_kappa_csv(std::ostream& out, const Graph& g, const CliqueIndex& idx,
                            const KappaAssignment& ka) {
  for (int i = 0; i < idx.r(); ++i) out << 'v' << (i + 1) << ',';
  out << "kappa\n";
  std::array<VertexId, 4> t{};
  for (CliqueId c = 0; c < idx.size(); ++c) {
    idx.vertices_of(c, t.data());
    for (int i = 0; i < idx.r(); ++i) out << g.original_id(t[i]) << ',';
    out << ka.kappa[c] << '\n';
  }
}

inline nlohmann::ordered_json forest_to_json(const ForestView& view, const Graph& g,
                                             bool include_vertices) {
  nlohmann::ordered_json j;
  j["nodes"] = nlohmann::ordered_json::array();
  for (std::uint32_t id : view.nodes) {
    const NucleusNode& n = view.node(id);
    nlohmann::ordered_json nj;
    nj["id"] = n.id;
    nj["k"] = n.k;
    nj["size"] = n.size();
    nj["density"] = n.density;
    std::uint32_t p = view.parent[view.pos[id]];
    if (p == kInvalidNode)
      nj["parent"] = nullptr;
    else
      nj["parent"] = p;
    nj["children"] = view.children[view.pos[id]];
    if (include_vertices) {
      std::vector<VertexId> labels;
      labels.reserve(n.vertex_set.size());
      for (VertexId v : n.vertex_set) labels.push_back(g.original_id(v));
      std::sort(labels.begin(), labels.end());
      nj["vertices"] = labels;
    }
    j["nodes"].push_back(std::move(nj));
  }
  j["roots"] = view.roots;
  return j;
}

// 11 fixed stops from blue (density 0) through cyan/green/yellow to red
// (density 1), indexed by floor(density * 10).
inline const char* density_color(double density) {
  static constexpr std::array<const char*, 11> kPalette = {
      "#0000FF", "#0066FF", "#00CCFF", "#00FFCC", "#00FF66", "#00FF00",
      "#66FF00", "#CCFF00", "#FFCC00", "#FF6600", "#FF0000"};
  int i = static_cast<int>(density * 10.0);
  if (i < 0) i = 0;
  if (i > 10) i = 10;
  return kPalette[static_cast<std::size_t>(i)];
}

inline const char* size_shape(Count size) {
  if (size <= 100) return "circle";
  if (size <= 1000) return "hexagon";
  if (size <= 10000) return "square";
  return "triangle";
}

inline double size_bucket_cap(Count size) {
  if (size <= 100) return 100;
  if (size <= 1000) return 1000;
  if (size <= 10000) return 10000;
  return 100000;
}

// Chain-contracted rendering: color encodes density, shape the log10 size
// bucket, width the relative size within the bucket; contracted chains are
// edges labeled with the number of collapsed forest edges.
inline void write_forest_dot(std::ostream& out, const ForestView& view,
                             const ContractedForest& cf) {
  out << "digraph nuclei {\n";
  out << "  rankdir=TB;\n";
  out << "  node [style=filled, fixedsize=true];\n";
  for (std::uint32_t id : cf.nodes) {
    const NucleusNode& n = view.node(id);
    double w = 0.4 + 1.1 * std::min(1.0, static_cast<double>(n.size()) / size_bucket_cap(n.size()));
    char wbuf[32];
    std::snprintf(wbuf, sizeof(wbuf), "%.3f", w);
    out << "  n" << id << " [shape=" << size_shape(n.size()) << ", fillcolor=\""
        << density_color(n.density) << "\", width=" << wbuf << ", height=" << wbuf
        << ", label=\"" << id << "\"];\n";
  }
  for (const auto& e : cf.edges) {
    out << "  n" << e.parent << " -> n" << e.child;
    if (e.chain_edges > 1) out << " [label=\"" << e.chain_edges << "\"]";
    out << ";\n";
  }
  out << "}\n";
}

inline void write_histogram_csv(std::ostream& out, const DensityHistogram& h) {
  out << "bin_low,bin_high,count\n";
  for (std::size_t i = 0; i < h.counts.size(); ++i)
    out << detail::fixed6(h.bin_edges[i]) << ',' << detail::fixed6(h.bin_edges[i + 1]) << ','
        << h.counts[i] << '\n';
}

inline void write_scatter_csv(std::ostream& out, const std::vector<SizeDensityRecord>& recs) {
  out << "size,density\n";
  for (const auto& r : recs) out << r.size << ',' << detail::fixed6(r.density) << '\n';
}

inline void write_overlaps_csv(std::ostream& out, const std::vector<OverlapRecord>& recs) {
  out << "node_a,node_b,overlap,jaccard,density_hi,density_lo\n";
  for (const auto& r : recs)
    out << r.node_a << ',' << r.node_b << ',' << r.overlap_vertices << ','
        << detail::fixed6(r.jaccard) << ',' << detail::fixed6(r.density_a) << ','
        << detail::fixed6(r.density_b) << '\n';
}

}  // namespace nucleus
