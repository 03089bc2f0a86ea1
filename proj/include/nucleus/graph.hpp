#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "nucleus/bucket_queue.hpp"
#include "nucleus/common.hpp"

namespace nucleus {

/// Sorted, duplicate-free vertex ids.
using VertexSet = std::vector<VertexId>;

// Immutable undirected simple graph in CSR form. Neighbor lists are strictly
// ascending; vertex ids are dense 0..n-1 with the original input labels kept
// for output.
class Graph {
 public:
  Graph() = default;

  // edges must be self-loop free with u < v; duplicates are merged here.
  // labels maps dense id -> original label (empty = identity).
  static Graph from_normalized_edges(Count n, std::vector<std::pair<VertexId, VertexId>> edges,
                                     std::vector<VertexId> labels = {}) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Graph g;
    g.labels_ = std::move(labels);
    g.off_.assign(n + 1, 0);
    for (const auto& [u, v] : edges) {
      ++g.off_[u + 1];
      ++g.off_[v + 1];
    }
    for (Count i = 0; i < n; ++i) g.off_[i + 1] += g.off_[i];
    g.adj_.resize(2 * edges.size());
    std::vector<std::uint64_t> fill(g.off_.begin(), g.off_.end() - 1);
    for (const auto& [u, v] : edges) {
      g.adj_[fill[u]++] = v;
      g.adj_[fill[v]++] = u;
    }
    // rows come out ascending because the edge list is sorted by (u,v), except
    // the lower-neighbor part of each row which is appended in u order anyway;
    // sort defensively to keep the invariant independent of the fill order.
    for (Count v = 0; v < n; ++v) {
      auto b = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.off_[v]);
      auto e = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.off_[v + 1]);
      if (!std::is_sorted(b, e)) std::sort(b, e);
    }
    return g;
  }

  Count vertex_count() const { return off_.empty() ? 0 : off_.size() - 1; }
  Count edge_count() const { return adj_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adj_.data() + off_[v], adj_.data() + off_[v + 1]};
  }
  Count degree(VertexId v) const { return off_[v + 1] - off_[v]; }

  bool has_edge(VertexId u, VertexId v) const {
    if (u == v) return false;
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  VertexId original_id(VertexId v) const { return labels_.empty() ? v : labels_[v]; }
  bool has_original_labels() const { return !labels_.empty(); }

  // Structural equality over original labels (dense numbering is an internal
  // indexing choice and may differ between loads of equivalent files).
  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto labeled_edges = [](const Graph& g) {
      std::vector<std::pair<VertexId, VertexId>> out;
      out.reserve(g.edge_count());
      for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v : g.neighbors(u))
          if (u < v) {
            VertexId a0 = g.original_id(u), b0 = g.original_id(v);
            out.emplace_back(std::min(a0, b0), std::max(a0, b0));
          }
      std::sort(out.begin(), out.end());
      return out;
    };
    return labeled_edges(a) == labeled_edges(b);
  }

 private:
  std::vector<std::uint64_t> off_;
  std::vector<VertexId> adj_;
  std::vector<VertexId> labels_;
};

struct LoadStats {
  Count lines_read = 0;
  Count self_loops_dropped = 0;
  Count duplicate_edges_dropped = 0;
};

struct LoadResult {
  Graph graph;
  LoadStats stats;
};

namespace detail {

inline bool parse_vertex_token(std::string_view tok, VertexId& out, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line_no, "non-integer token '" + std::string(tok) + "'");
  if (value > 0xFFFFFFFFull)
    throw ParseError(line_no, "vertex id " + std::to_string(value) + " exceeds 2^32-1");
  out = static_cast<VertexId>(value);
  return true;
}

}  // namespace detail

// Edge-list loader. Lines are `u w` pairs separated by arbitrary whitespace;
// lines whose first non-blank character is '#' or '%' are comments. Ids are
// compacted to 0..n-1 in first-seen order; self-loops and duplicate edges are
// dropped and counted.
inline LoadResult load_graph(std::istream& in) {
  LoadResult res;
  std::unordered_map<VertexId, VertexId> dense;
  std::vector<VertexId> labels;
  std::vector<std::pair<VertexId, VertexId>> edges;
  auto intern = [&](VertexId label) {
    auto [it, inserted] = dense.emplace(label, static_cast<VertexId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv(line);
    std::size_t pos = sv.find_first_not_of(" \t\r\f\v");
    if (pos == std::string_view::npos) continue;
    if (sv[pos] == '#' || sv[pos] == '%') continue;
    ++res.stats.lines_read;

    VertexId tok[2];
    int ntok = 0;
    while (pos != std::string_view::npos) {
      std::size_t end = sv.find_first_of(" \t\r\f\v", pos);
      std::string_view t = sv.substr(pos, end == std::string_view::npos ? end : end - pos);
      if (ntok == 2) throw ParseError(line_no, "expected two vertex ids, got extra token");
      detail::parse_vertex_token(t, tok[ntok], line_no);
      ++ntok;
      pos = sv.find_first_not_of(" \t\r\f\v", end);
    }
    if (ntok != 2) throw ParseError(line_no, "expected two vertex ids");

    VertexId u = intern(tok[0]);
    VertexId v = intern(tok[1]);
    if (u == v) {
      ++res.stats.self_loops_dropped;
      continue;
    }
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }

  std::sort(edges.begin(), edges.end());
  Count before = edges.size();
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  res.stats.duplicate_edges_dropped = before - edges.size();
  Count n = labels.size();
  res.graph = Graph::from_normalized_edges(n, std::move(edges), std::move(labels));
  return res;
}

inline LoadResult load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  return load_graph(in);
}

// Writes the graph back as an edge list with original labels. Edges are
// ordered so that reloading reproduces the same first-seen id compaction:
// each dense vertex is introduced, in order, by one of its edges before the
// remaining edges are emitted in lexicographic order.
inline void write_edge_list(const Graph& g, std::ostream& out) {
  Count n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::unordered_set<std::uint64_t> emitted;
  auto key = [](VertexId u, VertexId v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
  };
  auto emit = [&](VertexId first, VertexId second) {
    out << g.original_id(first) << ' ' << g.original_id(second) << '\n';
    emitted.insert(key(std::min(first, second), std::max(first, second)));
  };

  for (VertexId w = 0; w < n; ++w) {
    if (seen[w]) continue;
    auto nb = g.neighbors(w);
    if (nb.empty()) continue;  // isolated vertices cannot appear in an edge list
    if (nb.front() < w) {
      emit(nb.front(), w);  // smallest already-introduced neighbor
    } else if (w + 1 < n && g.has_edge(w, w + 1)) {
      emit(w, w + 1);
      seen[w + 1] = true;
    } else {
      emit(w, nb.front());
      seen[nb.front()] = true;
    }
    seen[w] = true;
  }
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : g.neighbors(u))
      if (u < v && !emitted.count(key(u, v))) out << g.original_id(u) << ' ' << g.original_id(v) << '\n';
}

struct DegeneracyOrder {
  std::vector<VertexId> order;                // removal sequence
  std::vector<std::uint32_t> rank;            // position of each vertex in order
  std::vector<std::uint32_t> removal_degree;  // degree at removal, aligned with order
  std::uint32_t degeneracy = 0;
};

// Smallest-last ordering by repeated minimum-degree removal (ties by smallest
// vertex id). The maximum removal degree is the degeneracy.
inline DegeneracyOrder degeneracy_order(const Graph& g) {
  Count n = g.vertex_count();
  DegeneracyOrder out;
  out.order.reserve(n);
  out.rank.assign(n, 0);
  out.removal_degree.reserve(n);

  std::vector<std::uint32_t> deg(n);
  for (VertexId v = 0; v < n; ++v) deg[v] = static_cast<std::uint32_t>(g.degree(v));
  MinBucketQueue q(std::move(deg));
  while (!q.empty()) {
    auto [v, d] = q.pop_min();
    out.rank[v] = static_cast<std::uint32_t>(out.order.size());
    out.order.push_back(v);
    out.removal_degree.push_back(d);
    out.degeneracy = std::max(out.degeneracy, d);
    for (VertexId u : g.neighbors(v))
      if (!q.popped(u)) q.decrement(u);
  }
  return out;
}

// Number of edges with both endpoints in the sorted set s.
inline Count internal_edge_count(const Graph& g, std::span<const VertexId> s) {
  Count e = 0;
  for (VertexId u : s) {
    auto nb = g.neighbors(u);
    // merge: both nb and s ascending
    std::size_t i = 0, j = 0;
    while (i < nb.size() && j < s.size()) {
      if (nb[i] < s[j]) {
        ++i;
      } else if (nb[i] > s[j]) {
        ++j;
      } else {
        if (nb[i] > u) ++e;  // count each edge once
        ++i;
        ++j;
      }
    }
  }
  return e;
}

// Edge density |E(S)| / C(|S|,2) of the induced subgraph on s (sorted ids).
inline double induced_density(const Graph& g, std::span<const VertexId> s) {
  if (s.size() < 2)
    throw UndefinedDensityError("density is undefined for fewer than 2 vertices");
  Count e = internal_edge_count(g, s);
  double pairs = 0.5 * static_cast<double>(s.size()) * static_cast<double>(s.size() - 1);
  return static_cast<double>(e) / pairs;
}

}  // namespace nucleus
