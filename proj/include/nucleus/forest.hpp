#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "nucleus/cliques.hpp"
#include "nucleus/common.hpp"
#include "nucleus/decompose.hpp"
#include "nucleus/graph.hpp"

namespace nucleus {

// One k-(r,s)-nucleus. Only the r-cliques whose kappa equals this node's k
// are stored directly (own_rcliques); the nucleus's full K_r membership is
// that set united with all descendants', see NucleusForest::member_rcliques.
struct NucleusNode {
  std::uint32_t id = 0;
  std::uint32_t k = 0;
  std::uint32_t parent = kInvalidNode;
  std::vector<std::uint32_t> children;
  VertexSet vertex_set;
  Count internal_edges = 0;
  double density = 0.0;
  std::vector<CliqueId> own_rcliques;

  Count size() const { return vertex_set.size(); }
};

// Laminar forest of all k-(r,s)-nuclei, k >= 1. Each distinct nucleus appears
// once, labeled with the largest k for which it qualifies; node ids follow
// creation order (descending k, then discovery order within a level).
class NucleusForest {
 public:
  int r() const { return r_; }
  int s() const { return s_; }
  std::span<const NucleusNode> nodes() const { return nodes_; }
  std::span<const std::uint32_t> roots() const { return roots_; }
  Count node_count() const { return nodes_.size(); }

  const NucleusNode& node(std::uint32_t id) const {
    if (id >= nodes_.size()) throw std::out_of_range("unknown forest node id");
    return nodes_[id];
  }

  /// Node holding the given r-clique at its own kappa level (kInvalidNode for kappa 0).
  std::uint32_t clique_home(CliqueId c) const { return home_.at(c); }

  /// Full K_r membership of a nucleus: own cliques plus all descendants'.
  std::vector<CliqueId> member_rcliques(std::uint32_t id) const {
    std::vector<CliqueId> out;
    std::vector<std::uint32_t> stack{id};
    while (!stack.empty()) {
      const NucleusNode& n = node(stack.back());
      stack.pop_back();
      out.insert(out.end(), n.own_rcliques.begin(), n.own_rcliques.end());
      stack.insert(stack.end(), n.children.begin(), n.children.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Parent-child pairs where the child is sparser than the parent. The
  /// densify-toward-leaves trend is empirical, so this is reported, not asserted.
  Count density_inversions() const {
    Count c = 0;
    for (const auto& n : nodes_)
      if (n.parent != kInvalidNode && n.density < nodes_[n.parent].density) ++c;
    return c;
  }

 private:
  friend NucleusForest build_forest(const Graph&, const CliqueIndex&, const KappaAssignment&,
                                    std::uint64_t);
  int r_ = 0, s_ = 0;
  std::vector<NucleusNode> nodes_;
  std::vector<std::uint32_t> roots_;
  std::vector<std::uint32_t> home_;
};

// Extracts all nuclei as connected components of the kappa-thresholded
// supergraphs, highest k first, over a union-find on r-cliques. An s-clique
// participates at level k iff all of its member r-cliques have kappa >= k,
// which first happens at the level of its minimum-kappa member; so every link
// is applied exactly once and traversal never re-enters higher-k components.
// A component yields a node at level k only when it contains a kappa == k
// clique (otherwise its membership is unchanged from level k+1).
inline NucleusForest build_forest(const Graph& g, const CliqueIndex& idx,
                                  const KappaAssignment& ka,
                                  std::uint64_t memory_budget = kDefaultMemoryBudget) {
  if (!(ka.fingerprint == fingerprint_of(g)))
    throw ConsistencyError("kappa assignment was computed on a different graph");
  if (ka.r != idx.r()) throw ConsistencyError("clique index r does not match kappa assignment");
  if (ka.kappa.size() != idx.size())
    throw ConsistencyError("clique index size does not match kappa assignment");

  SCliqueProvider provider(g, idx, ka.s, memory_budget);
  Count t = idx.size();

  NucleusForest f;
  f.r_ = ka.r;
  f.s_ = ka.s;
  f.home_.assign(t, kInvalidNode);

  std::uint32_t maxk = 0;
  for (std::uint32_t kk : ka.kappa) maxk = std::max(maxk, kk);
  if (maxk != ka.max_kappa)
    throw ConsistencyError("kappa assignment max_kappa does not match its kappa array");

  std::vector<std::vector<CliqueId>> by_k(static_cast<std::size_t>(maxk) + 1);
  for (CliqueId c = 0; c < t; ++c) by_k[ka.kappa[c]].push_back(c);

  std::vector<CliqueId> dsu_parent(t);
  std::vector<std::uint32_t> dsu_size(t, 1);
  for (CliqueId c = 0; c < t; ++c) dsu_parent[c] = c;
  auto find = [&](CliqueId x) {
    while (dsu_parent[x] != x) {
      dsu_parent[x] = dsu_parent[dsu_parent[x]];
      x = dsu_parent[x];
    }
    return x;
  };
  // pending[root]: top forest nodes of the subcomponents merged under root
  std::unordered_map<CliqueId, std::vector<std::uint32_t>> pending;
  auto unite = [&](CliqueId a, CliqueId b) {
    CliqueId ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (dsu_size[ra] < dsu_size[rb]) std::swap(ra, rb);
    dsu_parent[rb] = ra;
    dsu_size[ra] += dsu_size[rb];
    auto it = pending.find(rb);
    if (it != pending.end()) {
      std::vector<std::uint32_t> tops = std::move(it->second);
      pending.erase(it);
      auto& dst = pending[ra];
      dst.insert(dst.end(), tops.begin(), tops.end());
    }
  };

  std::vector<std::uint8_t> mark(g.vertex_count(), 0);
  std::unordered_map<CliqueId, std::uint32_t> node_of_root;
  std::vector<VertexId> verts;

  for (std::uint32_t k = maxk; k >= 1; --k) {
    const auto& ids = by_k[k];
    if (ids.empty()) continue;

    for (CliqueId c : ids) {
      provider.for_each_containing(c, [&](std::span<const VertexId>,
                                          std::span<const CliqueId> mem) {
        for (CliqueId m : mem)
          if (ka.kappa[m] < k) return;
        for (CliqueId m : mem)
          if (m != c) unite(c, m);
      });
    }

    std::size_t first_new = f.nodes_.size();
    node_of_root.clear();
    for (CliqueId c : ids) {
      CliqueId root = find(c);
      auto [it, inserted] = node_of_root.try_emplace(root, static_cast<std::uint32_t>(f.nodes_.size()));
      if (inserted) {
        if (dsu_size[root] == 1)
          throw std::logic_error("build_forest: kappa >= 1 clique lies in no qualifying s-clique");
        NucleusNode n;
        n.id = it->second;
        n.k = k;
        auto pit = pending.find(root);
        if (pit != pending.end()) {
          n.children = std::move(pit->second);
          std::sort(n.children.begin(), n.children.end());
        }
        pending[root] = {n.id};
        f.nodes_.push_back(std::move(n));
        for (std::uint32_t ch : f.nodes_.back().children) {
          if (f.nodes_[ch].k <= k)
            throw std::logic_error("build_forest: child k not strictly greater than parent k");
          f.nodes_[ch].parent = f.nodes_.back().id;
        }
      }
      f.home_[c] = it->second;
      f.nodes_[it->second].own_rcliques.push_back(c);
    }

    // vertex sets and densities of the nodes created at this level
    std::array<VertexId, 4> tup{};
    for (std::size_t ni = first_new; ni < f.nodes_.size(); ++ni) {
      NucleusNode& n = f.nodes_[ni];
      verts.clear();
      for (CliqueId c : n.own_rcliques) {
        idx.vertices_of(c, tup.data());
        for (int j = 0; j < ka.r; ++j) verts.push_back(tup[j]);
      }
      for (std::uint32_t ch : n.children)
        verts.insert(verts.end(), f.nodes_[ch].vertex_set.begin(), f.nodes_[ch].vertex_set.end());
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
      n.vertex_set = verts;

      for (VertexId v : n.vertex_set) mark[v] = 1;
      Count e = 0;
      for (VertexId v : n.vertex_set)
        for (VertexId w : g.neighbors(v))
          if (w > v && mark[w]) ++e;
      for (VertexId v : n.vertex_set) mark[v] = 0;
      n.internal_edges = e;
      Count sz = n.vertex_set.size();
      n.density = sz < 2 ? 0.0 : 2.0 * static_cast<double>(e) / (static_cast<double>(sz) * static_cast<double>(sz - 1));
    }
  }

  for (const auto& n : f.nodes_)
    if (n.parent == kInvalidNode) f.roots_.push_back(n.id);
  return f;
}

inline NucleusForest build_forest(const Graph& g, const KappaAssignment& ka,
                                  std::uint64_t memory_budget = kDefaultMemoryBudget) {
  CliqueIndex idx = enumerate_r_cliques(g, ka.r);
  return build_forest(g, idx, ka, memory_budget);
}

/// Vertex set of one nucleus (union over its member cliques).
inline const VertexSet& nucleus_vertices(const NucleusForest& f, std::uint32_t id) {
  return f.node(id).vertex_set;
}

// Read-only selection of forest nodes with view-local parent/children links.
struct ForestView {
  const NucleusForest* forest = nullptr;
  Count min_size = 1;
  std::vector<std::uint32_t> nodes;  // kept ids, ascending
  std::vector<std::uint32_t> parent;            // per kept position; node id or kInvalidNode
  std::vector<std::vector<std::uint32_t>> children;  // per kept position; node ids
  std::vector<std::uint32_t> roots;
  std::vector<std::uint32_t> pos;  // forest node id -> kept position or kInvalidNode

  bool contains(std::uint32_t id) const { return id < pos.size() && pos[id] != kInvalidNode; }
  const NucleusNode& node(std::uint32_t id) const { return forest->node(id); }
  Count size() const { return nodes.size(); }
};

// Drops nuclei with fewer than min_vertices vertices; survivors are re-linked
// to their nearest surviving ancestor. Vertex sets nest along ancestor paths,
// so survivors are upward-closed and the underlying forest order is kept.
inline ForestView filter_by_size(const NucleusForest& f, Count min_vertices = 1) {
  if (min_vertices < 1) throw UnsupportedParameterError("min_vertices must be >= 1");
  ForestView v;
  v.forest = &f;
  v.min_size = min_vertices;
  v.pos.assign(f.node_count(), kInvalidNode);
  for (const auto& n : f.nodes())
    if (n.size() >= min_vertices) {
      v.pos[n.id] = static_cast<std::uint32_t>(v.nodes.size());
      v.nodes.push_back(n.id);
    }
  v.parent.assign(v.nodes.size(), kInvalidNode);
  v.children.resize(v.nodes.size());
  for (std::size_t i = 0; i < v.nodes.size(); ++i) {
    std::uint32_t p = f.node(v.nodes[i]).parent;
    while (p != kInvalidNode && !v.contains(p)) p = f.node(p).parent;
    v.parent[i] = p;
    if (p == kInvalidNode)
      v.roots.push_back(v.nodes[i]);
    else
      v.children[v.pos[p]].push_back(v.nodes[i]);
  }
  return v;
}

inline ForestView full_view(const NucleusForest& f) { return filter_by_size(f, 1); }

// Presentation view with maximal out-degree-1 chains collapsed to single
// edges. Kept nodes are roots, leaves and branching nodes; chain_edges counts
// the original forest edges a contracted edge stands for.
struct ContractedForest {
  struct Edge {
    std::uint32_t parent = 0;
    std::uint32_t child = 0;
    Count chain_edges = 1;
  };
  std::vector<std::uint32_t> nodes;  // kept ids, ascending
  std::vector<Edge> edges;           // sorted by (parent, child)
  std::vector<std::uint32_t> roots;
};

inline ContractedForest contract_chains(const ForestView& v) {
  ContractedForest out;
  out.roots = v.roots;
  std::vector<bool> kept(v.forest ? v.forest->node_count() : 0, false);
  for (std::size_t i = 0; i < v.nodes.size(); ++i) {
    bool is_root = v.parent[i] == kInvalidNode;
    if (is_root || v.children[i].size() != 1) {
      kept[v.nodes[i]] = true;
      out.nodes.push_back(v.nodes[i]);
    }
  }
  for (std::uint32_t id : out.nodes) {
    std::uint32_t p = v.parent[v.pos[id]];
    if (p == kInvalidNode) continue;
    Count hops = 1;
    while (!kept[p]) {
      p = v.parent[v.pos[p]];
      ++hops;
    }
    out.edges.push_back({p, id, hops});
  }
  std::sort(out.edges.begin(), out.edges.end(), [](const auto& a, const auto& b) {
    return a.parent != b.parent ? a.parent < b.parent : a.child < b.child;
  });
  return out;
}

inline ContractedForest contract_chains(const NucleusForest& f) {
  return contract_chains(full_view(f));
}

}  // namespace nucleus
