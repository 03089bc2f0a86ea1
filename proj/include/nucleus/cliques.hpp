#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "nucleus/common.hpp"
#include "nucleus/graph.hpp"

namespace nucleus {

namespace detail {

inline unsigned resolve_threads() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("NUCLEUS_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) hw = std::min<long>(v, 256);
  }
  return hw;
}

// Runs fn(chunk_begin, chunk_end) over [0,n) on up to t threads; chunks are
// fixed so results are placement-deterministic.
template <class F>
void parallel_ranges(Count n, unsigned t, F&& fn) {
  t = std::min<Count>(t, n == 0 ? 1 : n);
  if (t <= 1 || n == 0) {
    fn(Count(0), n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(t);
  Count chunk = (n + t - 1) / t;
  for (unsigned i = 0; i < t; ++i) {
    Count b = std::min<Count>(n, i * chunk), e = std::min<Count>(n, (i + 1) * chunk);
    if (b >= e) break;
    pool.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

// Index of all r-cliques of a graph, r in 1..4, in lexicographic order of
// their sorted vertex tuples. Ids are dense and stable for the run.
//
// r == 2 ids are positions in the upper-adjacency CSR (edge (u,v), u < v).
// r == 3 additionally carries, per edge, the sorted list of (third vertex,
// triangle id) pairs; this is the materialized edge->triangle incidence used
// both for (2,3) peeling and for discovering 4-cliques around a triangle.
class CliqueIndex {
 public:
  struct TriRef {
    VertexId third;
    CliqueId tri;
  };

  int r() const { return r_; }
  Count size() const { return count_; }
  const Graph& graph() const { return *g_; }

  void vertices_of(CliqueId c, VertexId* out) const {
    switch (r_) {
      case 1:
        out[0] = c;
        return;
      case 2: {
        auto it = std::upper_bound(up_off_.begin(), up_off_.end(), static_cast<std::uint64_t>(c));
        VertexId u = static_cast<VertexId>(it - up_off_.begin() - 1);
        out[0] = u;
        out[1] = g_->neighbors(u)[up_first_[u] + (c - up_off_[u])];
        return;
      }
      default:
        for (int i = 0; i < r_; ++i) out[i] = tuples_[static_cast<std::size_t>(c) * r_ + i];
        return;
    }
  }

  std::array<VertexId, 4> tuple_of(CliqueId c) const {
    std::array<VertexId, 4> t{0, 0, 0, 0};
    vertices_of(c, t.data());
    return t;
  }

  std::optional<CliqueId> index_of(std::span<const VertexId> tuple) const {
    assert(static_cast<int>(tuple.size()) == r_);
    switch (r_) {
      case 1:
        return tuple[0] < g_->vertex_count() ? std::optional<CliqueId>(tuple[0]) : std::nullopt;
      case 2:
        return edge_id(tuple[0], tuple[1]);
      case 3: {
        auto e = edge_id(tuple[0], tuple[1]);
        if (!e) return std::nullopt;
        auto refs = triangles_of_edge(*e);
        auto it = std::lower_bound(refs.begin(), refs.end(), tuple[2],
                                   [](const TriRef& a, VertexId w) { return a.third < w; });
        if (it == refs.end() || it->third != tuple[2]) return std::nullopt;
        return it->tri;
      }
      default: {
        std::array<VertexId, 4> key{tuple[0], tuple[1], tuple[2], tuple[3]};
        auto cmp = [this](CliqueId c, const std::array<VertexId, 4>& k) {
          const VertexId* t = &tuples_[static_cast<std::size_t>(c) * 4];
          return std::lexicographical_compare(t, t + 4, k.begin(), k.end());
        };
        // tuples_ are lex sorted; binary search over ids
        CliqueId lo = 0, hi = static_cast<CliqueId>(count_);
        while (lo < hi) {
          CliqueId mid = lo + (hi - lo) / 2;
          if (cmp(mid, key))
            lo = mid + 1;
          else
            hi = mid;
        }
        if (lo == count_) return std::nullopt;
        const VertexId* t = &tuples_[static_cast<std::size_t>(lo) * 4];
        if (!std::equal(t, t + 4, key.begin())) return std::nullopt;
        return lo;
      }
    }
  }

  /// ct_r(v): the number of r-cliques containing each vertex.
  std::span<const Count> per_vertex_count() const { return ct_; }

  // r >= 2: dense id of edge (u,v) with u < v, lexicographic order.
  std::optional<EdgeId> edge_id(VertexId u, VertexId v) const {
    assert(u < v);
    auto nb = g_->neighbors(u);
    auto b = nb.begin() + up_first_[u];
    auto it = std::lower_bound(b, nb.end(), v);
    if (it == nb.end() || *it != v) return std::nullopt;
    return static_cast<EdgeId>(up_off_[u] + (it - b));
  }

  std::pair<VertexId, VertexId> edge_vertices(EdgeId e) const {
    auto it = std::upper_bound(up_off_.begin(), up_off_.end(), static_cast<std::uint64_t>(e));
    VertexId u = static_cast<VertexId>(it - up_off_.begin() - 1);
    return {u, g_->neighbors(u)[up_first_[u] + (e - up_off_[u])]};
  }

  // r == 3: triangles containing an edge, ascending by third vertex.
  std::span<const TriRef> triangles_of_edge(EdgeId e) const {
    return {tri_adj_.data() + tri_off_[e], tri_adj_.data() + tri_off_[e + 1]};
  }

  bool has_edge_ids() const { return !up_off_.empty(); }
  bool has_triangle_adjacency() const { return r_ == 3; }

 private:
  friend CliqueIndex enumerate_r_cliques(const Graph&, int);
  const Graph* g_ = nullptr;
  int r_ = 0;
  Count count_ = 0;
  std::vector<std::uint64_t> up_off_;    // r>=2: per-vertex upper-edge id base (n+1)
  std::vector<std::uint32_t> up_first_;  // r>=2: row offset of first neighbor > u
  std::vector<VertexId> tuples_;         // r>=3: lex-sorted tuples, r_ entries each
  std::vector<std::uint64_t> tri_off_;   // r==3: per-edge incidence offsets (m+1)
  std::vector<TriRef> tri_adj_;          // r==3: 3T refs, sorted by third per edge
  std::vector<Count> ct_;                // ct_r(v)
};

namespace detail {

struct Orientation {
  std::vector<std::uint64_t> off;  // n+1
  std::vector<VertexId> adj;       // neighbors with higher degeneracy rank, id-sorted
};

inline Orientation orient_by_degeneracy(const Graph& g) {
  DegeneracyOrder d = degeneracy_order(g);
  Count n = g.vertex_count();
  Orientation o;
  o.off.assign(n + 1, 0);
  for (VertexId u = 0; u < n; ++u) {
    Count c = 0;
    for (VertexId v : g.neighbors(u))
      if (d.rank[v] > d.rank[u]) ++c;
    o.off[u + 1] = c;
  }
  for (Count i = 0; i < n; ++i) o.off[i + 1] += o.off[i];
  o.adj.resize(o.off[n]);
  for (VertexId u = 0; u < n; ++u) {
    std::uint64_t at = o.off[u];
    for (VertexId v : g.neighbors(u))
      if (d.rank[v] > d.rank[u]) o.adj[at++] = v;
  }
  return o;
}

inline std::span<const VertexId> out_of(const Orientation& o, VertexId u) {
  return {o.adj.data() + o.off[u], o.adj.data() + o.off[u + 1]};
}

// intersection of two ascending id lists
inline void intersect_into(std::span<const VertexId> a, std::span<const VertexId> b,
                           std::vector<VertexId>& out) {
  out.clear();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (a[i] > b[j])
      ++j;
    else {
      out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
}

template <int R>
inline std::array<VertexId, R> sorted_tuple(std::array<VertexId, R> t) {
  std::sort(t.begin(), t.end());
  return t;
}

// Visits every triangle / 4-clique once as rank-ordered tuples.
template <class F>
void for_each_oriented_triangle(const Orientation& o, Count n, F&& fn) {
  std::vector<VertexId> i2;
  for (VertexId u = 0; u < n; ++u) {
    auto ou = out_of(o, u);
    for (VertexId v : ou) {
      intersect_into(ou, out_of(o, v), i2);
      for (VertexId w : i2) fn(u, v, w);
    }
  }
}

template <class F>
void for_each_oriented_k4(const Orientation& o, Count n, F&& fn) {
  // ranks ascend along u -> v -> w -> x, which makes each K4 come out once;
  // the candidate lists themselves stay id-sorted for the merges
  std::vector<VertexId> i2, i3;
  for (VertexId u = 0; u < n; ++u) {
    auto ou = out_of(o, u);
    for (VertexId v : ou) {
      intersect_into(ou, out_of(o, v), i2);
      for (VertexId w : i2) {
        intersect_into(i2, out_of(o, w), i3);
        for (VertexId x : i3) fn(u, v, w, x);
      }
    }
  }
}

}  // namespace detail

// Counts r-cliques without materializing them (r in 1..4).
inline Count count_r_cliques(const Graph& g, int r) {
  if (r < 1 || r > 4) throw UnsupportedParameterError("r must be in 1..4");
  if (r == 1) return g.vertex_count();
  if (r == 2) return g.edge_count();
  auto o = detail::orient_by_degeneracy(g);
  Count c = 0;
  if (r == 3)
    detail::for_each_oriented_triangle(o, g.vertex_count(), [&](VertexId, VertexId, VertexId) { ++c; });
  else
    detail::for_each_oriented_k4(o, g.vertex_count(),
                                 [&](VertexId, VertexId, VertexId, VertexId) { ++c; });
  return c;
}

// Enumerates all r-cliques, each exactly once, indexed in lexicographic order
// of the sorted vertex tuple. r = 1 yields vertices, r = 2 edges.
inline CliqueIndex enumerate_r_cliques(const Graph& g, int r) {
  if (r < 1 || r > 4) throw UnsupportedParameterError("r must be in 1..4");
  Count n = g.vertex_count();
  CliqueIndex idx;
  idx.g_ = &g;
  idx.r_ = r;
  idx.ct_.assign(n, 0);

  if (r == 1) {
    idx.count_ = n;
    std::fill(idx.ct_.begin(), idx.ct_.end(), 1);
    return idx;
  }

  // upper-adjacency CSR shared by all r >= 2
  idx.up_off_.assign(n + 1, 0);
  idx.up_first_.assign(n, 0);
  for (VertexId u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    auto it = std::upper_bound(nb.begin(), nb.end(), u);
    idx.up_first_[u] = static_cast<std::uint32_t>(it - nb.begin());
    idx.up_off_[u + 1] = idx.up_off_[u] + (nb.size() - idx.up_first_[u]);
  }

  if (r == 2) {
    idx.count_ = g.edge_count();
    for (VertexId v = 0; v < n; ++v) idx.ct_[v] = g.degree(v);
    return idx;
  }

  auto o = detail::orient_by_degeneracy(g);
  if (r == 3) {
    // two passes (count, fill) so the fill can run chunk-parallel
    unsigned threads = detail::resolve_threads();
    std::vector<std::uint64_t> per_u(n + 1, 0);
    detail::parallel_ranges(n, threads, [&](Count b, Count e) {
      std::vector<VertexId> i2;
      for (VertexId u = static_cast<VertexId>(b); u < e; ++u) {
        auto ou = detail::out_of(o, u);
        Count c = 0;
        for (VertexId v : ou) {
          detail::intersect_into(ou, detail::out_of(o, v), i2);
          c += i2.size();
        }
        per_u[u + 1] = c;
      }
    });
    for (Count i = 0; i < n; ++i) per_u[i + 1] += per_u[i];
    Count t_count = per_u[n];
    std::vector<std::array<VertexId, 3>> tris(t_count);
    detail::parallel_ranges(n, threads, [&](Count b, Count e) {
      std::vector<VertexId> i2;
      for (VertexId u = static_cast<VertexId>(b); u < e; ++u) {
        std::uint64_t at = per_u[u];
        auto ou = detail::out_of(o, u);
        for (VertexId v : ou) {
          detail::intersect_into(ou, detail::out_of(o, v), i2);
          for (VertexId w : i2) tris[at++] = detail::sorted_tuple<3>({u, v, w});
        }
      }
    });
    std::sort(tris.begin(), tris.end());
    idx.count_ = t_count;
    idx.tuples_.resize(t_count * 3);
    for (Count i = 0; i < t_count; ++i)
      for (int j = 0; j < 3; ++j) idx.tuples_[i * 3 + j] = tris[i][j];
    tris.clear();
    tris.shrink_to_fit();

    for (Count i = 0; i < t_count; ++i)
      for (int j = 0; j < 3; ++j) ++idx.ct_[idx.tuples_[i * 3 + j]];

    // per-edge triangle incidence; lex triangle order makes each edge's list
    // ascend by third vertex
    Count m = g.edge_count();
    idx.tri_off_.assign(m + 1, 0);
    std::vector<std::array<EdgeId, 3>> tri_edges(t_count);
    for (Count i = 0; i < t_count; ++i) {
      VertexId a = idx.tuples_[i * 3], b = idx.tuples_[i * 3 + 1], c = idx.tuples_[i * 3 + 2];
      EdgeId eab = *idx.edge_id(a, b), eac = *idx.edge_id(a, c), ebc = *idx.edge_id(b, c);
      tri_edges[i] = {eab, eac, ebc};
      ++idx.tri_off_[eab + 1];
      ++idx.tri_off_[eac + 1];
      ++idx.tri_off_[ebc + 1];
    }
    for (Count i = 0; i < m; ++i) idx.tri_off_[i + 1] += idx.tri_off_[i];
    idx.tri_adj_.resize(3 * t_count);
    std::vector<std::uint64_t> fill(idx.tri_off_.begin(), idx.tri_off_.end() - 1);
    for (Count i = 0; i < t_count; ++i) {
      VertexId a = idx.tuples_[i * 3], b = idx.tuples_[i * 3 + 1], c = idx.tuples_[i * 3 + 2];
      auto [eab, eac, ebc] = tri_edges[i];
      idx.tri_adj_[fill[eab]++] = {c, static_cast<CliqueId>(i)};
      idx.tri_adj_[fill[eac]++] = {b, static_cast<CliqueId>(i)};
      idx.tri_adj_[fill[ebc]++] = {a, static_cast<CliqueId>(i)};
    }
    return idx;
  }

  // r == 4
  std::vector<std::array<VertexId, 4>> quads;
  detail::for_each_oriented_k4(o, n, [&](VertexId u, VertexId v, VertexId w, VertexId x) {
    quads.push_back(detail::sorted_tuple<4>({u, v, w, x}));
  });
  std::sort(quads.begin(), quads.end());
  idx.count_ = quads.size();
  idx.tuples_.resize(idx.count_ * 4);
  for (Count i = 0; i < idx.count_; ++i)
    for (int j = 0; j < 4; ++j) {
      idx.tuples_[i * 4 + j] = quads[i][j];
      ++idx.ct_[quads[i][j]];
    }
  return idx;
}

// Enumerates, for one r-clique, every containing s-clique together with the
// ids of all C(s,r) member r-cliques. This is the one implementation point
// for S-degrees, peeling and forest traversal.
//
// s == 3 runs off materialized triangle structures (built here when the peel
// index does not already carry them); s == 4 discovers 4-cliques on demand,
// so nothing of size ct_4 is ever stored.
class SCliqueProvider {
 public:
  SCliqueProvider(const Graph& g, const CliqueIndex& idx, int s,
                  std::uint64_t memory_budget = kDefaultMemoryBudget)
      : g_(&g), idx_(&idx), s_(s) {
    if (s <= idx.r() || s > 4) throw UnsupportedParameterError("need r < s <= 4");
    int r = idx.r();
    if (s == 3) {
      if (r == 2 || r == 1) {
        Count t = count_r_cliques(g, 3);
        std::uint64_t need = t * (3 * sizeof(VertexId) + 3 * sizeof(CliqueIndex::TriRef)) +
                             (r == 1 ? t * 3 * sizeof(CliqueId) : 0);
        if (need > memory_budget)
          throw CapacityError("materialized triangle links exceed memory budget", need,
                              memory_budget);
        tri_.emplace(enumerate_r_cliques(g, 3));
      }
      if (r == 1) {
        // vertex -> triangle incidence
        const CliqueIndex& t = *tri_;
        Count n = g.vertex_count();
        vtx_tri_off_.assign(n + 1, 0);
        for (VertexId v = 0; v < n; ++v) vtx_tri_off_[v + 1] = t.per_vertex_count()[v];
        for (Count i = 0; i < n; ++i) vtx_tri_off_[i + 1] += vtx_tri_off_[i];
        vtx_tri_.resize(vtx_tri_off_[n]);
        std::vector<std::uint64_t> fill(vtx_tri_off_.begin(), vtx_tri_off_.end() - 1);
        for (CliqueId i = 0; i < t.size(); ++i) {
          auto tp = t.tuple_of(i);
          for (int j = 0; j < 3; ++j) vtx_tri_[fill[tp[j]]++] = i;
        }
      }
    }
  }

  int r() const { return idx_->r(); }
  int s() const { return s_; }
  int members_per_s() const { return binom_small(s_, idx_->r()); }

  // fn(s_vertices: span<const VertexId> ascending, members: span<const CliqueId>)
  template <class F>
  void for_each_containing(CliqueId c, F&& fn) const {
    dispatch<false>(c, fn);
  }

  Count count_containing(CliqueId c) const {
    switch (idx_->r() * 10 + s_) {
      case 12:
        return g_->degree(c);
      case 13:
        return vtx_tri_off_[c + 1] - vtx_tri_off_[c];
      case 23:
        return tri_index().triangles_of_edge(c).size();
      default: {
        Count n = 0;
        auto counter = [&n](std::span<const VertexId>, std::span<const CliqueId>) { ++n; };
        dispatch<true>(c, counter);
        return n;
      }
    }
  }

 private:
  const CliqueIndex& tri_index() const { return tri_ ? *tri_ : *idx_; }

  // count_only skips member-id lookups where they cost anything
  template <bool count_only, class F>
  void dispatch(CliqueId c, F&& fn) const {
    switch (idx_->r() * 10 + s_) {
      case 12: {
        VertexId v = c;
        VertexId sv[2];
        CliqueId mem[2];
        for (VertexId u : g_->neighbors(v)) {
          sv[0] = std::min(u, v);
          sv[1] = std::max(u, v);
          mem[0] = sv[0];
          mem[1] = sv[1];
          fn(std::span<const VertexId>(sv, 2), std::span<const CliqueId>(mem, 2));
        }
        return;
      }
      case 13: {
        const CliqueIndex& t = tri_index();
        for (std::uint64_t i = vtx_tri_off_[c]; i < vtx_tri_off_[c + 1]; ++i) {
          auto tp = t.tuple_of(vtx_tri_[i]);
          CliqueId mem[3] = {tp[0], tp[1], tp[2]};
          fn(std::span<const VertexId>(tp.data(), 3), std::span<const CliqueId>(mem, 3));
        }
        return;
      }
      case 23: {
        const CliqueIndex& t = tri_index();
        auto [u, v] = idx_->edge_vertices(c);
        VertexId sv[3];
        CliqueId mem[3];
        for (const auto& ref : t.triangles_of_edge(c)) {
          VertexId w = ref.third;
          sv[0] = u;
          sv[1] = v;
          sv[2] = w;
          std::sort(sv, sv + 3);
          mem[0] = c;
          if constexpr (!count_only) {
            mem[1] = *idx_->edge_id(std::min(u, w), std::max(u, w));
            mem[2] = *idx_->edge_id(std::min(v, w), std::max(v, w));
          }
          fn(std::span<const VertexId>(sv, 3), std::span<const CliqueId>(mem, 3));
        }
        return;
      }
      case 34: {
        // K4s around triangle c: common thirds of its three edge incidence
        // lists; the matching entries are the other member triangles.
        const CliqueIndex& t = *idx_;
        auto tp = t.tuple_of(c);
        VertexId a = tp[0], b = tp[1], cc = tp[2];
        auto A = t.triangles_of_edge(*t.edge_id(a, b));
        auto B = t.triangles_of_edge(*t.edge_id(a, cc));
        auto C = t.triangles_of_edge(*t.edge_id(b, cc));
        std::size_t i = 0, j = 0, k = 0;
        VertexId sv[4];
        CliqueId mem[4];
        while (i < A.size() && j < B.size() && k < C.size()) {
          VertexId w = std::max({A[i].third, B[j].third, C[k].third});
          while (i < A.size() && A[i].third < w) ++i;
          while (j < B.size() && B[j].third < w) ++j;
          while (k < C.size() && C[k].third < w) ++k;
          if (i < A.size() && j < B.size() && k < C.size() && A[i].third == w &&
              B[j].third == w && C[k].third == w) {
            sv[0] = a;
            sv[1] = b;
            sv[2] = cc;
            sv[3] = w;
            std::sort(sv, sv + 4);
            mem[0] = c;
            mem[1] = A[i].tri;
            mem[2] = B[j].tri;
            mem[3] = C[k].tri;
            fn(std::span<const VertexId>(sv, 4), std::span<const CliqueId>(mem, 4));
            ++i;
            ++j;
            ++k;
          }
        }
        return;
      }
      case 14: {
        // triangles inside N(v)
        VertexId v = c;
        auto nb = g_->neighbors(v);
        std::vector<VertexId> common;
        VertexId sv[4];
        CliqueId mem[4];
        for (std::size_t i = 0; i < nb.size(); ++i) {
          VertexId x = nb[i];
          detail::intersect_into({nb.data() + i + 1, nb.size() - i - 1}, g_->neighbors(x), common);
          std::vector<VertexId> snapshot = common;
          for (std::size_t j = 0; j < snapshot.size(); ++j) {
            VertexId y = snapshot[j];
            detail::intersect_into({snapshot.data() + j + 1, snapshot.size() - j - 1},
                                   g_->neighbors(y), common);
            for (VertexId z : common) {
              sv[0] = v;
              sv[1] = x;
              sv[2] = y;
              sv[3] = z;
              std::sort(sv, sv + 4);
              mem[0] = sv[0];
              mem[1] = sv[1];
              mem[2] = sv[2];
              mem[3] = sv[3];
              fn(std::span<const VertexId>(sv, 4), std::span<const CliqueId>(mem, 4));
            }
          }
        }
        return;
      }
      case 24: {
        // pairs of adjacent common neighbors of the edge
        auto [u, v] = idx_->edge_vertices(c);
        std::vector<VertexId> common, pairc;
        detail::intersect_into(g_->neighbors(u), g_->neighbors(v), common);
        VertexId sv[4];
        CliqueId mem[6];
        for (std::size_t i = 0; i < common.size(); ++i) {
          VertexId x = common[i];
          detail::intersect_into({common.data() + i + 1, common.size() - i - 1},
                                 g_->neighbors(x), pairc);
          for (VertexId y : pairc) {
            sv[0] = u;
            sv[1] = v;
            sv[2] = x;
            sv[3] = y;
            std::sort(sv, sv + 4);
            if constexpr (!count_only) {
              int at = 0;
              for (int p = 0; p < 4; ++p)
                for (int q = p + 1; q < 4; ++q) mem[at++] = *idx_->edge_id(sv[p], sv[q]);
            }
            fn(std::span<const VertexId>(sv, 4), std::span<const CliqueId>(mem, 6));
          }
        }
        return;
      }
      default:
        throw UnsupportedParameterError("unsupported (r,s) combination");
    }
  }

  const Graph* g_;
  const CliqueIndex* idx_;
  int s_;
  std::optional<CliqueIndex> tri_;       // owned triangle structures for r < 3, s == 3
  std::vector<std::uint64_t> vtx_tri_off_;  // (1,3): vertex -> triangles
  std::vector<CliqueId> vtx_tri_;
};

/// All s-cliques containing the given r-clique, ascending tuples, first s
/// entries of each array meaningful.
inline std::vector<std::array<VertexId, 4>> s_cliques_containing(const Graph& g,
                                                                 const CliqueIndex& idx,
                                                                 CliqueId c, int s) {
  SCliqueProvider p(g, idx, s);
  std::vector<std::array<VertexId, 4>> out;
  p.for_each_containing(c, [&](std::span<const VertexId> sv, std::span<const CliqueId>) {
    std::array<VertexId, 4> t{0, 0, 0, 0};
    std::copy(sv.begin(), sv.end(), t.begin());
    out.push_back(t);
  });
  return out;
}

/// S-degree of an r-clique: how many s-cliques of the whole graph contain it.
inline Count s_degree(const Graph& g, const CliqueIndex& idx, CliqueId c, int s) {
  return SCliqueProvider(g, idx, s).count_containing(c);
}

// Materialized supergraph: one node per r-clique, one link per s-clique
// joining its C(s,r) member r-cliques. Refuses to build above the memory
// budget; the on-demand SCliqueProvider covers that regime.
struct Supergraph {
  int r = 0, s = 0;
  Count node_count = 0;
  Count link_count = 0;
  int members_per_link = 0;
  std::vector<CliqueId> link_members;    // link_count * members_per_link
  std::vector<std::uint64_t> node_off;   // node incidence CSR
  std::vector<std::uint32_t> node_links;
};

inline Supergraph build_supergraph(const Graph& g, const CliqueIndex& idx, int s,
                                   std::uint64_t memory_budget = kDefaultMemoryBudget) {
  int r = idx.r();
  if (s <= r || s > 4) throw UnsupportedParameterError("need r < s <= 4");
  Count links = count_r_cliques(g, s);
  int K = binom_small(s, r);
  std::uint64_t need = links * static_cast<std::uint64_t>(K) * (sizeof(CliqueId) + sizeof(std::uint32_t)) +
                       links * s * sizeof(VertexId) + (idx.size() + 1) * sizeof(std::uint64_t);
  if (need > memory_budget)
    throw CapacityError(
        "materialized supergraph exceeds memory budget; use the on-demand strategy", need,
        memory_budget);

  Supergraph sg;
  sg.r = r;
  sg.s = s;
  sg.node_count = idx.size();
  sg.link_count = links;
  sg.members_per_link = K;
  sg.link_members.reserve(links * K);

  CliqueIndex sidx = enumerate_r_cliques(g, s);
  std::array<VertexId, 4> sv{};
  std::array<VertexId, 4> sub{};
  for (CliqueId l = 0; l < sidx.size(); ++l) {
    sidx.vertices_of(l, sv.data());
    // all r-subsets of the s-tuple, lexicographic
    std::array<int, 4> pick{};
    for (int i = 0; i < r; ++i) pick[i] = i;
    for (;;) {
      for (int i = 0; i < r; ++i) sub[i] = sv[pick[i]];
      auto id = idx.index_of({sub.data(), static_cast<std::size_t>(r)});
      assert(id.has_value());
      sg.link_members.push_back(*id);
      int i = r - 1;
      while (i >= 0 && pick[i] == s - r + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  sg.node_off.assign(sg.node_count + 1, 0);
  for (CliqueId m : sg.link_members) ++sg.node_off[m + 1];
  for (Count i = 0; i < sg.node_count; ++i) sg.node_off[i + 1] += sg.node_off[i];
  sg.node_links.resize(sg.link_members.size());
  std::vector<std::uint64_t> fill(sg.node_off.begin(), sg.node_off.end() - 1);
  for (Count l = 0; l < sg.link_count; ++l)
    for (int j = 0; j < K; ++j)
      sg.node_links[fill[sg.link_members[l * K + j]]++] = static_cast<std::uint32_t>(l);
  return sg;
}

}  // namespace nucleus
