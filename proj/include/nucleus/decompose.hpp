#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "nucleus/bucket_queue.hpp"
#include "nucleus/cliques.hpp"
#include "nucleus/common.hpp"
#include "nucleus/graph.hpp"

namespace nucleus {

struct GraphFingerprint {
  Count n = 0;
  Count m = 0;
  std::uint64_t degree_hash = 0;
  friend bool operator==(const GraphFingerprint&, const GraphFingerprint&) = default;
};

inline GraphFingerprint fingerprint_of(const Graph& g) {
  GraphFingerprint fp{g.vertex_count(), g.edge_count(), 1469598103934665603ull};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    fp.degree_hash ^= g.degree(v);
    fp.degree_hash *= 1099511628211ull;  // FNV-1a over the degree sequence
  }
  return fp;
}

// kappa values and the peeling schedule of one set-k run.
struct KappaAssignment {
  int r = 0;
  int s = 0;
  GraphFingerprint fingerprint;
  std::vector<std::uint32_t> kappa;            // per r-clique id
  std::vector<CliqueId> processing_order;      // time axis
  std::map<std::uint32_t, Count> transition_times;  // k -> t_k, attained k only
  std::uint32_t max_kappa = 0;
};

/// t_k for every attained k: first position where kappa reaches k.
inline std::map<std::uint32_t, Count> transition_times(std::span<const std::uint32_t> kappa,
                                                       std::span<const CliqueId> order) {
  std::map<std::uint32_t, Count> out;
  bool any = false;
  std::uint32_t prev = 0;
  for (Count t = 0; t < order.size(); ++t) {
    std::uint32_t k = kappa[order[t]];
    if (!any || k > prev) out.emplace(k, t);
    any = true;
    prev = k;
  }
  return out;
}

inline std::map<std::uint32_t, Count> transition_times(const KappaAssignment& ka) {
  return transition_times(ka.kappa, ka.processing_order);
}

struct SetKOptions {
  std::uint64_t memory_budget = kDefaultMemoryBudget;
  // Randomizes tie-breaking among minimum-delta cliques; kappa must not change.
  std::optional<std::uint64_t> tie_break_seed;
  // Verifies that delta equals the S_t-degree at every transition time
  // (exactness claim); quadratic, for small validation runs only.
  bool check_transition_degrees = false;
};

namespace detail {

inline std::vector<std::uint32_t> random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::uint32_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);  // bias immaterial here
    std::swap(p[i - 1], p[j]);
  }
  return p;
}

}  // namespace detail

// The set-k peeling: repeatedly process an unprocessed r-clique R of minimum
// delta, fixing kappa(R) = delta(R), and decrement delta of co-members of
// every containing s-clique that has no processed member yet. Ties on minimum
// delta go to the lowest clique id unless a tie-break seed is given.
inline KappaAssignment set_k(const Graph& g, const CliqueIndex& idx, int s,
                             const SetKOptions& opt = {}) {
  int r = idx.r();
  if (s <= r || s > 4) throw UnsupportedParameterError("need r < s <= 4");
  SCliqueProvider provider(g, idx, s, opt.memory_budget);

  Count n_cliques = idx.size();
  std::vector<std::uint32_t> delta(n_cliques);
  for (CliqueId c = 0; c < n_cliques; ++c)
    delta[c] = static_cast<std::uint32_t>(provider.count_containing(c));

  std::vector<std::uint32_t> perm;
  if (opt.tie_break_seed) perm = detail::random_permutation(n_cliques, *opt.tie_break_seed);
  MinBucketQueue q(std::move(delta), perm);

  KappaAssignment ka;
  ka.r = r;
  ka.s = s;
  ka.fingerprint = fingerprint_of(g);
  ka.kappa.assign(n_cliques, 0);
  ka.processing_order.reserve(n_cliques);

  std::uint32_t frontier = 0;
  bool first = true;
  while (!q.empty()) {
    auto popped = q.pop_min();
    CliqueId c = popped.first;
    std::uint32_t k = popped.second;
    if (!first && k < frontier)
      throw std::logic_error("set_k: kappa sequence decreased (peeling invariant broken)");
    bool transition = first || k > frontier;
    if (transition) {
      ka.transition_times.emplace(k, ka.processing_order.size());
      if (opt.check_transition_degrees) {
        // Claim: right now every unprocessed R' has delta equal to the number
        // of containing s-cliques with no processed member (R itself was just
        // popped but not yet marked in any decrement, so count it unprocessed).
        for (CliqueId other = 0; other < n_cliques; ++other) {
          if (q.popped(other) && other != c) continue;
          Count live = 0;
          provider.for_each_containing(other, [&](std::span<const VertexId>,
                                                  std::span<const CliqueId> mem) {
            for (CliqueId m : mem)
              if (m != other && m != c && q.popped(m)) return;
            ++live;
          });
          std::uint32_t have = other == c ? k : q.key(other);
          if (live != have)
            throw std::logic_error("set_k: delta != S_t-degree at transition time");
        }
      }
    }
    first = false;
    frontier = std::max(frontier, k);
    ka.kappa[c] = k;
    ka.processing_order.push_back(c);

    provider.for_each_containing(c, [&](std::span<const VertexId>, std::span<const CliqueId> mem) {
      for (CliqueId m : mem)
        if (m != c && q.popped(m)) return;  // s-clique already broken
      for (CliqueId m : mem)
        if (m != c && q.key(m) > k) q.decrement(m);
    });
  }
  ka.max_kappa = frontier;
  return ka;
}

inline KappaAssignment set_k(const Graph& g, int r, int s, const SetKOptions& opt = {}) {
  CliqueIndex idx = enumerate_r_cliques(g, r);
  return set_k(g, idx, s, opt);
}

struct CostPrediction {
  std::uint64_t value = 0;
  bool saturated = false;
};

// Work predictor of the on-demand strategy: sum over vertices of
// ct_r(v) * d(v)^(s-r). Saturates at 2^64-1 instead of overflowing.
inline CostPrediction cost_predictor(const Graph& g, const CliqueIndex& idx, int s) {
  int r = idx.r();
  if (s <= r || s > 4) throw UnsupportedParameterError("need r < s <= 4");
  unsigned __int128 total = 0;
  auto ct = idx.per_vertex_count();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    unsigned __int128 term = ct[v];
    for (int i = 0; i < s - r; ++i) term *= g.degree(v);
    total += term;
    if (total > static_cast<unsigned __int128>(~0ull)) return {~0ull, true};
  }
  return {static_cast<std::uint64_t>(total), false};
}

}  // namespace nucleus
