#pragma once

// Cross-checks of the peeling/forest pipeline against the brute-force oracle,
// shared by the CLI `validate` subcommand and the test suites.

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "nucleus/cliques.hpp"
#include "nucleus/common.hpp"
#include "nucleus/decompose.hpp"
#include "nucleus/forest.hpp"
#include "nucleus/graph.hpp"
#include "nucleus/oracle.hpp"

namespace nucleus {

inline std::vector<OracleTuple> clique_tuples(const CliqueIndex& idx) {
  std::vector<OracleTuple> out(idx.size(), OracleTuple{0, 0, 0, 0});
  for (CliqueId c = 0; c < idx.size(); ++c) idx.vertices_of(c, out[c].data());
  return out;
}

/// The distinct k-nuclei of a forest: maximal nodes with node.k >= k, as
/// sorted r-clique tuple sets, sorted for comparison.
inline std::vector<std::vector<OracleTuple>> forest_nuclei_at_level(const NucleusForest& f,
                                                                    const CliqueIndex& idx,
                                                                    std::uint32_t k) {
  std::vector<std::vector<OracleTuple>> out;
  for (const auto& n : f.nodes()) {
    if (n.k < k) continue;
    if (n.parent != kInvalidNode && f.node(n.parent).k >= k) continue;
    std::vector<OracleTuple> tuples;
    for (CliqueId c : f.member_rcliques(n.id)) {
      OracleTuple t{0, 0, 0, 0};
      idx.vertices_of(c, t.data());
      tuples.push_back(t);
    }
    std::sort(tuples.begin(), tuples.end());
    out.push_back(std::move(tuples));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct ValidationCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// All oracle comparisons for one graph: kappa equality, forest/nuclei
// equality across every k, and kappa invariance under randomized
// tie-breaking, for every r < s <= 4.
inline ValidationReport validate_graph(const Graph& g, std::uint64_t tie_seed_base = 1,
                                       int tie_runs = 5, std::string label = {}) {
  ValidationReport rep;
  for (int r = 1; r <= 3; ++r) {
    CliqueIndex idx = enumerate_r_cliques(g, r);
    for (int s = r + 1; s <= 4; ++s) {
      std::string tag = label + "(" + std::to_string(r) + "," + std::to_string(s) + ")";
      KappaAssignment ka = set_k(g, idx, s);
      OracleDecomposition ora = oracle_kappa(g, r, s);

      {
        ValidationCheck c{tag + " kappa == oracle_kappa", false, ""};
        if (clique_tuples(idx) != ora.cliques) {
          c.detail = "clique enumerations disagree";
        } else if (ka.kappa != ora.kappa) {
          Count diff = 0;
          for (std::size_t i = 0; i < ka.kappa.size(); ++i)
            if (ka.kappa[i] != ora.kappa[i]) ++diff;
          c.detail = std::to_string(diff) + " mismatching kappa values";
        } else {
          c.pass = true;
        }
        rep.checks.push_back(std::move(c));
      }

      {
        ValidationCheck c{tag + " nuclei == oracle_nuclei (all k)", true, ""};
        NucleusForest f = build_forest(g, idx, ka);
        std::uint32_t oracle_max = 0;
        for (std::uint32_t kk : ora.kappa) oracle_max = std::max(oracle_max, kk);
        std::uint32_t kmax = std::max(ka.max_kappa, oracle_max);
        std::ostringstream counts;
        for (std::uint32_t k = 1; k <= kmax && c.pass; ++k) {
          auto expect = oracle_nuclei(g, r, s, k);
          auto got = forest_nuclei_at_level(f, idx, k);
          if (expect != got) {
            c.pass = false;
            c.detail = "level k=" + std::to_string(k) + ": oracle has " +
                       std::to_string(expect.size()) + " nuclei, forest has " +
                       std::to_string(got.size());
          } else if (!got.empty()) {
            counts << (counts.tellp() > 0 ? ", " : "") << got.size() << " at k=" << k;
          }
        }
        if (c.pass) c.detail = counts.str().empty() ? "no nuclei" : counts.str();
        rep.checks.push_back(std::move(c));
      }

      {
        ValidationCheck c{tag + " kappa invariant under tie-break seeds", true, ""};
        for (int t = 0; t < tie_runs && c.pass; ++t) {
          SetKOptions opt;
          opt.tie_break_seed = tie_seed_base + static_cast<std::uint64_t>(t) * 7919;
          KappaAssignment alt = set_k(g, idx, s, opt);
          if (alt.kappa != ka.kappa) {
            c.pass = false;
            c.detail = "seed " + std::to_string(*opt.tie_break_seed) + " changed kappa";
          }
        }
        rep.checks.push_back(std::move(c));
      }
    }
  }
  return rep;
}

// Cheap structural invariants, safe to run on forests of any size: parent and
// children links mutually consistent, k strictly increasing downward, and the
// kappa-level home assignment forming a partition of the kappa >= 1 cliques.
inline ValidationCheck check_forest_structure(const NucleusForest& f, const KappaAssignment& ka) {
  ValidationCheck c{"forest structure", true, ""};
  Count own_total = 0;
  for (const auto& n : f.nodes()) {
    own_total += n.own_rcliques.size();
    if (n.parent != kInvalidNode) {
      const auto& p = f.node(n.parent);
      if (p.k >= n.k) {
        c.pass = false;
        c.detail = "parent k not strictly smaller";
        return c;
      }
      if (std::find(p.children.begin(), p.children.end(), n.id) == p.children.end()) {
        c.pass = false;
        c.detail = "parent does not list node as child";
        return c;
      }
    }
    for (std::uint32_t ch : n.children)
      if (f.node(ch).parent != n.id) {
        c.pass = false;
        c.detail = "child does not point back to parent";
        return c;
      }
    for (CliqueId q : n.own_rcliques)
      if (ka.kappa[q] != n.k || f.clique_home(q) != n.id) {
        c.pass = false;
        c.detail = "home assignment inconsistent with kappa";
        return c;
      }
  }
  Count expect = 0;
  for (std::uint32_t k : ka.kappa)
    if (k >= 1) ++expect;
  if (own_total != expect) {
    c.pass = false;
    c.detail = "home sets do not partition the kappa >= 1 cliques";
  }
  return c;
}

// Pairwise laminarity of member sets: non-ancestor nodes share no r-clique,
// ancestor pairs nest. Exhaustive when total membership is small; otherwise
// samples pairs, skipping nodes whose member sets exceed the cap (their
// disjointness already follows from the home partition plus tree shape,
// which check_forest_structure covers).
inline ValidationCheck check_laminarity(const NucleusForest& f, Count max_pairs = 2000,
                                        Count member_cap = 100000) {
  ValidationCheck c{"laminar member sets", true, ""};
  Count nn = f.node_count();
  if (nn < 2) return c;

  // children precede parents in creation order, so one ascending pass
  // computes subtree member counts
  std::vector<Count> subtree(nn, 0);
  for (std::uint32_t i = 0; i < nn; ++i) {
    subtree[i] += f.node(i).own_rcliques.size();
    for (std::uint32_t ch : f.node(i).children) subtree[i] += subtree[ch];
  }
  Count total = 0;
  for (std::uint32_t r : f.roots()) total += subtree[r];

  auto is_ancestor = [&](std::uint32_t a, std::uint32_t b) {
    for (std::uint32_t x = b; x != kInvalidNode; x = f.node(x).parent)
      if (x == a) return true;
    return false;
  };
  auto test_pair = [&](std::uint32_t a, std::uint32_t b) {
    auto ma = f.member_rcliques(a);
    auto mb = f.member_rcliques(b);
    std::vector<CliqueId> inter;
    std::set_intersection(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(inter));
    if (is_ancestor(a, b) || is_ancestor(b, a)) {
      if (inter.size() != std::min(ma.size(), mb.size())) {
        c.pass = false;
        c.detail = "ancestor pair not nested";
      }
    } else if (!inter.empty()) {
      c.pass = false;
      c.detail = "non-ancestor nodes share " + std::to_string(inter.size()) + " r-cliques";
    }
  };

  if (nn * (nn - 1) / 2 <= max_pairs * 4 && total <= member_cap) {
    for (std::uint32_t a = 0; a < nn && c.pass; ++a)
      for (std::uint32_t b = a + 1; b < nn && c.pass; ++b) test_pair(a, b);
    return c;
  }
  std::uint64_t rng = 0x9E3779B97F4A7C15ull;
  auto next = [&rng]() {
    rng ^= rng << 13;
    rng ^= rng >> 7;
    rng ^= rng << 17;
    return rng;
  };
  Count done = 0;
  for (Count t = 0; t < max_pairs * 20 && done < max_pairs && c.pass; ++t) {
    auto a = static_cast<std::uint32_t>(next() % nn);
    auto b = static_cast<std::uint32_t>(next() % nn);
    if (a == b || subtree[a] > member_cap || subtree[b] > member_cap) continue;
    test_pair(std::min(a, b), std::max(a, b));
    ++done;
  }
  if (c.pass) c.detail = "sampled " + std::to_string(done) + " pairs";
  return c;
}

}  // namespace nucleus
