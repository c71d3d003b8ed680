#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mwbs/configuration.hpp"
#include "mwbs/decomposition.hpp"
#include "mwbs/instance.hpp"

namespace mwbs {

// Entries are indexed by a base-6 number whose k-th digit is the
// configuration of mid[k]. Each entry holds the least deleted weight inside
// the arc given that assignment, or is marked infeasible.
template <class Cost>
struct DpTable {
  std::vector<VertexId> mid;
  std::vector<Cost> cost;
  std::vector<std::uint8_t> feasible;
  std::vector<std::uint32_t> back_first, back_second;  // join tables: child entries used
  std::vector<std::uint8_t> keep;                      // leaf tables: edge kept

  std::size_t size() const { return cost.size(); }
};

std::size_t table_size(std::size_t width);
std::size_t encode_assignment(std::span<const Configuration> assignment);
std::vector<Configuration> decode_assignment(std::size_t index, std::size_t width);

enum class JoinMode {
  kSharedOnly,  // enumerate pairs only at vertices both children share
  kExhaustive,  // enumerate every pair of child entries (debug cross-check)
};

template <class Cost>
DpTable<Cost> leaf_table(const PlaneDigraph& g, EdgeId e, const Cost& weight, const ArcBoundary& boundary) {
  DpTable<Cost> t;
  for (const auto& bv : boundary.mid) t.mid.push_back(bv.vertex);
  const std::size_t n = table_size(t.mid.size());
  t.cost.assign(n, Cost(0));
  t.feasible.assign(n, 1);
  t.keep.assign(n, 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    bool ok = true;
    std::size_t rest = idx;
    for (VertexId v : t.mid) {
      auto x = static_cast<Configuration>(rest % 6);
      rest /= 6;
      Direction dir = v == g.edge(e).tail ? Direction::kOut : Direction::kIn;
      ok = ok && is_substring(Pattern{dir, 1}, x);
    }
    t.keep[idx] = ok;
    if (!ok) t.cost[idx] = weight;
  }
  return t;
}

namespace detail {

struct JoinOption {
  std::uint32_t d1, d2, dp;
};

struct JoinPlan {
  std::vector<std::vector<JoinOption>> slots;
};

JoinPlan plan_join(const ArcBoundary& parent, const ArcBoundary& child1, const ArcBoundary& child2);

template <class Cost>
void relax(DpTable<Cost>& out, const DpTable<Cost>& t1, const DpTable<Cost>& t2, std::size_t i1, std::size_t i2,
           std::size_t ip) {
  if (!t1.feasible[i1] || !t2.feasible[i2]) return;
  Cost c = t1.cost[i1] + t2.cost[i2];
  if (!out.feasible[ip] || c < out.cost[ip]) {
    out.feasible[ip] = 1;
    out.cost[ip] = std::move(c);
    out.back_first[ip] = static_cast<std::uint32_t>(i1);
    out.back_second[ip] = static_cast<std::uint32_t>(i2);
  }
}

void exhaustive_parents(const ArcBoundary& parent, const ArcBoundary& child1, const ArcBoundary& child2,
                        std::size_t i1, std::size_t i2, std::vector<std::size_t>& out);

}  // namespace detail

// Which child comes first at a vertex both children share is read off the
// parent's dart run, so callers may pass the children in either order.
template <class Cost>
DpTable<Cost> join_tables(const ArcBoundary& parent, const ArcBoundary& child1, const ArcBoundary& child2,
                          const DpTable<Cost>& t1, const DpTable<Cost>& t2, JoinMode mode = JoinMode::kSharedOnly) {
  DpTable<Cost> out;
  for (const auto& bv : parent.mid) out.mid.push_back(bv.vertex);
  const std::size_t n = table_size(out.mid.size());
  out.cost.assign(n, Cost(0));
  out.feasible.assign(n, 0);
  out.back_first.assign(n, 0);
  out.back_second.assign(n, 0);

  if (mode == JoinMode::kExhaustive) {
    std::vector<std::size_t> parents;
    for (std::size_t i1 = 0; i1 < t1.size(); ++i1) {
      if (!t1.feasible[i1]) continue;
      for (std::size_t i2 = 0; i2 < t2.size(); ++i2) {
        if (!t2.feasible[i2]) continue;
        detail::exhaustive_parents(parent, child1, child2, i1, i2, parents);
        for (std::size_t ip : parents) detail::relax(out, t1, t2, i1, i2, ip);
      }
    }
    return out;
  }

  detail::JoinPlan plan = detail::plan_join(parent, child1, child2);
  const std::size_t k = plan.slots.size();
  for (const auto& s : plan.slots)
    if (s.empty()) return out;
  std::vector<std::size_t> pos(k, 0);
  std::size_t i1 = 0, i2 = 0, ip = 0;
  for (const auto& s : plan.slots) {
    i1 += s[0].d1;
    i2 += s[0].d2;
    ip += s[0].dp;
  }
  while (true) {
    detail::relax(out, t1, t2, i1, i2, ip);
    std::size_t j = 0;
    for (; j < k; ++j) {
      const auto& s = plan.slots[j];
      i1 -= s[pos[j]].d1;
      i2 -= s[pos[j]].d2;
      ip -= s[pos[j]].dp;
      if (++pos[j] == s.size()) pos[j] = 0;
      i1 += s[pos[j]].d1;
      i2 += s[pos[j]].d2;
      ip += s[pos[j]].dp;
      if (pos[j] != 0) break;
    }
    if (j == k) break;
  }
  return out;
}

template <class Cost>
struct DpRun {
  RootedDecomposition rooted;
  std::vector<DpTable<Cost>> tables;  // by node; the root leaf has none
};

template <class Cost>
DpRun<Cost> compute_tables(const PlaneDigraph& g, std::span<const Cost> costs, const SphereCutDecomposition& d,
                           NodeId root_leaf, JoinMode mode, std::size_t max_width) {
  DpRun<Cost> run{root_decomposition(g, d, root_leaf), {}};
  if (run.rooted.width > max_width)
    throw DecompositionError("decomposition width " + std::to_string(run.rooted.width) +
                             " exceeds the table limit " + std::to_string(max_width));
  run.tables.resize(d.node_count);
  for (NodeId x : run.rooted.postorder) {
    const auto& kids = run.rooted.children[x];
    if (kids.empty()) {
      EdgeId e = *run.rooted.leaf_edge[x];
      run.tables[x] = leaf_table<Cost>(g, e, costs[e], run.rooted.boundary[x]);
    } else {
      run.tables[x] = join_tables<Cost>(run.rooted.boundary[x], run.rooted.boundary[kids[0]],
                                        run.rooted.boundary[kids[1]], run.tables[kids[0]], run.tables[kids[1]], mode);
    }
  }
  return run;
}

template <class Cost>
struct DpOutcome {
  Cost deleted{};
  std::vector<bool> kept;
};

template <class Cost>
DpOutcome<Cost> finish_dp(const PlaneDigraph& g, std::span<const Cost> costs, const DpRun<Cost>& run) {
  const RootedDecomposition& rd = run.rooted;
  const EdgeId er = rd.root_edge;
  const NodeId top = rd.children[rd.root_leaf].at(0);
  const DpTable<Cost>& t = run.tables[top];

  std::optional<std::size_t> best_drop;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.feasible[i] && (!best_drop || t.cost[i] < t.cost[*best_drop])) best_drop = i;
  // Keeping the root edge: its head must close an (i,o,i) pattern and its
  // tail an (o,i,o) pattern around the rest of the rotation.
  std::vector<Configuration> forced;
  for (VertexId v : t.mid) forced.push_back(v == g.edge(er).head ? Configuration::kIOI : Configuration::kOIO);
  std::size_t keep_idx = encode_assignment(forced);

  DpOutcome<Cost> out;
  out.kept.assign(g.edge_count(), true);
  std::size_t idx;
  if (t.feasible[keep_idx] && (!best_drop || !(t.cost[*best_drop] + costs[er] < t.cost[keep_idx]))) {
    idx = keep_idx;
    out.deleted = t.cost[keep_idx];
  } else {
    if (!best_drop) throw std::logic_error("dp: no feasible root entry");
    idx = *best_drop;
    out.deleted = t.cost[idx] + costs[er];
    out.kept[er] = false;
  }
  std::vector<std::pair<NodeId, std::size_t>> stack{{top, idx}};
  while (!stack.empty()) {
    auto [x, i] = stack.back();
    stack.pop_back();
    const auto& kids = rd.children[x];
    const auto& tx = run.tables[x];
    if (kids.empty()) {
      if (!tx.keep[i]) out.kept[*rd.leaf_edge[x]] = false;
    } else {
      stack.push_back({kids[0], tx.back_first[i]});
      stack.push_back({kids[1], tx.back_second[i]});
    }
  }
  return out;
}

struct DpOptions {
  std::optional<NodeId> root_leaf;  // default: the leaf of edge 0
  JoinMode join_mode = JoinMode::kSharedOnly;
  std::size_t max_width = 9;
};

// g must be connected with at least two edges; d must validate.
Solution solve_dp(const Instance& inst, const SphereCutDecomposition& d, const DpOptions& options = {});

// Exact solution of any instance: per component, stars go to the direct star
// solver and everything else through a built decomposition and the DP.
Solution solve_by_components(const Instance& inst, BuildStrategy strategy = BuildStrategy::kGreedySweep);

}  // namespace mwbs
