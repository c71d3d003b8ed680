#include "mwbs/oracle.hpp"

#include <bit>
#include <cstdint>

namespace mwbs {

namespace {

template <class Cost>
std::uint64_t best_mask(const PlaneDigraph& g, std::span<const Cost> cost) {
  const std::size_t m = g.edge_count();
  const std::size_t n = g.vertex_count();
  std::uint64_t mask = 0, best = 0;
  Cost weight(0), best_weight(0);
  std::vector<int> sw(n, 0);
  std::size_t bad = 0;
  const std::uint64_t total = std::uint64_t{1} << m;
  // Gray-code walk: one edge toggles per step, so only its endpoints change.
  for (std::uint64_t k = 1; k < total; ++k) {
    auto e = static_cast<EdgeId>(std::countr_zero(k));
    mask ^= std::uint64_t{1} << e;
    if (mask >> e & 1) weight += cost[e];
    else weight -= cost[e];
    for (VertexId v : {g.edge(e).tail, g.edge(e).head}) {
      bad -= sw[v] > 2;
      sw[v] = switch_count_if(g, v, [&](EdgeId f) { return (mask >> f & 1) != 0; });
      bad += sw[v] > 2;
    }
    if (bad == 0 && (best_weight < weight || (weight == best_weight && mask < best))) {
      best = mask;
      best_weight = weight;
    }
  }
  return best;
}

}  // namespace

Solution brute_force_mwbs(const Instance& inst, const OracleBudget& budget) {
  const std::size_t m = inst.edge_count();
  if (m > budget.max_edges || m > 62)
    throw BudgetExceeded("brute force refused: " + std::to_string(m) + " edges exceeds budget " +
                         std::to_string(budget.max_edges));
  ScaledCosts sc = scale_to_integers(inst.weights);
  std::uint64_t mask;
  if (auto narrow = sc.narrow()) mask = best_mask<std::int64_t>(inst.graph, *narrow);
  else mask = best_mask<BigInt>(inst.graph, sc.costs);
  std::vector<bool> kept(m);
  for (std::size_t e = 0; e < m; ++e) kept[e] = (mask >> e & 1) != 0;
  return make_solution(inst, kept, "oracle");
}

Solution brute_force_cut(const CutInstance& cut, const OracleBudget& budget) {
  const Instance& inst = cut.instance;
  const PlaneDigraph& g = inst.graph;
  const std::size_t c = cut.classes.size();
  if (c > budget.max_classes || c > 62)
    throw BudgetExceeded("brute force refused: " + std::to_string(c) + " classes exceeds budget " +
                         std::to_string(budget.max_classes));
  std::vector<Weight> class_weight(c, 0);
  for (std::size_t i = 0; i < c; ++i)
    for (EdgeId e : cut.classes[i]) class_weight[i] += inst.weights[e];
  std::uint64_t best = 0;
  Weight best_weight = 0;
  std::vector<bool> kept(inst.edge_count());
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << c); ++s) {
    std::fill(kept.begin(), kept.end(), false);
    Weight w = 0;
    for (std::size_t i = 0; i < c; ++i) {
      if (!(s >> i & 1)) continue;
      w += class_weight[i];
      for (EdgeId e : cut.classes[i]) kept[e] = true;
    }
    if (w <= best_weight) continue;
    if (is_bimodal_subgraph(g, kept)) {
      best = s;
      best_weight = w;
    }
  }
  std::fill(kept.begin(), kept.end(), false);
  for (std::size_t i = 0; i < c; ++i)
    if (best >> i & 1)
      for (EdgeId e : cut.classes[i]) kept[e] = true;
  return make_solution(inst, kept, "oracle-cut");
}

Solution star_solve(const Instance& inst) {
  const PlaneDigraph& g = inst.graph;
  std::vector<bool> kept(inst.edge_count(), true);
  if (inst.edge_count() == 0) return make_solution(inst, kept, "star");
  auto center = star_center(g);
  if (!center) throw std::invalid_argument("star_solve: graph is not a star");
  auto rot = g.rotation(*center);
  const std::size_t k = rot.size();
  // Label a cyclic arc of the rotation "in" and the rest "out"; a dart whose
  // direction disagrees with its label is deleted.
  std::vector<Weight> in_pre(2 * k + 1, 0), out_pre(2 * k + 1, 0);
  for (std::size_t j = 0; j < 2 * k; ++j) {
    Dart d = rot[j % k];
    bool is_in = g.direction(d) == Direction::kIn;
    in_pre[j + 1] = in_pre[j] + (is_in ? inst.weights[d.edge] : Weight(0));
    out_pre[j + 1] = out_pre[j] + (is_in ? Weight(0) : inst.weights[d.edge]);
  }
  const Weight all_in = in_pre[k];
  std::size_t best_a = 0, best_len = 0;
  Weight best = all_in;  // empty in-arc: every in-dart deleted
  for (std::size_t len = 1; len <= k; ++len) {
    for (std::size_t a = 0; a < (len == k ? 1 : k); ++a) {
      Weight c = (out_pre[a + len] - out_pre[a]) + (all_in - (in_pre[a + len] - in_pre[a]));
      if (c < best) {
        best = c;
        best_a = a;
        best_len = len;
      }
    }
  }
  for (std::size_t j = 0; j < k; ++j) {
    Dart d = rot[j];
    bool in_arc = ((j + k - best_a) % k) < best_len;
    bool is_in = g.direction(d) == Direction::kIn;
    if (in_arc != is_in) kept[d.edge] = false;
  }
  return make_solution(inst, kept, "star");
}

}  // namespace mwbs
