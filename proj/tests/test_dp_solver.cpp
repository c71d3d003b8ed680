#include <algorithm>

#include "corpus.hpp"
#include "doctest.h"
#include "mwbs/dp_solver.hpp"
#include "mwbs/oracle.hpp"
#include "oracles.hpp"

using namespace mwbs;
using namespace mwbs::testing;

namespace {

constexpr End T = End::kTail;
constexpr End H = End::kHead;
constexpr Direction I = Direction::kIn;
constexpr Direction O = Direction::kOut;
using C = Configuration;

std::vector<std::int64_t> integer_costs(const Instance& inst) {
  auto sc = scale_to_integers(inst.weights);
  return *sc.narrow();
}

NodeId leaf_for(const RootedDecomposition& rd, EdgeId e) {
  for (NodeId x = 0; x < rd.leaf_edge.size(); ++x)
    if (rd.leaf_edge[x] == e && x != rd.root_leaf) return x;
  throw std::logic_error("no leaf");
}

std::size_t index_for(const DpTable<std::int64_t>& t, std::initializer_list<std::pair<VertexId, C>> a) {
  std::vector<C> x(t.mid.size(), C::kI);
  for (auto [v, c] : a) x[std::find(t.mid.begin(), t.mid.end(), v) - t.mid.begin()] = c;
  return encode_assignment(x);
}

}  // namespace

TEST_CASE("configuration algebra examples") {
  CHECK(compatible(C::kOIO, C::kO));
  CHECK(compatible(C::kI, C::kIOI));
  CHECK_FALSE(compatible(C::kIO, C::kIO));
  CHECK(compatible_wrt(C::kIO, C::kO, C::kIO));
  CHECK_FALSE(compatible_wrt(C::kIO, C::kO, C::kOI));
  CHECK(compatible_wrt(C::kI, C::kI, C::kI));
  CHECK(to_string(C::kIOI) == "(i,o,i)");
  CHECK(parse_configuration("(o,i)") == C::kOI);
  CHECK_FALSE(parse_configuration("(o,o)"));
}

TEST_CASE("compatibility matches string rewriting on every input") {
  for (C x : kAllConfigurations)
    for (C y : kAllConfigurations) {
      CHECK(compatible(x, y) == string_compatible(x, y));
      CHECK(compatible(x, y) == compatible(y, x));
      for (C z : kAllConfigurations) CHECK(compatible_wrt(x, y, z) == string_compatible_wrt(x, y, z));
    }
}

TEST_CASE("maximal compatible partners") {
  auto maximal = [](C x) {
    std::vector<C> partners;
    for (C y : kAllConfigurations)
      if (compatible(x, y)) partners.push_back(y);
    for (C y : partners) {
      bool covers = true;
      for (C z : partners) covers = covers && letters(y).find(letters(z)) != std::string::npos;
      if (covers) return y;
    }
    throw std::logic_error("no maximal partner");
  };
  CHECK(maximal(C::kI) == C::kIOI);
  CHECK(maximal(C::kO) == C::kOIO);
  CHECK(maximal(C::kOI) == C::kIO);
  CHECK(maximal(C::kIO) == C::kOI);
}

TEST_CASE("compatible blocks merge into a bimodal cycle") {
  // Fill each block with one to three darts and read the merged cycle.
  for (C x : kAllConfigurations)
    for (C y : kAllConfigurations) {
      if (!compatible(x, y)) continue;
      for (int fill = 1; fill <= 3; ++fill) {
        std::string cycle;
        for (char ch : letters(x) + letters(y)) cycle += std::string(fill, ch);
        CHECK(naive_bimodal(cycle));
      }
    }
}

TEST_CASE("leaf tables") {
  // u -> v with weight 3, both endpoints kept on the boundary by extra edges.
  Instance inst = build(4, {{0, 1}, {2, 0}, {1, 3}},
                        {{{0, T}, {1, H}}, {{0, H}, {2, T}}, {{1, T}}, {{2, H}}}, {3, 1, 1});
  auto d = caterpillar(std::vector<EdgeId>{1, 0, 2});
  auto rd = root_decomposition(inst.graph, d, *d.leaf_of(1));
  NodeId x = leaf_for(rd, 0);
  auto t = leaf_table<std::int64_t>(inst.graph, 0, 3, rd.boundary[x]);
  REQUIRE(t.mid == std::vector<VertexId>{0, 1});
  CHECK(t.size() == 36);
  CHECK(std::all_of(t.feasible.begin(), t.feasible.end(), [](auto f) { return f == 1; }));
  CHECK(t.cost[index_for(t, {{0, C::kO}, {1, C::kI}})] == 0);
  CHECK(t.cost[index_for(t, {{0, C::kI}, {1, C::kI}})] == 3);
  CHECK(t.cost[index_for(t, {{0, C::kOIO}, {1, C::kIOI}})] == 0);
}

TEST_CASE("joining two out-edges at a shared vertex") {
  // v=0 with out-edges to a=1 and b=2; a and b keep further edges so they stay on the boundary.
  Instance inst = build(5, {{0, 1}, {0, 2}, {3, 1}, {4, 2}, {3, 0}},
                        {{{0, T}, {1, T}, {4, H}}, {{0, H}, {2, H}}, {{1, H}, {3, H}}, {{2, T}, {4, T}}, {{3, T}}});
  auto d = caterpillar(std::vector<EdgeId>{0, 1, 2, 3, 4});
  auto rd = root_decomposition(inst.graph, d, *d.leaf_of(4));
  auto costs = integer_costs(inst);
  auto run = compute_tables<std::int64_t>(inst.graph, costs, d, rd.root_leaf, JoinMode::kSharedOnly, 9);
  // The node whose inside is {e0, e1}.
  NodeId join = rd.parent[leaf_for(rd, 0)];
  REQUIRE(rd.children[join].size() == 2);
  const auto& t = run.tables[join];
  REQUIRE(t.mid == std::vector<VertexId>{0, 1, 2});
  CHECK(t.cost[index_for(t, {{0, C::kO}, {1, C::kI}, {2, C::kI}})] == 0);
  CHECK(t.cost[index_for(t, {{0, C::kI}, {1, C::kI}, {2, C::kI}})] == 2);
}

TEST_CASE("two-edge path keeps both edges") {
  Instance inst = build(3, {{0, 1}, {1, 2}}, {{{0, T}}, {{0, H}, {1, T}}, {{1, H}}});
  auto d = caterpillar(std::vector<EdgeId>{0, 1});
  CHECK(validate_decomposition(inst.graph, d).ok());
  Solution s = solve_dp(inst, d);
  CHECK(s.deleted_weight == 0);
  CHECK(s.kept_edges.size() == 2);
}

TEST_CASE("alternating 4-star loses one unit edge") {
  Instance star = make_star({I, O, I, O}, {});
  Solution s = solve_dp(star, build_sphere_cut(star.graph, BuildStrategy::kGreedySweep));
  CHECK(s.deleted_weight == 1);
  CHECK(s.kept_weight == 3);
}

TEST_CASE("tables match per-assignment brute force") {
  auto corpus = oracle_corpus(40, 41, 5, 8);
  for (const auto& entry : corpus) {
    const PlaneDigraph& g = entry.instance.graph;
    auto costs = integer_costs(entry.instance);
    for (auto strategy : {BuildStrategy::kGreedySweep, BuildStrategy::kRecursiveBisection}) {
      auto d = build_sphere_cut(g, strategy);
      NodeId root = d.leaf_map.begin()->first;
      for (auto mode : {JoinMode::kSharedOnly, JoinMode::kExhaustive}) {
        auto run = compute_tables<std::int64_t>(g, costs, d, root, mode, 9);
        for (NodeId x : run.rooted.postorder) {
          std::vector<bool> inside(g.edge_count(), false);
          std::vector<NodeId> stack{x};
          while (!stack.empty()) {
            NodeId y = stack.back();
            stack.pop_back();
            if (run.rooted.leaf_edge[y]) inside[*run.rooted.leaf_edge[y]] = true;
            for (NodeId c : run.rooted.children[y]) stack.push_back(c);
          }
          const auto& t = run.tables[x];
          auto expect = assignment_minima(g, costs, inside, t.mid);
          REQUIRE(expect.size() == t.size());
          for (std::size_t i = 0; i < t.size(); ++i) {
            INFO(entry.name << " node " << x << " entry " << i);
            CHECK(static_cast<bool>(t.feasible[i]) == expect[i].has_value());
            if (expect[i] && t.feasible[i]) CHECK(t.cost[i] == *expect[i]);
          }
        }
      }
    }
  }
}

TEST_CASE("dp matches the oracle, whatever the root") {
  Rng rng(5);
  for (const auto& entry : oracle_corpus(120, 43)) {
    Solution oracle = brute_force_mwbs(entry.instance);
    for (auto strategy : {BuildStrategy::kGreedySweep, BuildStrategy::kRecursiveBisection}) {
      auto d = build_sphere_cut(entry.instance.graph, strategy);
      std::vector<NodeId> leaves;
      for (auto [node, e] : d.leaf_map) leaves.push_back(node);
      for (int k = 0; k < 3; ++k) {
        DpOptions opt;
        opt.root_leaf = leaves[rng.below(leaves.size())];
        Solution s = solve_dp(entry.instance, d, opt);
        INFO(entry.name);
        CHECK(s.kept_weight == oracle.kept_weight);
        CHECK(naive_bimodal_subgraph(entry.instance.graph, s.kept_mask(entry.instance.edge_count())));
      }
      DpOptions exhaustive;
      exhaustive.join_mode = JoinMode::kExhaustive;
      CHECK(solve_dp(entry.instance, d, exhaustive).kept_weight == oracle.kept_weight);
    }
  }
}

TEST_CASE("scaling weights scales the deletion and keeps an optimal set") {
  for (const auto& entry : oracle_corpus(30, 47)) {
    Instance scaled = entry.instance;
    const Weight c(7, 3);
    for (auto& w : scaled.weights) w *= c;
    auto d = build_sphere_cut(entry.instance.graph, BuildStrategy::kGreedySweep);
    Solution a = solve_dp(entry.instance, d), b = solve_dp(scaled, d);
    CHECK(b.deleted_weight == a.deleted_weight * c);
    Weight kept = 0;
    for (EdgeId e : a.kept_edges) kept += scaled.weights[e];
    CHECK(kept == b.kept_weight);
  }
}

TEST_CASE("huge weights fall back to big integers") {
  Instance star = make_star({I, O, I, O, I}, {Weight(BigInt(1) << 70), 1, Weight(BigInt(1) << 70), 2, 3});
  Solution s = solve_dp(star, build_sphere_cut(star.graph, BuildStrategy::kGreedySweep));
  CHECK(s.kept_weight == brute_force_mwbs(star).kept_weight);
}

TEST_CASE("solve_dp preconditions") {
  Instance one = build(2, {{0, 1}}, {{{0, T}}, {{0, H}}});
  CHECK_THROWS_AS(solve_dp(one, build_sphere_cut(one.graph, BuildStrategy::kGreedySweep)), std::invalid_argument);
  Instance tri = build(3, {{0, 1}, {1, 2}, {2, 0}}, {{{0, T}, {2, H}}, {{1, T}, {0, H}}, {{2, T}, {1, H}}});
  DpOptions narrow;
  narrow.max_width = 1;
  CHECK_THROWS_AS(solve_dp(tri, build_sphere_cut(tri.graph, BuildStrategy::kGreedySweep), narrow), DecompositionError);
}
