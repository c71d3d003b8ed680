#include "corpus.hpp"
#include "doctest.h"
#include "mwbs/kernel.hpp"
#include "mwbs/oracle.hpp"
#include "oracles.hpp"

using namespace mwbs;
using namespace mwbs::testing;

namespace {

constexpr End T = End::kTail;
constexpr End H = End::kHead;
constexpr Direction I = Direction::kIn;
constexpr Direction O = Direction::kOut;

CutInstance singletons(const Instance& inst) {
  CutInstance cut{inst, {}, {}, 0};
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    cut.classes.push_back({e});
    cut.pairs.push_back({e});
  }
  return cut;
}

}  // namespace

TEST_CASE("oracle on tiny graphs") {
  Instance empty = make_instance(PlaneDigraph(1, {}, {{}}), {});
  Solution s = brute_force_mwbs(empty);
  CHECK(s.kept_edges.empty());
  CHECK(s.kept_weight == 0);

  Instance tri = build(3, {{0, 1}, {1, 2}, {2, 0}}, {{{0, T}, {2, H}}, {{1, T}, {0, H}}, {{2, T}, {1, H}}});
  CHECK(brute_force_mwbs(tri).kept_edges.size() == 3);

  Solution star = brute_force_mwbs(make_star({I, O, I, O}, {}));
  CHECK(star.kept_weight == 3);
  CHECK(star.deleted_weight == 1);
  // Smallest kept mask among the four optima drops edge 3.
  CHECK(star.kept_edges == std::vector<EdgeId>{0, 1, 2});
}

TEST_CASE("singleton classes reproduce the plain optimum") {
  for (const auto& entry : oracle_corpus(60, 97, 4, 12)) {
    CHECK(brute_force_cut(singletons(entry.instance)).kept_weight == brute_force_mwbs(entry.instance).kept_weight);
  }
}

TEST_CASE("one class holding every edge of an alternating star") {
  Instance star = make_star({I, O, I, O}, {});
  CutInstance cut{star, {{0, 1, 2, 3}}, {{0}}, 0};
  Solution s = brute_force_cut(cut);
  CHECK(s.kept_weight == 0);
  CHECK(s.kept_edges.empty());
}

TEST_CASE("four-edge gadget in isolation") {
  // Centre darts in/0, out/7, in/5, out/0 with classes {e0, e2} and {e1, e3}.
  Instance star = make_star({I, O, I, O}, {});
  std::vector<Weight> w{0, 7, 5, 0};
  Instance inst = make_instance(star.graph, w, true);
  CutInstance cut{inst, {{0, 2}, {1, 3}}, {{0, 1}}, 0};
  Solution s = brute_force_cut(cut);
  CHECK(s.kept_weight == 7);
  CHECK(s.kept_edges == std::vector<EdgeId>{1, 3});
}

TEST_CASE("star solver matches brute force") {
  Rng rng(101);
  for (std::size_t deg = 1; deg <= 12; ++deg) {
    for (int k = 0; k < 6; ++k) {
      Instance star = random_star(deg, rng);
      Solution fast = star_solve(star), slow = brute_force_mwbs(star);
      CHECK(fast.kept_weight == slow.kept_weight);
      CHECK(naive_bimodal_subgraph(star.graph, fast.kept_mask(star.edge_count())));
    }
  }
  Instance path = build(4, {{0, 1}, {1, 2}, {2, 3}}, {{{0, T}}, {{0, H}, {1, T}}, {{1, H}, {2, T}}, {{2, H}}});
  CHECK_THROWS_AS(star_solve(path), std::invalid_argument);
}

TEST_CASE("budget limits") {
  Rng rng(103);
  Instance big = random_star(17, rng);
  CHECK_THROWS_AS(brute_force_mwbs(big), BudgetExceeded);
  CHECK_NOTHROW(brute_force_mwbs(big, OracleBudget{17, 16}));
  CutInstance cut = singletons(big);
  CHECK_THROWS_AS(brute_force_cut(cut), BudgetExceeded);
}
