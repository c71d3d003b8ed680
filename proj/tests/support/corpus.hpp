#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mwbs/generate.hpp"
#include "mwbs/instance.hpp"

namespace mwbs::testing {

struct CorpusEntry {
  std::string name;
  Instance instance;
};

// Connected instances with min_edges <= m <= max_edges, cycling through
// triangulations, sparse graphs, random stars, planted stars and doubled edges.
std::vector<CorpusEntry> oracle_corpus(std::size_t count, std::uint64_t seed = 2024, std::size_t min_edges = 4,
                                       std::size_t max_edges = 14);

// A star whose centre is vertex 0; directions[k] is the k-th dart clockwise.
Instance make_star(const std::vector<Direction>& directions, const std::vector<Weight>& weights);

Instance random_star(std::size_t degree, Rng& rng);

// Adds a parallel copy next to edge e; the copy gets the given weight.
Instance double_edge(const Instance& inst, EdgeId e, const Weight& w);

// Instance from an edge list and clockwise neighbour-dart lists, weights all 1 unless given.
Instance build(std::size_t n, std::vector<Edge> edges, std::vector<std::vector<Dart>> rotation,
               std::vector<Weight> weights = {});

}  // namespace mwbs::testing
