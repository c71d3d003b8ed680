#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mwbs/plane_digraph.hpp"
#include "mwbs/weight.hpp"

namespace mwbs {

struct Instance {
  PlaneDigraph graph;
  std::vector<Weight> weights;

  std::size_t edge_count() const { return graph.edge_count(); }
};

// Checks one weight per edge; weights must be positive unless allow_zero.
Instance make_instance(PlaneDigraph graph, std::vector<Weight> weights, bool allow_zero = false);

Weight total_weight(const Instance& inst);

struct Solution {
  std::vector<EdgeId> kept_edges;  // ascending
  Weight kept_weight = 0;
  Weight deleted_weight = 0;
  std::string method;

  std::vector<bool> kept_mask(std::size_t edge_count) const;
};

// Builds a solution from a kept mask. Throws std::logic_error if some vertex is not bimodal.
Solution make_solution(const Instance& inst, const std::vector<bool>& kept, std::string method);

bool is_bimodal_subgraph(const PlaneDigraph& g, const std::vector<bool>& kept);

// Per-vertex switch counts of the kept subgraph.
std::vector<int> certificate(const PlaneDigraph& g, const std::vector<bool>& kept);

// A subgraph with rotations inherited from its parent, plus id maps back.
struct Subgraph {
  Instance instance;
  std::vector<EdgeId> edge_origin;
  std::vector<VertexId> vertex_origin;
};

Subgraph edge_subgraph(const Instance& inst, const std::vector<bool>& keep, bool drop_isolated, bool allow_zero = false);

// Components with at least one edge, ordered by their smallest vertex id.
std::vector<Subgraph> connected_components(const Instance& inst, bool allow_zero = false);

// A vertex incident to every edge such that all other vertices have degree
// at most 3 (and are therefore bimodal in every subgraph).
std::optional<VertexId> star_center(const PlaneDigraph& g);

}  // namespace mwbs
