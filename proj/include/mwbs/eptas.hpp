#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mwbs/instance.hpp"

namespace mwbs {

// Undirected BFS distance of every vertex from the root of its component.
struct LayerDecomposition {
  std::vector<std::uint32_t> layer;  // per vertex
  std::vector<VertexId> roots;       // one per component, ascending

  std::size_t layer_count() const;
  std::vector<std::vector<VertexId>> layers() const;
};

// Throws std::invalid_argument if g is not connected.
LayerDecomposition bfs_layers(const PlaneDigraph& g, VertexId root);
// Every component layered from its lowest vertex id.
LayerDecomposition bfs_layers(const PlaneDigraph& g);

// Edges between layers j and j+1 with j % t == residue, ascending.
std::vector<EdgeId> boundary_edges(const PlaneDigraph& g, const LayerDecomposition& layers, std::size_t residue,
                                   std::size_t t);

struct SplitLayerGraph {
  std::size_t band = 0;
  Instance instance;
  std::vector<EdgeId> edge_origin;      // band edge -> input edge
  std::vector<VertexId> vertex_origin;  // band vertex -> input vertex; a split copy maps to the vertex it stands for
  std::vector<bool> split_vertex;       // band vertex is a degree-1 stand-in
};

struct BandSplit {
  std::vector<SplitLayerGraph> bands;
  std::vector<std::vector<std::pair<std::size_t, EdgeId>>> copies;  // input edge -> (band, band edge)
};

// Band 0 holds layers 0..residue, band j >= 1 holds the next t layers after
// band j-1. An edge crossing two bands is copied into both, its far endpoint
// replaced by a fresh degree-1 vertex.
BandSplit split_layer_graphs(const Instance& inst, const LayerDecomposition& layers, std::size_t residue,
                             std::size_t t);

struct EptasReport {
  bool maximize = true;
  Weight epsilon;
  std::size_t t = 0;
  std::vector<Weight> residue_values;  // kept weight (max) or deleted weight (min)
  std::size_t chosen = 0;
  Weight guarantee;  // 1 - 1/t for max, 1 + 2/t for min
  Solution solution;
};

// Throw std::invalid_argument unless 0 < epsilon <= 1.
EptasReport eptas_max(const Instance& inst, const Weight& epsilon);
EptasReport eptas_min(const Instance& inst, const Weight& epsilon);

nlohmann::json eptas_report_to_json(const Instance& inst, const EptasReport& r);

}  // namespace mwbs
