#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mwbs/plane_digraph.hpp"

namespace mwbs {

using NodeId = std::uint32_t;

// Unrooted tree whose leaves are the edges. A graph with a single edge is a
// lone leaf node with no arcs.
struct SphereCutDecomposition {
  std::size_t node_count = 0;
  std::vector<std::pair<NodeId, NodeId>> arcs;
  std::map<NodeId, EdgeId> leaf_map;
  std::optional<std::size_t> declared_width;

  std::optional<NodeId> leaf_of(EdgeId e) const;
};

class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ViolationKind { kLeafBijection, kInternalDegree, kTreeShape, kMidSet, kContiguity, kDeclaredWidth };

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::size_t width = 0;
  bool ok() const { return violations.empty(); }
};

std::string to_string(ViolationKind k);

// Checks the leaf bijection, node degrees, tree shape, middle sets (two
// independent computations) and dart contiguity at every middle vertex.
ValidationReport validate_decomposition(const PlaneDigraph& g, const SphereCutDecomposition& d);

struct BoundaryVertex {
  VertexId vertex = 0;
  std::size_t run_start = 0;  // rotation index of the first inside dart
  std::size_t run_length = 0;
};

struct ArcBoundary {
  NodeId inside_node = 0;
  NodeId outside_node = 0;
  std::vector<BoundaryVertex> mid;  // ascending vertex id
  // Middle vertices in the cyclic order the separating curve visits them,
  // starting from the smallest id. Empty when the face walk does not close
  // into a single cycle through all of them.
  std::vector<VertexId> noose_order;

  const BoundaryVertex* find(VertexId v) const;
};

struct RootedDecomposition {
  NodeId root_leaf = 0;
  EdgeId root_edge = 0;
  std::vector<NodeId> parent;
  std::vector<std::vector<NodeId>> children;
  std::vector<std::optional<EdgeId>> leaf_edge;
  std::vector<NodeId> postorder;       // every node but the root leaf, children first
  std::vector<ArcBoundary> boundary;   // indexed by node: the arc towards its parent
  std::size_t width = 0;
};

// Throws DecompositionError if d is not a valid decomposition of the
// connected graph g or root_leaf is not a leaf.
RootedDecomposition root_decomposition(const PlaneDigraph& g, const SphereCutDecomposition& d, NodeId root_leaf);

ArcBoundary arc_boundary(const PlaneDigraph& g, const SphereCutDecomposition& d, std::size_t arc, NodeId root_leaf);

enum class BuildStrategy { kGreedySweep, kRecursiveBisection };

// g must be connected with at least one edge.
SphereCutDecomposition build_sphere_cut(const PlaneDigraph& g, BuildStrategy strategy);

// Edge order in which every prefix is contiguous at every vertex. Throws
// DecompositionError, naming the stuck prefix, if the search gives up.
std::vector<EdgeId> greedy_sweep_order(const PlaneDigraph& g);

SphereCutDecomposition caterpillar(std::span<const EdgeId> order);

bool is_contiguous_at(const PlaneDigraph& g, VertexId v, const std::vector<bool>& inside);
std::vector<VertexId> mid_set(const PlaneDigraph& g, const std::vector<bool>& inside);

struct RadialGraph {
  PlaneDigraph graph;  // arcs point from vertex nodes to face nodes
  std::size_t vertex_nodes = 0;
  std::size_t face_nodes = 0;
};

RadialGraph build_radial_graph(const PlaneDigraph& g);

nlohmann::json decomposition_to_json(const SphereCutDecomposition& d);
SphereCutDecomposition decomposition_from_json(const nlohmann::json& doc);

}  // namespace mwbs
