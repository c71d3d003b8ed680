#pragma once

#include <utility>
#include <vector>

#include "json.hpp"
#include "mwbs/configuration.hpp"
#include "mwbs/cut_instance.hpp"
#include "mwbs/instance.hpp"

namespace mwbs {

struct RuleRecord {
  int rule = 0;               // 1: isolated vertex, 2: edge between good vertices, 3: split good vertex
  std::uint32_t subject = 0;  // working vertex id (rules 1, 3) or input edge id (rule 2)
  std::vector<VertexId> copies;  // rule 3: new working vertex per dart, in rotation order
};

// Output of the normal-form reduction. Working vertex ids are the input ids
// followed by the split copies in creation order.
struct ReducedInstance {
  Instance instance;
  Weight base_kept_weight = 0;  // weight of edges every optimum may keep outright
  Weight target_shift = 0;      // W' = W - target_shift in the decision view
  std::vector<RuleRecord> trace;
  std::vector<EdgeId> edge_origin;      // reduced edge -> input edge
  std::vector<VertexId> vertex_origin;  // reduced vertex -> input vertex
  std::vector<EdgeId> credited_edges;   // input edges removed by rule 2

  std::vector<bool> lift(std::size_t input_edges, const std::vector<bool>& reduced_kept) const;
};

ReducedInstance reduce_to_simple(const Instance& inst);

struct SwitchPlacement {
  std::vector<std::size_t> boundaries;  // block borders as section offsets, nondecreasing
  std::vector<EdgeId> deletion;         // ascending
  Weight deleted_weight = 0;
};

// Cheapest way to make the section read as x, trying every placement of the
// block borders; ties go to the lexicographically smallest border tuple.
SwitchPlacement optimal_switches(const Instance& inst, VertexId v, const GoodEdgeSection& section, Configuration x);

struct SectionPartition {
  GoodEdgeSection section;
  std::vector<std::size_t> cut_positions;                   // offsets strictly inside the section
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // (offset, length)
  std::vector<std::vector<EdgeId>> classes;                 // direction-pure, nonempty
  std::vector<std::vector<std::size_t>> block_classes;      // per block: its in-class then out-class
};

SectionPartition partition_section(const Instance& inst, VertexId v, const GoodEdgeSection& section);

// Reduces to normal form and groups edges into classes: one singleton per
// edge between bad vertices plus the section partition classes.
CutInstance to_cut_instance(const Instance& inst);

// Contracts consecutive classes to one edge and replaces interleaved pairs by
// the four-edge in/out/in/out gadget. Throws std::invalid_argument when a
// class of two or more edges does not sit inside one section.
CutInstance shrink_cut_instance(const CutInstance& cut);

// Normal form, then the exact DP per component, lifted back.
Solution solve_subexponential(const Instance& inst);

nlohmann::json reduced_to_json(const ReducedInstance& r);
nlohmann::json cut_instance_to_json(const CutInstance& c);
CutInstance cut_instance_from_json(const nlohmann::json& doc);

}  // namespace mwbs
