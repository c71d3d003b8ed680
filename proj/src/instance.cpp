#include "mwbs/instance.hpp"

#include <stdexcept>

namespace mwbs {

Instance make_instance(PlaneDigraph graph, std::vector<Weight> weights, bool allow_zero) {
  if (weights.size() != graph.edge_count())
    throw EmbeddingError(EmbeddingError::Kind::kMalformed, "expected one weight per edge");
  for (std::size_t e = 0; e < weights.size(); ++e) {
    if (weights[e] < 0 || (!allow_zero && weights[e] == 0))
      throw EmbeddingError(EmbeddingError::Kind::kNonpositiveWeight,
                           "edge " + std::to_string(e) + " has nonpositive weight " + format_weight(weights[e]));
  }
  return Instance{std::move(graph), std::move(weights)};
}

Weight total_weight(const Instance& inst) {
  Weight t = 0;
  for (const auto& w : inst.weights) t += w;
  return t;
}

std::vector<bool> Solution::kept_mask(std::size_t edge_count) const {
  std::vector<bool> mask(edge_count, false);
  for (EdgeId e : kept_edges) mask[e] = true;
  return mask;
}

bool is_bimodal_subgraph(const PlaneDigraph& g, const std::vector<bool>& kept) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (switch_count(g, v, kept) > 2) return false;
  return true;
}

std::vector<int> certificate(const PlaneDigraph& g, const std::vector<bool>& kept) {
  std::vector<int> out(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) out[v] = switch_count(g, v, kept);
  return out;
}

Solution make_solution(const Instance& inst, const std::vector<bool>& kept, std::string method) {
  if (!is_bimodal_subgraph(inst.graph, kept))
    throw std::logic_error(method + ": kept subgraph is not bimodal");
  Solution s;
  s.method = std::move(method);
  for (EdgeId e = 0; e < inst.edge_count(); ++e) {
    if (kept[e]) {
      s.kept_edges.push_back(e);
      s.kept_weight += inst.weights[e];
    } else {
      s.deleted_weight += inst.weights[e];
    }
  }
  return s;
}

Subgraph edge_subgraph(const Instance& inst, const std::vector<bool>& keep, bool drop_isolated, bool allow_zero) {
  const PlaneDigraph& g = inst.graph;
  constexpr VertexId kNone = 0xffffffffu;
  std::vector<VertexId> vmap(g.vertex_count(), kNone);
  std::vector<EdgeId> emap(g.edge_count(), kNone);
  Subgraph sub;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    bool used = !drop_isolated;
    for (const Dart& d : g.rotation(v)) used = used || keep[d.edge];
    if (used) {
      vmap[v] = static_cast<VertexId>(sub.vertex_origin.size());
      sub.vertex_origin.push_back(v);
    }
  }
  std::vector<Edge> edges;
  std::vector<Weight> weights;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!keep[e]) continue;
    emap[e] = static_cast<EdgeId>(edges.size());
    edges.push_back({vmap[g.edge(e).tail], vmap[g.edge(e).head]});
    weights.push_back(inst.weights[e]);
    sub.edge_origin.push_back(e);
  }
  std::vector<std::vector<Dart>> rot(sub.vertex_origin.size());
  for (std::size_t nv = 0; nv < sub.vertex_origin.size(); ++nv) {
    for (const Dart& d : g.rotation(sub.vertex_origin[nv]))
      if (keep[d.edge]) rot[nv].push_back({emap[d.edge], d.end});
  }
  std::size_t n = sub.vertex_origin.size();
  sub.instance = make_instance(PlaneDigraph(n, std::move(edges), std::move(rot)), std::move(weights), allow_zero);
  return sub;
}

std::vector<Subgraph> connected_components(const Instance& inst, bool allow_zero) {
  const PlaneDigraph& g = inst.graph;
  std::size_t count = 0;
  auto label = component_labels(g, &count);
  std::vector<std::vector<bool>> masks;
  std::vector<int> slot(count, -1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0 || slot[label[v]] >= 0) continue;
    slot[label[v]] = static_cast<int>(masks.size());
    masks.emplace_back(g.edge_count(), false);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) masks[slot[label[g.edge(e).tail]]][e] = true;
  std::vector<Subgraph> out;
  out.reserve(masks.size());
  for (const auto& m : masks) out.push_back(edge_subgraph(inst, m, true, allow_zero));
  return out;
}

std::optional<VertexId> star_center(const PlaneDigraph& g) {
  if (g.edge_count() == 0) return std::nullopt;
  std::optional<VertexId> best;
  for (VertexId c : {g.edge(0).tail, g.edge(0).head}) {
    bool ok = g.degree(c) == g.edge_count();
    for (VertexId v = 0; ok && v < g.vertex_count(); ++v)
      if (v != c && g.degree(v) > 3) ok = false;
    if (ok && (!best || g.degree(c) > g.degree(*best) || (g.degree(c) == g.degree(*best) && c < *best))) best = c;
  }
  return best;
}

}  // namespace mwbs
