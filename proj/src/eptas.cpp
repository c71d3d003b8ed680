#include "mwbs/eptas.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <stdexcept>

#include "mwbs/io.hpp"
#include "mwbs/kernel.hpp"

namespace mwbs {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

void bfs_from(const PlaneDigraph& g, VertexId root, std::vector<std::uint32_t>& layer) {
  std::deque<VertexId> queue{root};
  layer[root] = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const Dart& d : g.rotation(v)) {
      VertexId u = g.opposite(d);
      if (layer[u] != kUnreached) continue;
      layer[u] = layer[v] + 1;
      queue.push_back(u);
    }
  }
}

std::size_t shift_width(const Weight& epsilon, int numerator) {
  if (epsilon <= 0 || epsilon > 1) throw std::invalid_argument("epsilon must lie in (0, 1]");
  return static_cast<std::size_t>(ceil(Weight(numerator) / epsilon));
}

}  // namespace

std::size_t LayerDecomposition::layer_count() const {
  std::uint32_t top = 0;
  for (auto l : layer) top = std::max(top, l + 1);
  return top;
}

std::vector<std::vector<VertexId>> LayerDecomposition::layers() const {
  std::vector<std::vector<VertexId>> out(layer_count());
  for (VertexId v = 0; v < layer.size(); ++v) out[layer[v]].push_back(v);
  return out;
}

LayerDecomposition bfs_layers(const PlaneDigraph& g, VertexId root) {
  if (root >= g.vertex_count()) throw std::invalid_argument("bfs_layers: root out of range");
  LayerDecomposition d;
  d.layer.assign(g.vertex_count(), kUnreached);
  d.roots = {root};
  bfs_from(g, root, d.layer);
  for (auto l : d.layer)
    if (l == kUnreached) throw std::invalid_argument("bfs_layers: graph is not connected");
  return d;
}

LayerDecomposition bfs_layers(const PlaneDigraph& g) {
  LayerDecomposition d;
  d.layer.assign(g.vertex_count(), kUnreached);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (d.layer[v] != kUnreached) continue;
    d.roots.push_back(v);
    bfs_from(g, v, d.layer);
  }
  return d;
}

std::vector<EdgeId> boundary_edges(const PlaneDigraph& g, const LayerDecomposition& layers, std::size_t residue,
                                   std::size_t t) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto a = layers.layer[g.edge(e).tail], b = layers.layer[g.edge(e).head];
    if (a == b) continue;
    if (std::min(a, b) % t == residue) out.push_back(e);
  }
  return out;
}

BandSplit split_layer_graphs(const Instance& inst, const LayerDecomposition& layers, std::size_t residue,
                             std::size_t t) {
  const PlaneDigraph& g = inst.graph;
  const std::size_t n = g.vertex_count(), m = g.edge_count();
  auto band_of = [&](VertexId v) -> std::size_t {
    std::size_t l = layers.layer[v];
    return l <= residue ? 0 : 1 + (l - residue - 1) / t;
  };
  std::size_t band_count = 0;
  for (VertexId v = 0; v < n; ++v) band_count = std::max(band_count, band_of(v) + 1);

  struct Builder {
    std::vector<Edge> edges;
    std::vector<Weight> weights;
    std::vector<std::vector<Dart>> rot;
    SplitLayerGraph out;
  };
  std::vector<Builder> bands(band_count);
  std::vector<VertexId> local(n);
  for (VertexId v = 0; v < n; ++v) {
    Builder& b = bands[band_of(v)];
    local[v] = static_cast<VertexId>(b.out.vertex_origin.size());
    b.out.vertex_origin.push_back(v);
    b.out.split_vertex.push_back(false);
  }
  BandSplit split;
  split.copies.resize(m);
  // Band edge ids follow input edge order, so each band's ids are known before
  // the rotations are filled in.
  std::vector<std::array<EdgeId, 2>> local_edge(m);
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    std::size_t bt = band_of(ed.tail), bh = band_of(ed.head);
    for (int k = 0; k < (bt == bh ? 1 : 2); ++k) {
      std::size_t j = k == 0 ? bt : bh;
      Builder& b = bands[j];
      Edge le{};
      if (bt == bh) {
        le = {local[ed.tail], local[ed.head]};
      } else {
        VertexId far = k == 0 ? ed.head : ed.tail;
        VertexId x = static_cast<VertexId>(b.out.vertex_origin.size());
        b.out.vertex_origin.push_back(far);
        b.out.split_vertex.push_back(true);
        le = k == 0 ? Edge{local[ed.tail], x} : Edge{x, local[ed.head]};
      }
      EdgeId id = static_cast<EdgeId>(b.edges.size());
      local_edge[e][k] = id;
      b.edges.push_back(le);
      b.weights.push_back(inst.weights[e]);
      b.out.edge_origin.push_back(e);
      split.copies[e].push_back({j, id});
    }
  }
  for (auto& b : bands) b.rot.resize(b.out.vertex_origin.size());
  for (VertexId v = 0; v < n; ++v) {
    std::size_t j = band_of(v);
    for (const Dart& d : g.rotation(v)) {
      const Edge& ed = g.edge(d.edge);
      bool crossing = band_of(ed.tail) != band_of(ed.head);
      // The copy living in v's band is copy 0 when v is the tail side.
      int k = crossing && j != band_of(ed.tail) ? 1 : 0;
      bands[j].rot[local[v]].push_back({local_edge[d.edge][k], d.end});
    }
  }
  for (std::size_t j = 0; j < band_count; ++j) {
    Builder& b = bands[j];
    for (EdgeId id = 0; id < b.edges.size(); ++id) {
      for (End end : {End::kTail, End::kHead}) {
        VertexId x = end == End::kTail ? b.edges[id].tail : b.edges[id].head;
        if (b.out.split_vertex[x]) b.rot[x].push_back({id, end});
      }
    }
    b.out.band = j;
    std::size_t nv = b.out.vertex_origin.size();
    b.out.instance = make_instance(PlaneDigraph(nv, std::move(b.edges), std::move(b.rot)), std::move(b.weights));
    split.bands.push_back(std::move(b.out));
  }
  return split;
}

EptasReport eptas_max(const Instance& inst, const Weight& epsilon) {
  EptasReport r;
  r.maximize = true;
  r.epsilon = epsilon;
  r.t = shift_width(epsilon, 1);
  r.guarantee = 1 - Weight(1, r.t);
  const PlaneDigraph& g = inst.graph;
  LayerDecomposition layers = bfs_layers(g);
  for (std::size_t i = 0; i < r.t; ++i) {
    std::vector<bool> keep(g.edge_count(), true);
    for (EdgeId e : boundary_edges(g, layers, i, r.t)) keep[e] = false;
    Subgraph sub = edge_subgraph(inst, keep, true);
    Solution part = solve_subexponential(sub.instance);
    std::vector<bool> kept(g.edge_count(), false);
    for (EdgeId e : part.kept_edges) kept[sub.edge_origin[e]] = true;
    Solution sol = make_solution(inst, kept, "eptas-max");
    r.residue_values.push_back(sol.kept_weight);
    if (i == 0 || sol.kept_weight > r.solution.kept_weight) {
      r.chosen = i;
      r.solution = std::move(sol);
    }
  }
  return r;
}

EptasReport eptas_min(const Instance& inst, const Weight& epsilon) {
  EptasReport r;
  r.maximize = false;
  r.epsilon = epsilon;
  r.t = shift_width(epsilon, 2);
  r.guarantee = 1 + Weight(2, r.t);
  const PlaneDigraph& g = inst.graph;
  LayerDecomposition layers = bfs_layers(g);
  for (std::size_t i = 0; i < r.t; ++i) {
    BandSplit split = split_layer_graphs(inst, layers, i, r.t);
    std::vector<bool> kept(g.edge_count(), true);
    for (const auto& band : split.bands) {
      Solution part = solve_subexponential(band.instance);
      auto mask = part.kept_mask(band.instance.edge_count());
      for (EdgeId e = 0; e < mask.size(); ++e)
        if (!mask[e]) kept[band.edge_origin[e]] = false;
    }
    Solution sol = make_solution(inst, kept, "eptas-min");
    r.residue_values.push_back(sol.deleted_weight);
    if (i == 0 || sol.deleted_weight < r.solution.deleted_weight) {
      r.chosen = i;
      r.solution = std::move(sol);
    }
  }
  return r;
}

nlohmann::json eptas_report_to_json(const Instance& inst, const EptasReport& r) {
  nlohmann::json values = nlohmann::json::array();
  for (std::size_t i = 0; i < r.residue_values.size(); ++i)
    values.push_back({{"residue", i}, {"value", format_weight(r.residue_values[i])}});
  return {{"variant", r.maximize ? "max" : "min"},
          {"epsilon", format_weight(r.epsilon)},
          {"t", r.t},
          {"residues", std::move(values)},
          {"chosen", r.chosen},
          {"guarantee", format_weight(r.guarantee)},
          {"solution", solution_to_json(inst, r.solution)}};
}

}  // namespace mwbs
