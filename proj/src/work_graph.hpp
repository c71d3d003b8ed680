#pragma once

// Editable rotation system used while rules rewrite an instance. Ids stay
// stable during editing; compact() renumbers the survivors.

#include <algorithm>
#include <vector>

#include "mwbs/instance.hpp"

namespace mwbs::detail {

struct WorkGraph {
  std::vector<Edge> edges;
  std::vector<Weight> weights;
  std::vector<bool> edge_alive;
  std::vector<std::vector<Dart>> rot;
  std::vector<bool> vertex_alive;

  static WorkGraph from(const Instance& inst) {
    WorkGraph w;
    const PlaneDigraph& g = inst.graph;
    w.edges.assign(g.edges().begin(), g.edges().end());
    w.weights = inst.weights;
    w.edge_alive.assign(g.edge_count(), true);
    for (VertexId v = 0; v < g.vertex_count(); ++v) w.rot.emplace_back(g.rotation(v).begin(), g.rotation(v).end());
    w.vertex_alive.assign(g.vertex_count(), true);
    return w;
  }

  VertexId add_vertex() {
    rot.emplace_back();
    vertex_alive.push_back(true);
    return static_cast<VertexId>(rot.size() - 1);
  }

  // The caller places the two darts.
  EdgeId add_edge(VertexId tail, VertexId head, Weight w) {
    edges.push_back({tail, head});
    weights.push_back(std::move(w));
    edge_alive.push_back(true);
    return static_cast<EdgeId>(edges.size() - 1);
  }

  VertexId vertex_of(Dart d) const { return d.end == End::kTail ? edges[d.edge].tail : edges[d.edge].head; }
  VertexId opposite(Dart d) const { return vertex_of(twin(d)); }

  int switch_count(VertexId v) const {
    int s = 0;
    const auto& r = rot[v];
    for (std::size_t i = 0; i < r.size(); ++i)
      if (PlaneDigraph::direction(r[i]) != PlaneDigraph::direction(r[(i + 1) % r.size()])) ++s;
    return s;
  }

  void erase_dart(Dart d) {
    auto& r = rot[vertex_of(d)];
    r.erase(std::find(r.begin(), r.end(), d));
  }

  void remove_edge(EdgeId e) {
    erase_dart({e, End::kTail});
    erase_dart({e, End::kHead});
    edge_alive[e] = false;
  }

  struct Compacted {
    Instance instance;
    std::vector<EdgeId> edge_origin;      // new id -> work id
    std::vector<VertexId> vertex_origin;  // new id -> work id
    std::vector<EdgeId> edge_index;       // work id -> new id (or kNone)
  };

  static constexpr std::uint32_t kNone = 0xffffffffu;

  Compacted compact(bool drop_isolated, bool allow_zero) const {
    Compacted c;
    std::vector<VertexId> vmap(rot.size(), kNone);
    for (VertexId v = 0; v < rot.size(); ++v) {
      if (!vertex_alive[v] || (drop_isolated && rot[v].empty())) continue;
      vmap[v] = static_cast<VertexId>(c.vertex_origin.size());
      c.vertex_origin.push_back(v);
    }
    c.edge_index.assign(edges.size(), kNone);
    std::vector<Edge> es;
    std::vector<Weight> ws;
    for (EdgeId e = 0; e < edges.size(); ++e) {
      if (!edge_alive[e]) continue;
      c.edge_index[e] = static_cast<EdgeId>(es.size());
      c.edge_origin.push_back(e);
      es.push_back({vmap[edges[e].tail], vmap[edges[e].head]});
      ws.push_back(weights[e]);
    }
    std::vector<std::vector<Dart>> r(c.vertex_origin.size());
    for (std::size_t nv = 0; nv < c.vertex_origin.size(); ++nv)
      for (const Dart& d : rot[c.vertex_origin[nv]]) r[nv].push_back({c.edge_index[d.edge], d.end});
    std::size_t n = c.vertex_origin.size();
    c.instance = make_instance(PlaneDigraph(n, std::move(es), std::move(r)), std::move(ws), allow_zero);
    return c;
  }
};

}  // namespace mwbs::detail
