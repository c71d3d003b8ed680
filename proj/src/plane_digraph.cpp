#include "mwbs/plane_digraph.hpp"

#include <algorithm>
#include <numeric>

namespace mwbs {

namespace {

constexpr std::uint32_t kUnset = 0xffffffffu;

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

}  // namespace

PlaneDigraph::PlaneDigraph(std::size_t vertex_count, std::vector<Edge> edges,
                           std::vector<std::vector<Dart>> rotation)
    : edges_(std::move(edges)), rotation_(std::move(rotation)) {
  using K = EmbeddingError::Kind;
  if (rotation_.size() != vertex_count)
    throw EmbeddingError(K::kMalformed, "rotation lists " + std::to_string(rotation_.size()) +
                                            " vertices, expected " + std::to_string(vertex_count));
  const std::size_t m = edges_.size();
  for (std::size_t e = 0; e < m; ++e) {
    const Edge& ed = edges_[e];
    if (ed.tail >= vertex_count || ed.head >= vertex_count)
      throw EmbeddingError(K::kMalformed, "edge " + std::to_string(e) + " has an endpoint out of range");
    if (ed.tail == ed.head) throw EmbeddingError(K::kSelfLoop, "edge " + std::to_string(e) + " is a self-loop");
  }
  position_.assign(m, {kUnset, kUnset});
  for (VertexId v = 0; v < vertex_count; ++v) {
    for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
      Dart d = rotation_[v][i];
      if (d.edge >= m)
        throw EmbeddingError(K::kDartMismatch, "rotation of vertex " + std::to_string(v) +
                                                   " names unknown edge " + std::to_string(d.edge));
      if (vertex_of(d) != v)
        throw EmbeddingError(K::kDartMismatch, "dart of edge " + std::to_string(d.edge) +
                                                   " listed at vertex " + std::to_string(v) +
                                                   " which is not its endpoint");
      auto& slot = position_[d.edge][static_cast<int>(d.end)];
      if (slot != kUnset)
        throw EmbeddingError(K::kDartMismatch, "dart of edge " + std::to_string(d.edge) + " listed twice");
      slot = static_cast<std::uint32_t>(i);
    }
  }
  for (std::size_t e = 0; e < m; ++e) {
    if (position_[e][0] == kUnset || position_[e][1] == kUnset)
      throw EmbeddingError(K::kDartMismatch, "edge " + std::to_string(e) + " is missing a dart in the rotation");
  }

  auto faces = trace_faces(*this);
  face_count_ = faces.size();
  for (const auto& r : rotation_) face_count_ += r.empty();

  std::size_t ncomp = 0;
  auto label = component_labels(*this, &ncomp);
  std::vector<long long> euler(ncomp, 0);
  for (VertexId v = 0; v < vertex_count; ++v) {
    euler[label[v]] += 1;
    if (rotation_[v].empty()) euler[label[v]] += 1;  // the one face around an isolated point
  }
  for (const Edge& ed : edges_) euler[label[ed.tail]] -= 1;
  for (const auto& f : faces) euler[label[vertex_of(f.front())]] += 1;
  for (std::size_t c = 0; c < ncomp; ++c) {
    if (euler[c] != 2)
      throw EmbeddingError(K::kEuler, "Euler check failed: V - E + F = " + std::to_string(euler[c]) +
                                          " on a connected component (expected 2)");
  }
}

Dart PlaneDigraph::next_clockwise(Dart d) const {
  const auto& rot = rotation_[vertex_of(d)];
  std::size_t p = position(d) + 1;
  return rot[p == rot.size() ? 0 : p];
}

Dart PlaneDigraph::prev_clockwise(Dart d) const {
  const auto& rot = rotation_[vertex_of(d)];
  std::size_t p = position(d);
  return rot[p == 0 ? rot.size() - 1 : p - 1];
}

std::vector<std::vector<Dart>> trace_faces(const PlaneDigraph& g) {
  std::vector<std::array<bool, 2>> seen(g.edge_count(), {false, false});
  std::vector<std::vector<Dart>> faces;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (End end : {End::kTail, End::kHead}) {
      if (seen[e][static_cast<int>(end)]) continue;
      std::vector<Dart> face;
      Dart d{e, end};
      while (!seen[d.edge][static_cast<int>(d.end)]) {
        seen[d.edge][static_cast<int>(d.end)] = true;
        face.push_back(d);
        d = g.face_next(d);
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

std::vector<std::uint32_t> component_labels(const PlaneDigraph& g, std::size_t* count) {
  UnionFind uf(g.vertex_count());
  for (const Edge& e : g.edges()) uf.unite(e.tail, e.head);
  std::vector<std::uint32_t> label(g.vertex_count(), kUnset);
  std::vector<std::uint32_t> root_label(g.vertex_count(), kUnset);
  std::uint32_t next = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto r = uf.find(v);
    if (root_label[r] == kUnset) root_label[r] = next++;
    label[v] = root_label[r];
  }
  if (count) *count = next;
  return label;
}

int switch_count(const PlaneDigraph& g, VertexId v) {
  return switch_count_if(g, v, [](EdgeId) { return true; });
}

int switch_count(const PlaneDigraph& g, VertexId v, const std::vector<bool>& present) {
  return switch_count_if(g, v, [&](EdgeId e) { return static_cast<bool>(present[e]); });
}

bool is_bimodal(const PlaneDigraph& g, VertexId v) { return switch_count(g, v) <= 2; }

std::vector<bool> bad_mask(const PlaneDigraph& g) {
  std::vector<bool> bad(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) bad[v] = !is_bimodal(g, v);
  return bad;
}

std::vector<VertexId> bad_vertices(const PlaneDigraph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!is_bimodal(g, v)) out.push_back(v);
  return out;
}

std::vector<Wedge> wedges(const PlaneDigraph& g, VertexId v) {
  auto rot = g.rotation(v);
  const std::size_t deg = rot.size();
  std::vector<Wedge> out;
  if (deg == 0) return out;
  // Start at a dart whose predecessor has the other direction, if any.
  std::size_t s = 0;
  bool uniform = true;
  for (std::size_t i = 0; i < deg; ++i) {
    if (g.direction(rot[i]) != g.direction(rot[(i + deg - 1) % deg])) {
      s = i;
      uniform = false;
      break;
    }
  }
  if (uniform) return {Wedge{v, 0, deg, g.direction(rot[0])}};
  for (std::size_t k = 0; k < deg; ++k) {
    std::size_t i = (s + k) % deg;
    Direction dir = g.direction(rot[i]);
    if (out.empty() || out.back().direction != dir) out.push_back(Wedge{v, i, 0, dir});
    out.back().length += 1;
  }
  return out;
}

std::vector<GoodEdgeSection> good_edge_sections(const PlaneDigraph& g, VertexId v) {
  return good_edge_sections(g, v, bad_mask(g));
}

std::vector<GoodEdgeSection> good_edge_sections(const PlaneDigraph& g, VertexId v, const std::vector<bool>& bad) {
  if (!bad[v]) throw std::invalid_argument("good_edge_sections: vertex " + std::to_string(v) + " is bimodal");
  auto rot = g.rotation(v);
  const std::size_t deg = rot.size();
  auto to_good = [&](std::size_t i) { return !bad[g.opposite(rot[i])]; };
  std::size_t s = deg;
  for (std::size_t i = 0; i < deg; ++i) {
    if (!to_good(i)) {
      s = i;
      break;
    }
  }
  if (s == deg) return {GoodEdgeSection{v, 0, deg, true}};
  std::vector<GoodEdgeSection> out;
  bool open = false;
  for (std::size_t k = 1; k <= deg; ++k) {
    std::size_t i = (s + k) % deg;
    if (to_good(i)) {
      if (!open) out.push_back(GoodEdgeSection{v, i, 0, false});
      out.back().length += 1;
      open = true;
    } else {
      open = false;
    }
  }
  // Report sections in rotation-index order of their first dart.
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.start < b.start; });
  return out;
}

}  // namespace mwbs
