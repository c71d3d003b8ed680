#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mwbs {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

enum class End : std::uint8_t { kTail = 0, kHead = 1 };
enum class Direction : std::uint8_t { kIn = 0, kOut = 1 };

struct Dart {
  EdgeId edge = 0;
  End end = End::kTail;
  friend bool operator==(const Dart&, const Dart&) = default;
};

struct Edge {
  VertexId tail = 0;
  VertexId head = 0;
};

class EmbeddingError : public std::runtime_error {
 public:
  enum class Kind { kMalformed, kDartMismatch, kSelfLoop, kNonpositiveWeight, kEuler };
  EmbeddingError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

inline Dart twin(Dart d) { return {d.edge, d.end == End::kTail ? End::kHead : End::kTail}; }

// Directed multigraph with a clockwise rotation of darts at every vertex.
// Construction checks the rotation system and the sphere Euler formula per
// component; the object is immutable afterwards.
class PlaneDigraph {
 public:
  PlaneDigraph() = default;
  PlaneDigraph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::vector<Dart>> rotation);

  std::size_t vertex_count() const { return rotation_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  // Traced faces plus one for each isolated vertex.
  std::size_t face_count() const { return face_count_; }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Dart> rotation(VertexId v) const { return rotation_[v]; }
  std::size_t degree(VertexId v) const { return rotation_[v].size(); }

  VertexId vertex_of(Dart d) const { return d.end == End::kTail ? edges_[d.edge].tail : edges_[d.edge].head; }
  VertexId opposite(Dart d) const { return vertex_of(twin(d)); }
  static Direction direction(Dart d) { return d.end == End::kTail ? Direction::kOut : Direction::kIn; }

  // Index of d inside rotation(vertex_of(d)).
  std::size_t position(Dart d) const { return position_[d.edge][static_cast<int>(d.end)]; }
  Dart next_clockwise(Dart d) const;
  Dart prev_clockwise(Dart d) const;
  // Face walk successor: leave along d, then turn to the clockwise successor at the far end.
  Dart face_next(Dart d) const { return next_clockwise(twin(d)); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<std::array<std::uint32_t, 2>> position_;
  std::size_t face_count_ = 0;
};

// Faces as cyclic dart sequences under face_next.
std::vector<std::vector<Dart>> trace_faces(const PlaneDigraph& g);

// Edge-connected components; isolated vertices get their own singleton component.
std::vector<std::uint32_t> component_labels(const PlaneDigraph& g, std::size_t* count = nullptr);

template <class Present>
int switch_count_if(const PlaneDigraph& g, VertexId v, Present&& present) {
  auto rot = g.rotation(v);
  int switches = 0;
  int first = -1, last = -1;
  for (const Dart& d : rot) {
    if (!present(d.edge)) continue;
    int dir = static_cast<int>(PlaneDigraph::direction(d));
    if (first < 0) first = dir;
    else if (dir != last) ++switches;
    last = dir;
  }
  if (first >= 0 && first != last) ++switches;
  return switches;
}

int switch_count(const PlaneDigraph& g, VertexId v);
int switch_count(const PlaneDigraph& g, VertexId v, const std::vector<bool>& present);
bool is_bimodal(const PlaneDigraph& g, VertexId v);
std::vector<bool> bad_mask(const PlaneDigraph& g);
std::vector<VertexId> bad_vertices(const PlaneDigraph& g);

struct Wedge {
  VertexId vertex = 0;
  std::size_t start = 0;  // rotation index of the first dart
  std::size_t length = 0;
  Direction direction = Direction::kIn;
};

std::vector<Wedge> wedges(const PlaneDigraph& g, VertexId v);

struct GoodEdgeSection {
  VertexId vertex = 0;
  std::size_t start = 0;
  std::size_t length = 0;
  bool full_rotation = false;  // vertex has no bad neighbour

  Dart dart(const PlaneDigraph& g, std::size_t k) const {
    auto rot = g.rotation(vertex);
    return rot[(start + k) % rot.size()];
  }
};

// Throws std::invalid_argument if v is bimodal.
std::vector<GoodEdgeSection> good_edge_sections(const PlaneDigraph& g, VertexId v);
std::vector<GoodEdgeSection> good_edge_sections(const PlaneDigraph& g, VertexId v, const std::vector<bool>& bad);

}  // namespace mwbs
