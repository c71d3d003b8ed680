#include "mwbs/generate.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mwbs/oracle.hpp"

namespace mwbs {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % bound;
}

bool Rng::coin(const Weight& p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  BigInt num = boost::multiprecision::numerator(p), den = boost::multiprecision::denominator(p);
  if (den > std::numeric_limits<std::uint64_t>::max()) throw std::invalid_argument("Rng::coin: denominator too large");
  return below(static_cast<std::uint64_t>(den)) < static_cast<std::uint64_t>(num);
}

namespace {

struct Triangulation {
  std::vector<std::vector<VertexId>> rot;  // clockwise neighbours
  std::vector<std::array<VertexId, 2>> edges;
};

// Faces are stored as walks a -> b -> c; inside the walk the successor of the
// predecessor p at u is the next vertex, so x goes right after p in u's rotation.
Triangulation triangulate(std::size_t n, Rng& rng) {
  Triangulation t;
  t.rot.resize(n);
  auto link = [&](VertexId a, VertexId b) { t.edges.push_back({std::min(a, b), std::max(a, b)}); };
  if (n == 2) {
    t.rot[0] = {1};
    t.rot[1] = {0};
    link(0, 1);
  }
  if (n < 3) return t;
  t.rot[0] = {1, 2};
  t.rot[1] = {0, 2};
  t.rot[2] = {0, 1};
  link(0, 1);
  link(1, 2);
  link(0, 2);
  std::vector<std::array<VertexId, 3>> faces{{0, 1, 2}, {0, 2, 1}};
  auto insert_after = [&](VertexId u, VertexId p, VertexId x) {
    auto& r = t.rot[u];
    r.insert(std::find(r.begin(), r.end(), p) + 1, x);
  };
  for (VertexId x = 3; x < n; ++x) {
    std::size_t f = rng.below(faces.size());
    auto [a, b, c] = faces[f];
    insert_after(b, a, x);
    insert_after(c, b, x);
    insert_after(a, c, x);
    t.rot[x] = {a, c, b};
    link(x, a);
    link(x, b);
    link(x, c);
    faces[f] = {a, b, x};
    faces.push_back({b, c, x});
    faces.push_back({c, a, x});
  }
  return t;
}

std::vector<bool> spanning_tree_plus(const Triangulation& t, const Weight& p, Rng& rng) {
  const std::size_t m = t.edges.size();
  std::vector<EdgeId> order(m);
  std::iota(order.begin(), order.end(), 0u);
  rng.shuffle(order);
  std::vector<VertexId> parent(t.rot.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> keep(m, false);
  for (EdgeId e : order) {
    VertexId a = find(t.edges[e][0]), b = find(t.edges[e][1]);
    if (a != b) {
      parent[a] = b;
      keep[e] = true;
    }
  }
  for (EdgeId e = 0; e < m; ++e)
    if (!keep[e]) keep[e] = rng.coin(p);
  return keep;
}

Weight draw_weight(const Weight& lo, const Weight& hi, Rng& rng) {
  return lo + (hi - lo) * Weight(static_cast<long long>(rng.below(9)), 8);
}

void check_weights(const Weight& lo, const Weight& hi) {
  if (lo <= 0 || hi < lo) throw std::invalid_argument("weight range must satisfy 0 < lo <= hi");
}

}  // namespace

Instance gen_instance(const GenParams& p) {
  if (p.n < 1) throw std::invalid_argument("gen: n must be at least 1");
  if (p.orientation_bias < 0 || p.orientation_bias > 1) throw std::invalid_argument("gen: orientation bias outside [0, 1]");
  if (p.sparse_p < 0 || p.sparse_p > 1) throw std::invalid_argument("gen: sparse probability outside [0, 1]");
  check_weights(p.weight_lo, p.weight_hi);
  Rng rng(p.seed);
  Triangulation t = triangulate(p.n, rng);
  std::vector<bool> keep(t.edges.size(), true);
  if (p.density == Density::kSparse) keep = spanning_tree_plus(t, p.sparse_p, rng);

  std::vector<EdgeId> id(t.edges.size(), 0);
  std::vector<Edge> edges;
  std::vector<Weight> weights;
  for (EdgeId e = 0; e < t.edges.size(); ++e) {
    if (!keep[e]) continue;
    id[e] = static_cast<EdgeId>(edges.size());
    auto [lo, hi] = t.edges[e];
    edges.push_back(rng.coin(p.orientation_bias) ? Edge{lo, hi} : Edge{hi, lo});
  }
  for (std::size_t k = 0; k < edges.size(); ++k) weights.push_back(draw_weight(p.weight_lo, p.weight_hi, rng));

  // Neighbour pairs are unique in a triangulation, so darts can be found by endpoint.
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> by_neighbour(p.n);
  for (EdgeId e = 0; e < t.edges.size(); ++e) {
    if (!keep[e]) continue;
    by_neighbour[t.edges[e][0]].push_back({t.edges[e][1], id[e]});
    by_neighbour[t.edges[e][1]].push_back({t.edges[e][0], id[e]});
  }
  std::vector<std::vector<Dart>> rot(p.n);
  for (VertexId v = 0; v < p.n; ++v) {
    for (VertexId u : t.rot[v]) {
      for (auto [w, e] : by_neighbour[v]) {
        if (w != u) continue;
        rot[v].push_back({e, edges[e].tail == v ? End::kTail : End::kHead});
      }
    }
  }
  return make_instance(PlaneDigraph(p.n, std::move(edges), std::move(rot)), std::move(weights));
}

PlantedInstance gen_planted(const PlantParams& p) {
  if (p.star_size < 4) throw std::invalid_argument("plant: a star needs at least four pendant edges");
  check_weights(p.weight_lo, p.weight_hi);
  GenParams host_params;
  host_params.n = p.n;
  host_params.seed = p.seed;
  host_params.weight_lo = p.weight_lo;
  host_params.weight_hi = p.weight_hi;
  Instance host = gen_instance(host_params);
  const PlaneDigraph& g = host.graph;

  // Fixing one vertex's star never adds switches elsewhere, so one pass suffices.
  std::vector<bool> keep(g.edge_count(), true);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (switch_count(g, v, keep) <= 2) continue;
    std::vector<bool> star(g.edge_count(), false);
    for (const Dart& d : g.rotation(v)) star[d.edge] = keep[d.edge];
    Subgraph sub = edge_subgraph(host, star, true);
    Solution s = star_solve(sub.instance);
    auto mask = s.kept_mask(sub.instance.edge_count());
    for (EdgeId e = 0; e < mask.size(); ++e)
      if (!mask[e]) keep[sub.edge_origin[e]] = false;
  }
  Subgraph bimodal = edge_subgraph(host, keep, false);
  const PlaneDigraph& h = bimodal.instance.graph;

  Rng rng(p.seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<VertexId> order(h.vertex_count());
  std::iota(order.begin(), order.end(), 0u);
  rng.shuffle(order);
  std::vector<bool> blocked(h.vertex_count(), false);
  PlantedInstance out;
  for (VertexId v : order) {
    if (out.centers.size() == p.stars) break;
    if (blocked[v] || h.degree(v) == 0) continue;
    out.centers.push_back(v);
    blocked[v] = true;
    for (const Dart& d : h.rotation(v)) blocked[h.opposite(d)] = true;
  }
  if (out.centers.size() < p.stars) throw std::invalid_argument("plant: host too small for the requested stars");
  std::sort(out.centers.begin(), out.centers.end());

  std::vector<Edge> edges(h.edges().begin(), h.edges().end());
  std::vector<Weight> weights = bimodal.instance.weights;
  std::vector<std::vector<Dart>> rot;
  for (VertexId v = 0; v < h.vertex_count(); ++v) rot.emplace_back(h.rotation(v).begin(), h.rotation(v).end());
  for (VertexId c : out.centers) {
    std::size_t at = rng.below(rot[c].size() + 1);
    std::vector<Dart> block;
    for (std::size_t k = 0; k < p.star_size; ++k) {
      auto leaf = static_cast<VertexId>(rot.size());
      auto e = static_cast<EdgeId>(edges.size());
      bool in = k % 2 == 0;
      edges.push_back(in ? Edge{leaf, c} : Edge{c, leaf});
      weights.push_back(draw_weight(p.weight_lo, p.weight_hi, rng));
      rot.push_back({Dart{e, in ? End::kTail : End::kHead}});
      block.push_back(Dart{e, in ? End::kHead : End::kTail});
    }
    rot[c].insert(rot[c].begin() + static_cast<std::ptrdiff_t>(at), block.begin(), block.end());
  }
  std::size_t n = rot.size();
  out.instance = make_instance(PlaneDigraph(n, std::move(edges), std::move(rot)), std::move(weights));
  return out;
}

}  // namespace mwbs
