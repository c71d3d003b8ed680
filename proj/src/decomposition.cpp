#include "mwbs/decomposition.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace mwbs {

namespace {

constexpr std::uint32_t kNone = 0xffffffffu;

std::string arc_name(NodeId a, NodeId b) {
  return "arc (" + std::to_string(a) + "," + std::to_string(b) + ")";
}

struct TreeView {
  std::vector<std::vector<NodeId>> adj;
  std::vector<std::optional<EdgeId>> leaf_edge;
  std::vector<NodeId> leaf_of_edge;
};

bool check_structure(const PlaneDigraph& g, const SphereCutDecomposition& d, TreeView& tv,
                     std::vector<Violation>& out) {
  const std::size_t n = d.node_count;
  const std::size_t m = g.edge_count();
  std::size_t before = out.size();
  tv.adj.assign(n, {});
  tv.leaf_edge.assign(n, std::nullopt);
  tv.leaf_of_edge.assign(m, kNone);

  bool arcs_ok = true;
  for (auto [a, b] : d.arcs) {
    if (a >= n || b >= n || a == b) {
      out.push_back({ViolationKind::kTreeShape, arc_name(a, b) + " is not an arc between two distinct nodes"});
      arcs_ok = false;
      continue;
    }
    tv.adj[a].push_back(b);
    tv.adj[b].push_back(a);
  }
  if (m == 0) {
    if (n != 0) out.push_back({ViolationKind::kLeafBijection, "graph has no edges but the tree has nodes"});
    return out.size() == before;
  }
  if (n == 0 || d.arcs.size() + 1 != n) {
    out.push_back({ViolationKind::kTreeShape, "a tree on " + std::to_string(n) + " nodes needs " +
                                                  std::to_string(n == 0 ? 0 : n - 1) + " arcs, found " +
                                                  std::to_string(d.arcs.size())});
    arcs_ok = false;
  }
  if (arcs_ok && n > 0) {
    std::vector<bool> seen(n, false);
    std::vector<NodeId> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      NodeId x = stack.back();
      stack.pop_back();
      for (NodeId y : tv.adj[x])
        if (!seen[y]) {
          seen[y] = true;
          ++reached;
          stack.push_back(y);
        }
    }
    if (reached != n) out.push_back({ViolationKind::kTreeShape, "tree is disconnected"});
  }

  for (auto [node, e] : d.leaf_map) {
    if (node >= n) {
      out.push_back({ViolationKind::kLeafBijection, "leaf " + std::to_string(node) + " is not a tree node"});
      continue;
    }
    if (e >= m) {
      out.push_back({ViolationKind::kLeafBijection,
                     "leaf " + std::to_string(node) + " maps to nonexistent edge " + std::to_string(e)});
      continue;
    }
    if (tv.leaf_of_edge[e] != kNone) {
      out.push_back({ViolationKind::kLeafBijection, "edge " + std::to_string(e) + " has two leaves"});
      continue;
    }
    std::size_t want = n == 1 ? 0 : 1;
    if (tv.adj[node].size() != want)
      out.push_back({ViolationKind::kLeafBijection,
                     "leaf " + std::to_string(node) + " has degree " + std::to_string(tv.adj[node].size())});
    tv.leaf_of_edge[e] = node;
    tv.leaf_edge[node] = e;
  }
  for (EdgeId e = 0; e < m; ++e)
    if (tv.leaf_of_edge[e] == kNone)
      out.push_back({ViolationKind::kLeafBijection, "edge " + std::to_string(e) + " has no leaf"});
  for (NodeId x = 0; x < n; ++x) {
    if (tv.leaf_edge[x]) continue;
    if (tv.adj[x].size() == 1)
      out.push_back({ViolationKind::kLeafBijection, "leaf " + std::to_string(x) + " carries no edge"});
    else if (tv.adj[x].size() != 3)
      out.push_back({ViolationKind::kInternalDegree,
                     "internal node " + std::to_string(x) + " has degree " + std::to_string(tv.adj[x].size())});
  }
  return out.size() == before;
}

struct Rooting {
  std::vector<NodeId> parent;
  std::vector<NodeId> preorder;
  std::vector<std::uint32_t> tin, tout;
};

Rooting root_tree(const TreeView& tv, NodeId root) {
  const std::size_t n = tv.adj.size();
  Rooting r;
  r.parent.assign(n, kNone);
  r.tin.assign(n, 0);
  r.tout.assign(n, 0);
  r.parent[root] = root;
  std::vector<std::pair<NodeId, std::size_t>> stack{{root, 0}};
  r.tin[root] = 0;
  r.preorder.push_back(root);
  while (!stack.empty()) {
    auto& [x, i] = stack.back();
    if (i < tv.adj[x].size()) {
      NodeId y = tv.adj[x][i++];
      if (y == r.parent[x]) continue;
      r.parent[y] = x;
      r.tin[y] = static_cast<std::uint32_t>(r.preorder.size());
      r.preorder.push_back(y);
      stack.push_back({y, 0});
    } else {
      r.tout[x] = static_cast<std::uint32_t>(r.preorder.size());
      stack.pop_back();
    }
  }
  return r;
}

std::vector<VertexId> trace_noose(const PlaneDigraph& g, const std::vector<BoundaryVertex>& mid,
                                  const std::function<bool(EdgeId)>& inside) {
  if (mid.empty()) return {};
  std::map<VertexId, VertexId> succ;
  const std::size_t limit = 2 * g.edge_count() + 2;
  for (const auto& bv : mid) {
    auto rot = g.rotation(bv.vertex);
    Dart cur = rot[(bv.run_start + bv.run_length) % rot.size()];
    bool closed = false;
    for (std::size_t step = 0; step < limit; ++step) {
      Dart next = g.face_next(cur);
      if (inside(next.edge)) {
        succ[bv.vertex] = g.vertex_of(next);
        closed = true;
        break;
      }
      cur = next;
    }
    if (!closed) return {};
  }
  std::vector<VertexId> order{mid.front().vertex};
  std::set<VertexId> seen{order.front()};
  while (true) {
    auto it = succ.find(order.back());
    if (it == succ.end()) return {};
    if (it->second == order.front()) break;
    if (!seen.insert(it->second).second) return {};
    order.push_back(it->second);
  }
  if (order.size() != mid.size()) return {};
  return order;
}

// Middle set of the subtree below x from inside-dart counts; vertices whose
// inside darts are not one cyclic run are reported in broken.
ArcBoundary boundary_from_counts(const PlaneDigraph& g, const TreeView& tv, const Rooting& r, NodeId x,
                                 std::vector<std::uint32_t>& count, std::vector<VertexId>& broken) {
  auto inside = [&](EdgeId e) {
    auto t = r.tin[tv.leaf_of_edge[e]];
    return t >= r.tin[x] && t < r.tout[x];
  };
  std::vector<VertexId> touched;
  for (std::uint32_t t = r.tin[x]; t < r.tout[x]; ++t) {
    const auto& le = tv.leaf_edge[r.preorder[t]];
    if (!le) continue;
    for (VertexId v : {g.edge(*le).tail, g.edge(*le).head}) {
      if (count[v]++ == 0) touched.push_back(v);
    }
  }
  std::sort(touched.begin(), touched.end());
  ArcBoundary b;
  b.inside_node = x;
  b.outside_node = r.parent[x];
  for (VertexId v : touched) {
    std::size_t deg = g.degree(v);
    if (count[v] < deg) {
      auto rot = g.rotation(v);
      std::size_t transitions = 0, start = 0;
      for (std::size_t i = 0; i < deg; ++i) {
        bool cur = inside(rot[i].edge);
        bool prev = inside(rot[(i + deg - 1) % deg].edge);
        if (cur != prev) {
          ++transitions;
          if (cur) start = i;
        }
      }
      if (transitions != 2) broken.push_back(v);
      b.mid.push_back({v, start, count[v]});
    }
    count[v] = 0;
  }
  if (broken.empty()) b.noose_order = trace_noose(g, b.mid, inside);
  return b;
}

// Middle set as V(inside edges) ∩ V(outside edges), computed from scratch.
std::vector<VertexId> mid_by_intersection(const PlaneDigraph& g, const TreeView& tv, const Rooting& r, NodeId x) {
  std::vector<bool> in_side(g.vertex_count(), false), out_side(g.vertex_count(), false);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto t = r.tin[tv.leaf_of_edge[e]];
    auto& side = (t >= r.tin[x] && t < r.tout[x]) ? in_side : out_side;
    side[g.edge(e).tail] = true;
    side[g.edge(e).head] = true;
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (in_side[v] && out_side[v]) out.push_back(v);
  return out;
}

}  // namespace

std::optional<NodeId> SphereCutDecomposition::leaf_of(EdgeId e) const {
  for (auto [node, edge] : leaf_map)
    if (edge == e) return node;
  return std::nullopt;
}

const BoundaryVertex* ArcBoundary::find(VertexId v) const {
  auto it = std::lower_bound(mid.begin(), mid.end(), v,
                             [](const BoundaryVertex& b, VertexId x) { return b.vertex < x; });
  return (it != mid.end() && it->vertex == v) ? &*it : nullptr;
}

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::kLeafBijection: return "leaf-bijection";
    case ViolationKind::kInternalDegree: return "internal-degree";
    case ViolationKind::kTreeShape: return "tree-shape";
    case ViolationKind::kMidSet: return "mid-set";
    case ViolationKind::kContiguity: return "contiguity";
    case ViolationKind::kDeclaredWidth: return "declared-width";
  }
  return "unknown";
}

ValidationReport validate_decomposition(const PlaneDigraph& g, const SphereCutDecomposition& d) {
  ValidationReport rep;
  TreeView tv;
  if (!check_structure(g, d, tv, rep.violations)) return rep;
  if (g.edge_count() == 1) {
    rep.width = 2;
  } else if (g.edge_count() >= 2) {
    NodeId root = d.leaf_map.begin()->first;
    Rooting r = root_tree(tv, root);
    std::vector<std::uint32_t> count(g.vertex_count(), 0);
    for (NodeId x : r.preorder) {
      if (x == root) continue;
      std::vector<VertexId> broken;
      ArcBoundary b = boundary_from_counts(g, tv, r, x, count, broken);
      std::vector<VertexId> by_counts;
      for (const auto& bv : b.mid) by_counts.push_back(bv.vertex);
      if (by_counts != mid_by_intersection(g, tv, r, x))
        rep.violations.push_back({ViolationKind::kMidSet, arc_name(x, r.parent[x]) + ": middle sets disagree"});
      for (VertexId v : broken)
        rep.violations.push_back({ViolationKind::kContiguity, arc_name(x, r.parent[x]) + ": darts of vertex " +
                                                                  std::to_string(v) + " are not contiguous"});
      rep.width = std::max(rep.width, b.mid.size());
    }
  }
  if (d.declared_width && *d.declared_width != rep.width)
    rep.violations.push_back({ViolationKind::kDeclaredWidth, "declared width " + std::to_string(*d.declared_width) +
                                                                 " but computed " + std::to_string(rep.width)});
  return rep;
}

RootedDecomposition root_decomposition(const PlaneDigraph& g, const SphereCutDecomposition& d, NodeId root_leaf) {
  TreeView tv;
  std::vector<Violation> problems;
  if (!check_structure(g, d, tv, problems)) throw DecompositionError("invalid decomposition: " + problems.front().detail);
  if (root_leaf >= d.node_count || !tv.leaf_edge[root_leaf])
    throw DecompositionError("root " + std::to_string(root_leaf) + " is not a leaf");
  Rooting r = root_tree(tv, root_leaf);
  RootedDecomposition rd;
  rd.root_leaf = root_leaf;
  rd.root_edge = *tv.leaf_edge[root_leaf];
  rd.parent = r.parent;
  rd.leaf_edge = tv.leaf_edge;
  rd.children.assign(d.node_count, {});
  rd.boundary.assign(d.node_count, {});
  for (NodeId x : r.preorder)
    if (x != root_leaf) rd.children[r.parent[x]].push_back(x);
  std::vector<std::uint32_t> count(g.vertex_count(), 0);
  for (auto it = r.preorder.rbegin(); it != r.preorder.rend(); ++it) {
    NodeId x = *it;
    if (x == root_leaf) continue;
    rd.postorder.push_back(x);
    std::vector<VertexId> broken;
    rd.boundary[x] = boundary_from_counts(g, tv, r, x, count, broken);
    if (!broken.empty())
      throw DecompositionError(arc_name(x, r.parent[x]) + ": darts of vertex " + std::to_string(broken.front()) +
                               " are not contiguous");
    rd.width = std::max(rd.width, rd.boundary[x].mid.size());
  }
  return rd;
}

ArcBoundary arc_boundary(const PlaneDigraph& g, const SphereCutDecomposition& d, std::size_t arc, NodeId root_leaf) {
  if (arc >= d.arcs.size()) throw std::out_of_range("arc index out of range");
  RootedDecomposition rd = root_decomposition(g, d, root_leaf);
  auto [a, b] = d.arcs[arc];
  return rd.parent[a] == b ? rd.boundary[a] : rd.boundary[b];
}

bool is_contiguous_at(const PlaneDigraph& g, VertexId v, const std::vector<bool>& inside) {
  auto rot = g.rotation(v);
  std::size_t transitions = 0;
  for (std::size_t i = 0; i < rot.size(); ++i)
    if (inside[rot[i].edge] != inside[rot[(i + rot.size() - 1) % rot.size()].edge]) ++transitions;
  return transitions <= 2;
}

std::vector<VertexId> mid_set(const PlaneDigraph& g, const std::vector<bool>& inside) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    bool has_in = false, has_out = false;
    for (const Dart& d : g.rotation(v)) (inside[d.edge] ? has_in : has_out) = true;
    if (has_in && has_out) out.push_back(v);
  }
  return out;
}

namespace {

// Grows an edge set one edge at a time while every vertex keeps its chosen
// darts in one cyclic run.
class Sweep {
 public:
  Sweep(const PlaneDigraph& g, const std::vector<bool>* allowed)
      : g_(g), allowed_(allowed), in_(g.edge_count(), false), count_(g.vertex_count(), 0), start_(g.vertex_count(), 0) {}

  bool addable(EdgeId e) const {
    if (in_[e] || (allowed_ && !(*allowed_)[e])) return false;
    return fits({e, End::kTail}) && fits({e, End::kHead});
  }

  std::size_t mid_after(EdgeId e) const {
    std::size_t m = mid_;
    for (VertexId v : {g_.edge(e).tail, g_.edge(e).head}) {
      std::size_t deg = g_.degree(v), c = count_[v];
      bool before = c > 0 && c < deg;
      bool after = c + 1 < deg;
      m = m + (after ? 1 : 0) - (before ? 1 : 0);
    }
    return m;
  }

  void add(EdgeId e) {
    Undo u{e, {}};
    int k = 0;
    for (End end : {End::kTail, End::kHead}) {
      Dart d{e, end};
      VertexId v = g_.vertex_of(d);
      u.saved[k++] = {v, count_[v], start_[v]};
      std::size_t deg = g_.degree(v), c = count_[v], p = g_.position(d);
      bool before = c > 0 && c < deg;
      if (c == 0) start_[v] = static_cast<std::uint32_t>(p);
      else if (p != (start_[v] + c) % deg) start_[v] = static_cast<std::uint32_t>(p);
      count_[v] = static_cast<std::uint32_t>(c + 1);
      bool after = c + 1 < deg;
      mid_ = mid_ + (after ? 1 : 0) - (before ? 1 : 0);
    }
    in_[e] = true;
    undo_.push_back(u);
  }

  void undo() {
    Undo u = undo_.back();
    undo_.pop_back();
    in_[u.edge] = false;
    for (int k = 1; k >= 0; --k) {
      auto [v, c, s] = u.saved[k];
      std::size_t deg = g_.degree(v);
      bool now = count_[v] > 0 && count_[v] < deg;
      bool then = c > 0 && c < deg;
      mid_ = mid_ - (now ? 1 : 0) + (then ? 1 : 0);
      count_[v] = c;
      start_[v] = s;
    }
  }

  std::size_t mid() const { return mid_; }

 private:
  bool fits(Dart d) const {
    VertexId v = g_.vertex_of(d);
    std::size_t c = count_[v];
    if (c == 0) return true;
    std::size_t deg = g_.degree(v), p = g_.position(d);
    return p == (start_[v] + c) % deg || p == (start_[v] + deg - 1) % deg;
  }

  struct Saved {
    VertexId v;
    std::uint32_t count, start;
  };
  struct Undo {
    EdgeId edge;
    std::array<Saved, 2> saved;
  };

  const PlaneDigraph& g_;
  const std::vector<bool>* allowed_;
  std::vector<bool> in_;
  std::vector<std::uint32_t> count_, start_;
  std::vector<Undo> undo_;
  std::size_t mid_ = 0;
};

struct SweepResult {
  std::vector<EdgeId> order;
  std::size_t width = 0;
};

// Depth-first search over contiguity-preserving orders of the allowed edges,
// cheapest middle set first.
std::optional<SweepResult> sweep_from(const PlaneDigraph& g, const std::vector<bool>* allowed, EdgeId seed,
                                      std::size_t budget, std::vector<EdgeId>* stuck) {
  std::size_t target = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!allowed || (*allowed)[e]) ++target;
  Sweep s(g, allowed);
  s.add(seed);
  std::vector<EdgeId> order{seed};
  struct Frame {
    std::vector<EdgeId> cand;
    std::size_t next = 0;
  };
  std::vector<Frame> frames;
  bool expand = true;
  std::size_t steps = 0;
  while (order.size() < target) {
    if (expand) {
      Frame f;
      std::vector<std::pair<std::size_t, EdgeId>> keyed;
      for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (s.addable(e)) keyed.push_back({s.mid_after(e), e});
      std::sort(keyed.begin(), keyed.end());
      for (auto& [k, e] : keyed) f.cand.push_back(e);
      frames.push_back(std::move(f));
    }
    Frame& top = frames.back();
    if (top.next < top.cand.size()) {
      EdgeId e = top.cand[top.next++];
      s.add(e);
      order.push_back(e);
      expand = true;
      if (++steps > budget) {
        if (stuck) *stuck = order;
        return std::nullopt;
      }
    } else {
      if (stuck && (stuck->empty() || order.size() > stuck->size())) *stuck = order;
      frames.pop_back();
      if (frames.empty()) return std::nullopt;
      s.undo();
      order.pop_back();
      expand = false;
    }
  }
  SweepResult res;
  res.order = order;
  // Width of the caterpillar: every prefix plus every single-edge leaf arc.
  std::vector<bool> prefix(g.edge_count(), false);
  Sweep replay(g, nullptr);
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    replay.add(order[k]);
    res.width = std::max(res.width, replay.mid());
  }
  for (EdgeId e : order) {
    std::size_t leaf_mid = (g.degree(g.edge(e).tail) > 1) + (g.degree(g.edge(e).head) > 1);
    res.width = std::max(res.width, leaf_mid);
  }
  return res;
}

std::vector<EdgeId> seeds_for(const PlaneDigraph& g, const std::vector<bool>* allowed, std::size_t cap) {
  std::vector<EdgeId> all;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!allowed || (*allowed)[e]) all.push_back(e);
  if (all.size() <= cap) return all;
  std::vector<EdgeId> out;
  for (std::size_t k = 0; k < cap; ++k) out.push_back(all[k * all.size() / cap]);
  return out;
}

struct RootedBuilder {
  std::vector<std::array<int, 2>> kids;
  std::vector<int> edge;
  int leaf(EdgeId e) {
    kids.push_back({-1, -1});
    edge.push_back(static_cast<int>(e));
    return static_cast<int>(kids.size()) - 1;
  }
  int join(int a, int b) {
    kids.push_back({a, b});
    edge.push_back(-1);
    return static_cast<int>(kids.size()) - 1;
  }
};

SphereCutDecomposition unroot(const RootedBuilder& rb, int root) {
  SphereCutDecomposition d;
  if (rb.edge[root] >= 0) {
    d.node_count = 1;
    d.leaf_map[0] = static_cast<EdgeId>(rb.edge[root]);
    return d;
  }
  std::vector<int> id(rb.kids.size(), -1);
  std::vector<int> stack{rb.kids[root][0], rb.kids[root][1]};
  std::vector<int> order;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    id[x] = static_cast<int>(order.size());
    order.push_back(x);
    if (rb.edge[x] < 0) {
      stack.push_back(rb.kids[x][1]);
      stack.push_back(rb.kids[x][0]);
    }
  }
  d.node_count = order.size();
  for (int x : order) {
    if (rb.edge[x] >= 0) {
      d.leaf_map[static_cast<NodeId>(id[x])] = static_cast<EdgeId>(rb.edge[x]);
    } else {
      for (int c : rb.kids[x]) d.arcs.push_back({static_cast<NodeId>(id[x]), static_cast<NodeId>(id[c])});
    }
  }
  d.arcs.push_back({static_cast<NodeId>(id[rb.kids[root][0]]), static_cast<NodeId>(id[rb.kids[root][1]])});
  return d;
}

int chain(RootedBuilder& rb, std::span<const EdgeId> order) {
  int cur = rb.leaf(order[0]);
  for (std::size_t k = 1; k < order.size(); ++k) cur = rb.join(cur, rb.leaf(order[k]));
  return cur;
}

constexpr std::size_t kSeedCap = 16;

std::size_t sweep_budget(std::size_t m) { return 64 * m + 4096; }

int bisect(const PlaneDigraph& g, std::vector<EdgeId> part, RootedBuilder& rb) {
  if (part.size() == 1) return rb.leaf(part[0]);
  if (part.size() == 2) return rb.join(rb.leaf(part[0]), rb.leaf(part[1]));
  std::vector<bool> allowed(g.edge_count(), false);
  for (EdgeId e : part) allowed[e] = true;

  struct Score {
    std::size_t imbalance, noose;
    std::vector<VertexId> mid;
    EdgeId seed;
    bool operator<(const Score& o) const {
      return std::tie(imbalance, noose, mid, seed) < std::tie(o.imbalance, o.noose, o.mid, o.seed);
    }
  };
  std::optional<Score> best;
  std::vector<EdgeId> best_a;
  std::optional<std::vector<EdgeId>> any_order;
  for (EdgeId seed : seeds_for(g, &allowed, kSeedCap)) {
    auto res = sweep_from(g, &allowed, seed, sweep_budget(part.size()), nullptr);
    if (!res) continue;
    if (!any_order) any_order = res->order;
    std::vector<bool> a(g.edge_count(), false), b = allowed;
    for (std::size_t k = 0; k + 1 < res->order.size(); ++k) {
      EdgeId e = res->order[k];
      a[e] = true;
      b[e] = false;
      bool ok = true;
      for (EdgeId f : part) {
        if (!b[f]) continue;
        if (!is_contiguous_at(g, g.edge(f).tail, b) || !is_contiguous_at(g, g.edge(f).head, b)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      std::size_t na = k + 1, nb = part.size() - na;
      auto mid_a = mid_set(g, a);
      std::size_t noose = std::max(mid_a.size(), mid_set(g, b).size());
      Score sc{na > nb ? na - nb : nb - na, noose, mid_a, seed};
      if (!best || sc < *best) {
        best = sc;
        best_a.assign(res->order.begin(), res->order.begin() + static_cast<std::ptrdiff_t>(na));
      }
    }
  }
  if (!best) {
    if (!any_order) throw DecompositionError("no contiguous sweep of a part with " + std::to_string(part.size()) + " edges");
    return chain(rb, *any_order);
  }
  std::vector<bool> in_a(g.edge_count(), false);
  for (EdgeId e : best_a) in_a[e] = true;
  std::vector<EdgeId> rest;
  for (EdgeId e : part)
    if (!in_a[e]) rest.push_back(e);
  std::sort(best_a.begin(), best_a.end());
  int left = bisect(g, best_a, rb);
  int right = bisect(g, rest, rb);
  return rb.join(left, right);
}

}  // namespace

std::vector<EdgeId> greedy_sweep_order(const PlaneDigraph& g) {
  if (g.edge_count() == 0) return {};
  std::optional<SweepResult> best;
  std::vector<EdgeId> stuck;
  for (EdgeId seed : seeds_for(g, nullptr, g.edge_count() <= 64 ? g.edge_count() : kSeedCap)) {
    auto res = sweep_from(g, nullptr, seed, sweep_budget(g.edge_count()), &stuck);
    if (res && (!best || res->width < best->width)) best = std::move(res);
  }
  if (!best) {
    std::ostringstream msg;
    msg << "greedy sweep found no contiguous edge order; longest prefix reached:";
    for (EdgeId e : stuck) msg << ' ' << e;
    throw DecompositionError(msg.str());
  }
  return best->order;
}

SphereCutDecomposition caterpillar(std::span<const EdgeId> order) {
  if (order.empty()) return {};
  RootedBuilder rb;
  int root = chain(rb, order);
  return unroot(rb, root);
}

SphereCutDecomposition build_sphere_cut(const PlaneDigraph& g, BuildStrategy strategy) {
  if (g.edge_count() == 0) throw DecompositionError("graph has no edges");
  std::size_t comps = 0;
  auto label = component_labels(g, &comps);
  std::set<std::uint32_t> used;
  for (const Edge& e : g.edges()) used.insert(label[e.tail]);
  if (used.size() != 1) throw DecompositionError("graph must be connected");

  if (strategy == BuildStrategy::kRecursiveBisection) {
    try {
      RootedBuilder rb;
      std::vector<EdgeId> all(g.edge_count());
      for (EdgeId e = 0; e < g.edge_count(); ++e) all[e] = e;
      SphereCutDecomposition d = unroot(rb, bisect(g, all, rb));
      auto rep = validate_decomposition(g, d);
      if (rep.ok()) {
        d.declared_width = rep.width;
        return d;
      }
    } catch (const DecompositionError&) {
      // fall through to the sweep
    }
  }
  auto order = greedy_sweep_order(g);
  SphereCutDecomposition d = caterpillar(order);
  auto rep = validate_decomposition(g, d);
  if (!rep.ok()) throw DecompositionError("sweep produced an invalid decomposition: " + rep.violations.front().detail);
  d.declared_width = rep.width;
  return d;
}

RadialGraph build_radial_graph(const PlaneDigraph& g) {
  auto faces = trace_faces(g);
  const std::size_t nv = g.vertex_count();
  std::size_t isolated = 0;
  for (VertexId v = 0; v < nv; ++v) isolated += g.degree(v) == 0;
  RadialGraph rg;
  rg.vertex_nodes = nv;
  rg.face_nodes = faces.size() + isolated;
  // One radial edge per dart: the corner just before the dart belongs to the
  // face the dart starts.
  auto rid = [](Dart d) { return static_cast<EdgeId>(2 * d.edge + static_cast<EdgeId>(d.end)); };
  std::vector<Edge> edges(2 * g.edge_count());
  std::vector<std::vector<Dart>> rot(nv + rg.face_nodes);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (auto it = faces[f].rbegin(); it != faces[f].rend(); ++it) {
      Dart d = *it;
      edges[rid(d)] = {g.vertex_of(d), static_cast<VertexId>(nv + f)};
      rot[nv + f].push_back({rid(d), End::kHead});
    }
  }
  for (VertexId v = 0; v < nv; ++v)
    for (const Dart& d : g.rotation(v)) rot[v].push_back({rid(d), End::kTail});
  rg.graph = PlaneDigraph(nv + rg.face_nodes, std::move(edges), std::move(rot));
  return rg;
}

nlohmann::json decomposition_to_json(const SphereCutDecomposition& d) {
  nlohmann::json arcs = nlohmann::json::array();
  for (auto [a, b] : d.arcs) arcs.push_back({a, b});
  nlohmann::json leaves = nlohmann::json::object();
  for (auto [node, e] : d.leaf_map) leaves[std::to_string(node)] = e;
  nlohmann::json doc{{"nodes", d.node_count}, {"arcs", arcs}, {"leaf_map", leaves}};
  if (d.declared_width) doc["width"] = *d.declared_width;
  return doc;
}

SphereCutDecomposition decomposition_from_json(const nlohmann::json& doc) {
  auto bad = [](const std::string& w) { return DecompositionError("malformed decomposition document: " + w); };
  if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("arcs") || !doc.contains("leaf_map"))
    throw bad("expected nodes, arcs and leaf_map");
  SphereCutDecomposition d;
  try {
    d.node_count = doc.at("nodes").get<std::size_t>();
    for (const auto& a : doc.at("arcs")) {
      if (!a.is_array() || a.size() != 2) throw bad("arcs must be pairs");
      d.arcs.push_back({a[0].get<NodeId>(), a[1].get<NodeId>()});
    }
    for (const auto& [key, val] : doc.at("leaf_map").items()) {
      std::size_t used = 0;
      unsigned long node = std::stoul(key, &used);
      if (used != key.size()) throw bad("leaf_map key '" + key + "'");
      d.leaf_map[static_cast<NodeId>(node)] = val.get<EdgeId>();
    }
    if (doc.contains("width")) d.declared_width = doc.at("width").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw bad(e.what());
  } catch (const std::logic_error& e) {
    throw bad(e.what());
  }
  return d;
}

}  // namespace mwbs
