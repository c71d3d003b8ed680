#include "mwbs/dp_solver.hpp"

#include <algorithm>

#include "mwbs/oracle.hpp"

namespace mwbs {

std::size_t table_size(std::size_t width) {
  std::size_t n = 1;
  for (std::size_t k = 0; k < width; ++k) n *= 6;
  return n;
}

std::size_t encode_assignment(std::span<const Configuration> assignment) {
  std::size_t idx = 0;
  for (std::size_t k = assignment.size(); k-- > 0;) idx = idx * 6 + static_cast<std::size_t>(assignment[k]);
  return idx;
}

std::vector<Configuration> decode_assignment(std::size_t index, std::size_t width) {
  std::vector<Configuration> out(width);
  for (std::size_t k = 0; k < width; ++k) {
    out[k] = static_cast<Configuration>(index % 6);
    index /= 6;
  }
  return out;
}

namespace detail {

namespace {

struct Place {
  VertexId vertex;
  const BoundaryVertex* a;  // in child 1
  const BoundaryVertex* b;  // in child 2
  const BoundaryVertex* p;  // in parent
  std::uint32_t s1, s2, sp;
};

std::uint32_t stride(const ArcBoundary& ab, const BoundaryVertex* bv) {
  if (!bv) return 0;
  std::uint32_t s = 1;
  for (auto k = bv - ab.mid.data(); k > 0; --k) s *= 6;
  return s;
}

std::vector<Place> places(const ArcBoundary& parent, const ArcBoundary& c1, const ArcBoundary& c2) {
  std::vector<VertexId> all;
  for (const auto& bv : c1.mid) all.push_back(bv.vertex);
  for (const auto& bv : c2.mid) all.push_back(bv.vertex);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<Place> out;
  for (VertexId v : all) {
    Place pl{v, c1.find(v), c2.find(v), parent.find(v), 0, 0, 0};
    pl.s1 = stride(c1, pl.a);
    pl.s2 = stride(c2, pl.b);
    pl.sp = stride(parent, pl.p);
    if (!(pl.a && pl.b) && !pl.p)
      throw std::logic_error("join: vertex " + std::to_string(v) + " lies on one child boundary only but not the parent's");
    if (pl.a && pl.b && pl.p && pl.a->run_start != pl.p->run_start && pl.b->run_start != pl.p->run_start)
      throw std::logic_error("join: child runs at vertex " + std::to_string(v) + " do not start the parent run");
    out.push_back(pl);
  }
  for (const auto& bv : parent.mid)
    if (!c1.find(bv.vertex) && !c2.find(bv.vertex))
      throw std::logic_error("join: parent boundary vertex " + std::to_string(bv.vertex) + " missing from both children");
  return out;
}

bool merges_into(const Place& pl, Configuration x1, Configuration x2, Configuration xp) {
  return pl.a->run_start == pl.p->run_start ? compatible_wrt(x1, x2, xp) : compatible_wrt(x2, x1, xp);
}

}  // namespace

JoinPlan plan_join(const ArcBoundary& parent, const ArcBoundary& child1, const ArcBoundary& child2) {
  JoinPlan plan;
  for (const Place& pl : places(parent, child1, child2)) {
    auto& slot = plan.slots.emplace_back();
    for (Configuration x1 : kAllConfigurations) {
      auto u1 = static_cast<std::uint32_t>(x1);
      if (!pl.b) {
        slot.push_back({u1 * pl.s1, 0, u1 * pl.sp});
        continue;
      }
      if (!pl.a) {
        slot.push_back({0, u1 * pl.s2, u1 * pl.sp});
        continue;
      }
      for (Configuration x2 : kAllConfigurations) {
        auto u2 = static_cast<std::uint32_t>(x2);
        if (!pl.p) {
          if (compatible(x1, x2)) slot.push_back({u1 * pl.s1, u2 * pl.s2, 0});
          continue;
        }
        for (Configuration xp : kAllConfigurations)
          if (merges_into(pl, x1, x2, xp)) slot.push_back({u1 * pl.s1, u2 * pl.s2, static_cast<std::uint32_t>(xp) * pl.sp});
      }
    }
  }
  return plan;
}

void exhaustive_parents(const ArcBoundary& parent, const ArcBoundary& child1, const ArcBoundary& child2,
                        std::size_t i1, std::size_t i2, std::vector<std::size_t>& out) {
  out.assign(1, 0);
  auto digit = [](std::size_t idx, std::uint32_t s) { return static_cast<Configuration>((idx / s) % 6); };
  for (const Place& pl : places(parent, child1, child2)) {
    if (pl.a && pl.b) {
      Configuration x1 = digit(i1, pl.s1), x2 = digit(i2, pl.s2);
      if (!pl.p) {
        if (!compatible(x1, x2)) {
          out.clear();
          return;
        }
        continue;
      }
      std::vector<std::size_t> next;
      for (Configuration xp : kAllConfigurations)
        if (merges_into(pl, x1, x2, xp))
          for (std::size_t base : out) next.push_back(base + static_cast<std::size_t>(xp) * pl.sp);
      out.swap(next);
      if (out.empty()) return;
    } else {
      Configuration x = pl.a ? digit(i1, pl.s1) : digit(i2, pl.s2);
      for (auto& base : out) base += static_cast<std::size_t>(x) * pl.sp;
    }
  }
}

}  // namespace detail

namespace {

bool connected_on_edges(const PlaneDigraph& g) {
  std::size_t count = 0;
  auto label = component_labels(g, &count);
  for (const Edge& e : g.edges())
    if (label[e.tail] != label[g.edge(0).tail]) return false;
  return true;
}

template <class Cost>
std::vector<bool> run_typed(const Instance& inst, std::span<const Cost> costs, const SphereCutDecomposition& d,
                            NodeId root, const DpOptions& opt) {
  DpRun<Cost> run = compute_tables<Cost>(inst.graph, costs, d, root, opt.join_mode, opt.max_width);
  return finish_dp<Cost>(inst.graph, costs, run).kept;
}

}  // namespace

Solution solve_dp(const Instance& inst, const SphereCutDecomposition& d, const DpOptions& options) {
  const PlaneDigraph& g = inst.graph;
  if (g.edge_count() < 2) throw std::invalid_argument("solve_dp needs at least two edges");
  if (!connected_on_edges(g)) throw std::invalid_argument("solve_dp needs a connected graph");
  NodeId root;
  if (options.root_leaf) {
    root = *options.root_leaf;
  } else {
    auto leaf = d.leaf_of(0);
    if (!leaf) throw DecompositionError("edge 0 has no leaf");
    root = *leaf;
  }
  ScaledCosts sc = scale_to_integers(inst.weights);
  std::vector<bool> kept;
  if (auto narrow = sc.narrow()) {
    kept = run_typed<std::int64_t>(inst, *narrow, d, root, options);
  } else {
    kept = run_typed<BigInt>(inst, sc.costs, d, root, options);
  }
  return make_solution(inst, kept, "dp");
}

Solution solve_by_components(const Instance& inst, BuildStrategy strategy) {
  std::vector<bool> kept(inst.edge_count(), true);
  for (const Subgraph& comp : connected_components(inst, true)) {
    Solution part;
    if (star_center(comp.instance.graph)) {
      part = star_solve(comp.instance);
    } else {
      part = solve_dp(comp.instance, build_sphere_cut(comp.instance.graph, strategy));
    }
    auto mask = part.kept_mask(comp.instance.edge_count());
    for (EdgeId e = 0; e < mask.size(); ++e)
      if (!mask[e]) kept[comp.edge_origin[e]] = false;
  }
  return make_solution(inst, kept, "dp");
}

}  // namespace mwbs
