#include "mwbs/kernel.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "mwbs/dp_solver.hpp"
#include "mwbs/io.hpp"
#include "work_graph.hpp"

namespace mwbs {

using detail::WorkGraph;

std::vector<bool> ReducedInstance::lift(std::size_t input_edges, const std::vector<bool>& reduced_kept) const {
  std::vector<bool> kept(input_edges, false);
  for (EdgeId e : credited_edges) kept[e] = true;
  for (EdgeId e = 0; e < reduced_kept.size(); ++e)
    if (reduced_kept[e]) kept[edge_origin[e]] = true;
  return kept;
}

ReducedInstance reduce_to_simple(const Instance& inst) {
  WorkGraph w = WorkGraph::from(inst);
  std::vector<VertexId> origin(inst.graph.vertex_count());
  std::iota(origin.begin(), origin.end(), 0u);
  ReducedInstance r;
  while (true) {
    std::optional<VertexId> isolated;
    for (VertexId v = 0; v < w.rot.size() && !isolated; ++v)
      if (w.vertex_alive[v] && w.rot[v].empty()) isolated = v;
    if (isolated) {
      w.vertex_alive[*isolated] = false;
      r.trace.push_back({1, *isolated, {}});
      continue;
    }
    std::vector<bool> good(w.rot.size(), false);
    for (VertexId v = 0; v < w.rot.size(); ++v) good[v] = w.vertex_alive[v] && w.switch_count(v) <= 2;

    std::optional<EdgeId> between_good;
    for (EdgeId e = 0; e < w.edges.size() && !between_good; ++e)
      if (w.edge_alive[e] && good[w.edges[e].tail] && good[w.edges[e].head]) between_good = e;
    if (between_good) {
      EdgeId e = *between_good;
      r.base_kept_weight += w.weights[e];
      r.target_shift += w.weights[e];
      r.credited_edges.push_back(e);
      w.remove_edge(e);
      r.trace.push_back({2, e, {}});
      continue;
    }

    std::optional<VertexId> to_split;
    for (VertexId v = 0; v < w.rot.size() && !to_split; ++v)
      if (good[v] && w.rot[v].size() >= 2) to_split = v;
    if (!to_split) break;
    VertexId v = *to_split;
    RuleRecord rec{3, v, {}};
    const std::vector<Dart> darts = w.rot[v];
    for (Dart d : darts) {
      VertexId x = w.add_vertex();
      origin.push_back(origin[v]);
      if (d.end == End::kTail) w.edges[d.edge].tail = x;
      else w.edges[d.edge].head = x;
      w.rot[x] = {d};
      rec.copies.push_back(x);
    }
    w.rot[v].clear();
    r.trace.push_back(std::move(rec));
  }
  auto c = w.compact(true, false);
  r.instance = std::move(c.instance);
  r.edge_origin = std::move(c.edge_origin);
  for (VertexId wv : c.vertex_origin) r.vertex_origin.push_back(origin[wv]);
  std::sort(r.credited_edges.begin(), r.credited_edges.end());
  return r;
}

SwitchPlacement optimal_switches(const Instance& inst, VertexId v, const GoodEdgeSection& section, Configuration x) {
  if (section.vertex != v) throw std::invalid_argument("optimal_switches: section belongs to another vertex");
  const PlaneDigraph& g = inst.graph;
  const std::size_t k = section.length;
  std::vector<Weight> in_pre(k + 1, 0), out_pre(k + 1, 0);
  for (std::size_t p = 0; p < k; ++p) {
    Dart d = section.dart(g, p);
    bool is_in = g.direction(d) == Direction::kIn;
    in_pre[p + 1] = in_pre[p] + (is_in ? inst.weights[d.edge] : Weight(0));
    out_pre[p + 1] = out_pre[p] + (is_in ? Weight(0) : inst.weights[d.edge]);
  }
  Pattern pat = pattern_of(x);
  std::vector<Direction> letter;
  for (Direction d = pat.first; letter.size() < pat.length; d = d == Direction::kIn ? Direction::kOut : Direction::kIn)
    letter.push_back(d);
  auto block = [&](std::size_t a, std::size_t b, Direction l) {
    return l == Direction::kIn ? out_pre[b] - out_pre[a] : in_pre[b] - in_pre[a];
  };

  SwitchPlacement best;
  bool have = false;
  auto consider = [&](std::vector<std::size_t> cuts) {
    Weight c = 0;
    std::size_t a = 0;
    for (std::size_t j = 0; j < letter.size(); ++j) {
      std::size_t b = j < cuts.size() ? cuts[j] : k;
      c += block(a, b, letter[j]);
      a = b;
    }
    if (!have || c < best.deleted_weight) {
      have = true;
      best.deleted_weight = c;
      best.boundaries = std::move(cuts);
    }
  };
  if (letter.size() == 1) {
    consider({});
  } else if (letter.size() == 2) {
    for (std::size_t b1 = 0; b1 <= k; ++b1) consider({b1});
  } else {
    for (std::size_t b1 = 0; b1 <= k; ++b1)
      for (std::size_t b2 = b1; b2 <= k; ++b2) consider({b1, b2});
  }
  std::size_t j = 0;
  for (std::size_t p = 0; p < k; ++p) {
    while (j < best.boundaries.size() && best.boundaries[j] <= p) ++j;
    Dart d = section.dart(g, p);
    if (g.direction(d) != letter[j]) best.deletion.push_back(d.edge);
  }
  std::sort(best.deletion.begin(), best.deletion.end());
  return best;
}

SectionPartition partition_section(const Instance& inst, VertexId v, const GoodEdgeSection& section) {
  const PlaneDigraph& g = inst.graph;
  const std::size_t k = section.length;
  std::set<std::size_t> cuts;
  for (Configuration x : kAllConfigurations)
    for (std::size_t b : optimal_switches(inst, v, section, x).boundaries)
      if (b > 0 && b < k) cuts.insert(b);
  SectionPartition part;
  part.section = section;
  part.cut_positions.assign(cuts.begin(), cuts.end());
  std::size_t a = 0;
  for (std::size_t c = 0; c <= part.cut_positions.size(); ++c) {
    std::size_t b = c < part.cut_positions.size() ? part.cut_positions[c] : k;
    part.blocks.push_back({a, b - a});
    std::vector<EdgeId> in, out;
    for (std::size_t p = a; p < b; ++p) {
      Dart d = section.dart(g, p);
      (g.direction(d) == Direction::kIn ? in : out).push_back(d.edge);
    }
    auto& ids = part.block_classes.emplace_back();
    for (auto* cls : {&in, &out}) {
      if (cls->empty()) continue;
      ids.push_back(part.classes.size());
      part.classes.push_back(std::move(*cls));
    }
    a = b;
  }
  return part;
}

CutInstance to_cut_instance(const Instance& inst) {
  ReducedInstance r = reduce_to_simple(inst);
  CutInstance c;
  c.instance = std::move(r.instance);
  c.base_kept_weight = r.base_kept_weight;
  const PlaneDigraph& g = c.instance.graph;
  auto bad = bad_mask(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (bad[g.edge(e).tail] && bad[g.edge(e).head]) {
      c.pairs.push_back({c.classes.size()});
      c.classes.push_back({e});
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!bad[v]) continue;
    for (const auto& sec : good_edge_sections(g, v, bad)) {
      SectionPartition part = partition_section(c.instance, v, sec);
      for (const auto& ids : part.block_classes) {
        auto& pair = c.pairs.emplace_back();
        for (std::size_t ci : ids) {
          pair.push_back(c.classes.size());
          c.classes.push_back(part.classes[ci]);
        }
      }
    }
  }
  std::vector<int> cover(g.edge_count(), 0);
  for (const auto& cls : c.classes)
    for (EdgeId e : cls) ++cover[e];
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (cover[e] != 1) throw std::logic_error("to_cut_instance: edge " + std::to_string(e) + " not covered exactly once");
  return c;
}

namespace {

struct Located {
  VertexId vertex = 0;
  std::size_t start = 0, length = 0;  // section in the current rotation of vertex
  bool full = false;
  Direction direction = Direction::kIn;
  std::vector<std::size_t> offsets;  // per class edge, offset in the section
};

class Shrinker {
 public:
  explicit Shrinker(const CutInstance& cut) : w_(WorkGraph::from(cut.instance)), bad_(bad_mask(cut.instance.graph)) {}

  WorkGraph& graph() { return w_; }

  bool is_bad(VertexId v) const { return v < bad_.size() && bad_[v]; }

  Located locate(const std::vector<EdgeId>& cls) const {
    auto fail = [](const std::string& why) {
      return std::invalid_argument("cut instance lacks section structure: " + why);
    };
    Located loc;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      EdgeId e = cls[i];
      VertexId t = w_.edges[e].tail, h = w_.edges[e].head;
      if (is_bad(t) == is_bad(h)) throw fail("edge " + std::to_string(e) + " does not join a bad and a good vertex");
      VertexId v = is_bad(t) ? t : h;
      Direction dir = v == t ? Direction::kOut : Direction::kIn;
      if (i == 0) {
        loc.vertex = v;
        loc.direction = dir;
      } else if (v != loc.vertex || dir != loc.direction) {
        throw fail("class mixes vertices or directions");
      }
    }
    const auto& rot = w_.rot[loc.vertex];
    const std::size_t deg = rot.size();
    auto to_good = [&](std::size_t i) { return !is_bad(w_.opposite(rot[i])); };
    auto pos_of = [&](EdgeId e) {
      for (std::size_t i = 0; i < deg; ++i)
        if (rot[i].edge == e) return i;
      throw std::logic_error("shrink: dart missing");
    };
    std::size_t p0 = pos_of(cls[0]);
    bool all_good = true;
    for (std::size_t i = 0; i < deg; ++i) all_good = all_good && to_good(i);
    if (all_good) {
      loc.full = true;
      loc.start = 0;
      loc.length = deg;
    } else {
      std::size_t s = p0;
      while (to_good((s + deg - 1) % deg)) s = (s + deg - 1) % deg;
      std::size_t len = 0;
      while (to_good((s + len) % deg)) ++len;
      loc.start = s;
      loc.length = len;
    }
    for (EdgeId e : cls) {
      std::size_t off = (pos_of(e) + deg - loc.start) % deg;
      if (off >= loc.length) throw fail("class spans more than one section");
      loc.offsets.push_back(off);
    }
    return loc;
  }

  // First offset of the run if the offsets form one run, else nullopt.
  static std::optional<std::size_t> run_start(std::vector<std::size_t> offs, const Located& loc) {
    std::sort(offs.begin(), offs.end());
    offs.erase(std::unique(offs.begin(), offs.end()), offs.end());
    if (!loc.full) {
      if (offs.back() - offs.front() + 1 == offs.size()) return offs.front();
      return std::nullopt;
    }
    const std::size_t deg = loc.length;
    if (offs.size() == deg) return 0;
    std::optional<std::size_t> first;
    for (std::size_t o : offs) {
      if (!std::binary_search(offs.begin(), offs.end(), (o + deg - 1) % deg)) {
        if (first) return std::nullopt;
        first = o;
      }
    }
    return first;
  }

  void drop_edge(EdgeId e, VertexId bad_end) {
    VertexId u = w_.edges[e].tail == bad_end ? w_.edges[e].head : w_.edges[e].tail;
    w_.remove_edge(e);
    if (!w_.rot[u].empty()) throw std::invalid_argument("cut instance lacks section structure: good endpoint of degree > 1");
    w_.vertex_alive[u] = false;
  }

  // Contract a class whose edges sit consecutively.
  void contract(std::vector<EdgeId>& cls) {
    Located loc = locate(cls);
    auto first = run_start(loc.offsets, loc);
    if (!first) return;
    const std::size_t span = loc.full ? loc.length : loc.length + 1;
    std::size_t keep = 0;
    std::size_t best = span;
    Weight total = 0;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      total += w_.weights[cls[i]];
      std::size_t rank = (loc.offsets[i] + span - *first) % span;
      if (rank < best) {
        best = rank;
        keep = i;
      }
    }
    EdgeId kept = cls[keep];
    for (EdgeId e : cls)
      if (e != kept) drop_edge(e, loc.vertex);
    w_.weights[kept] = total;
    cls = {kept};
  }

  // Gadget replacement for an interleaved pair of classes; returns whether the gadget was inserted.
  bool gadget(std::vector<EdgeId>& a, std::vector<EdgeId>& b) {
    Located la = locate(a), lb = locate(b);
    if (la.vertex != lb.vertex || la.start != lb.start || la.direction == lb.direction)
      throw std::invalid_argument("cut instance lacks section structure: paired classes disagree");
    std::vector<std::size_t> uni = la.offsets;
    uni.insert(uni.end(), lb.offsets.begin(), lb.offsets.end());
    auto first = run_start(uni, la);
    if (!first) return false;
    if (run_start(la.offsets, la) && run_start(lb.offsets, lb)) return false;

    auto& cin = la.direction == Direction::kIn ? a : b;
    auto& cout = la.direction == Direction::kIn ? b : a;
    Weight w_in = 0, w_out = 0;
    for (EdgeId e : cin) w_in += w_.weights[e];
    for (EdgeId e : cout) w_out += w_.weights[e];

    const VertexId v = la.vertex;
    const std::size_t deg = w_.rot[v].size();
    const std::size_t s = (la.start + *first) % deg;
    std::rotate(w_.rot[v].begin(), w_.rot[v].begin() + static_cast<std::ptrdiff_t>(s), w_.rot[v].end());
    const std::size_t len = cin.size() + cout.size();
    for (EdgeId e : cin) drop_edge(e, v);
    for (EdgeId e : cout) drop_edge(e, v);
    // The vacated run was the prefix; drop_edge already erased its darts, so
    // the gadget goes in front of what remains.
    std::vector<Dart> fresh;
    const Weight weights[4] = {Weight(0), w_out, w_in, Weight(0)};
    std::vector<EdgeId> ids;
    for (int k = 0; k < 4; ++k) {
      VertexId x = w_.add_vertex();
      bool in = k % 2 == 0;
      EdgeId e = in ? w_.add_edge(x, v, weights[k]) : w_.add_edge(v, x, weights[k]);
      w_.rot[x] = {Dart{e, in ? End::kTail : End::kHead}};
      fresh.push_back(Dart{e, in ? End::kHead : End::kTail});
      ids.push_back(e);
    }
    (void)len;
    w_.rot[v].insert(w_.rot[v].begin(), fresh.begin(), fresh.end());
    cin = {ids[0], ids[2]};
    cout = {ids[1], ids[3]};
    return true;
  }

 private:
  WorkGraph w_;
  std::vector<bool> bad_;
};

}  // namespace

CutInstance shrink_cut_instance(const CutInstance& cut) {
  Shrinker sh(cut);
  std::vector<std::vector<EdgeId>> classes = cut.classes;
  for (auto& cls : classes)
    if (cls.size() >= 2) sh.locate(cls);
  for (auto& cls : classes)
    if (cls.size() >= 2) sh.contract(cls);
  for (const auto& pair : cut.pairs) {
    if (pair.size() != 2) continue;
    sh.gadget(classes[pair[0]], classes[pair[1]]);
  }
  auto c = sh.graph().compact(true, true);
  CutInstance out;
  out.instance = std::move(c.instance);
  out.pairs = cut.pairs;
  out.base_kept_weight = cut.base_kept_weight;
  for (const auto& cls : classes) {
    auto& nc = out.classes.emplace_back();
    for (EdgeId e : cls) nc.push_back(c.edge_index[e]);
    std::sort(nc.begin(), nc.end());
  }
  return out;
}

Solution solve_subexponential(const Instance& inst) {
  ReducedInstance r = reduce_to_simple(inst);
  Solution rs = solve_by_components(r.instance);
  auto kept = r.lift(inst.edge_count(), rs.kept_mask(r.instance.edge_count()));
  return make_solution(inst, kept, "subexp");
}

nlohmann::json reduced_to_json(const ReducedInstance& r) {
  nlohmann::json doc = instance_to_json(r.instance);
  doc["base_kept_weight"] = format_weight(r.base_kept_weight);
  doc["target_shift"] = format_weight(r.target_shift);
  doc["edge_origin"] = r.edge_origin;
  doc["vertex_origin"] = r.vertex_origin;
  doc["credited_edges"] = r.credited_edges;
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& rec : r.trace) {
    nlohmann::json j{{"rule", rec.rule}, {"subject", rec.subject}};
    if (rec.rule == 3) j["copies"] = rec.copies;
    trace.push_back(std::move(j));
  }
  doc["trace"] = std::move(trace);
  return doc;
}

nlohmann::json cut_instance_to_json(const CutInstance& c) {
  nlohmann::json doc = instance_to_json(c.instance);
  doc["classes"] = c.classes;
  doc["pairs"] = c.pairs;
  doc["base_kept_weight"] = format_weight(c.base_kept_weight);
  return doc;
}

CutInstance cut_instance_from_json(const nlohmann::json& doc) {
  CutInstance c;
  c.instance = instance_from_json(doc, true);
  auto malformed = [](const std::string& w) { return EmbeddingError(EmbeddingError::Kind::kMalformed, w); };
  if (!doc.contains("classes") || !doc.contains("pairs") || !doc.contains("base_kept_weight"))
    throw malformed("cut instance needs classes, pairs and base_kept_weight");
  try {
    c.classes = doc.at("classes").get<std::vector<std::vector<EdgeId>>>();
    c.pairs = doc.at("pairs").get<std::vector<std::vector<std::size_t>>>();
    c.base_kept_weight = parse_weight(doc.at("base_kept_weight").get<std::string>());
  } catch (const std::exception& e) {
    throw malformed(e.what());
  }
  std::vector<int> cover(c.instance.edge_count(), 0);
  for (const auto& cls : c.classes)
    for (EdgeId e : cls) {
      if (e >= cover.size()) throw malformed("class names unknown edge " + std::to_string(e));
      ++cover[e];
    }
  for (int k : cover)
    if (k != 1) throw malformed("classes must partition the edges");
  std::vector<int> used(c.classes.size(), 0);
  for (const auto& p : c.pairs) {
    if (p.empty() || p.size() > 2) throw malformed("pairs hold one or two classes");
    for (std::size_t i : p) {
      if (i >= used.size()) throw malformed("pair names unknown class");
      ++used[i];
    }
  }
  for (int k : used)
    if (k != 1) throw malformed("pairs must partition the classes");
  return c;
}

}  // namespace mwbs
