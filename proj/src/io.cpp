#include "mwbs/io.hpp"

#include <algorithm>

namespace mwbs {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw EmbeddingError(EmbeddingError::Kind::kMalformed, what);
}

std::uint32_t as_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<long long>() > 0x7fffffffLL)
    malformed(std::string(what) + " must be a nonnegative integer");
  return static_cast<std::uint32_t>(j.get<long long>());
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) malformed(std::string("missing field '") + key + "'");
  return obj.at(key);
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(std::string("not valid JSON: ") + e.what());
  }
}

Instance decode_instance(std::string_view text, bool allow_zero) {
  return instance_from_json(parse_json(text), allow_zero);
}

Instance instance_from_json(const Json& doc, bool allow_zero) {
  std::size_t n = as_index(field(doc, "vertices"), "vertices");
  const Json& edges_j = field(doc, "edges");
  const Json& rot_j = field(doc, "rotation");
  if (!edges_j.is_array()) malformed("'edges' must be an array");
  if (!rot_j.is_array()) malformed("'rotation' must be an array");
  const std::size_t m = edges_j.size();
  std::vector<Edge> edges(m);
  std::vector<Weight> weights(m);
  std::vector<bool> seen(m, false);
  for (const Json& ej : edges_j) {
    std::uint32_t id = as_index(field(ej, "id"), "edge id");
    if (id >= m || seen[id]) malformed("edge ids must be dense 0..m-1 without repeats");
    seen[id] = true;
    edges[id] = {as_index(field(ej, "tail"), "tail"), as_index(field(ej, "head"), "head")};
    const Json& wj = field(ej, "weight");
    if (!wj.is_string()) malformed("weight must be a \"p/q\" string");
    try {
      weights[id] = parse_weight(wj.get<std::string>());
    } catch (const std::exception& e) {
      malformed(e.what());
    }
  }
  std::vector<std::vector<Dart>> rotation;
  rotation.reserve(rot_j.size());
  for (const Json& rv : rot_j) {
    if (!rv.is_array()) malformed("each rotation entry must be an array");
    auto& out = rotation.emplace_back();
    for (const Json& dj : rv) {
      Dart d;
      d.edge = as_index(field(dj, "edge"), "dart edge");
      const Json& endj = field(dj, "end");
      if (endj == "tail") d.end = End::kTail;
      else if (endj == "head") d.end = End::kHead;
      else malformed("dart end must be \"tail\" or \"head\"");
      out.push_back(d);
    }
  }
  return make_instance(PlaneDigraph(n, std::move(edges), std::move(rotation)), std::move(weights), allow_zero);
}

Json instance_to_json(const Instance& inst) {
  const PlaneDigraph& g = inst.graph;
  Json edges = Json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    edges.push_back({{"id", e}, {"tail", g.edge(e).tail}, {"head", g.edge(e).head},
                     {"weight", format_weight(inst.weights[e])}});
  }
  Json rotation = Json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Json r = Json::array();
    for (const Dart& d : g.rotation(v)) r.push_back({{"edge", d.edge}, {"end", d.end == End::kTail ? "tail" : "head"}});
    rotation.push_back(std::move(r));
  }
  return Json{{"vertices", g.vertex_count()}, {"edges", std::move(edges)}, {"rotation", std::move(rotation)}};
}

std::string encode_instance(const Instance& inst) { return instance_to_json(inst).dump(); }

Json solution_to_json(const Instance& inst, const Solution& sol) {
  auto cert = certificate(inst.graph, sol.kept_mask(inst.edge_count()));
  return Json{{"kept", sol.kept_edges},
              {"kept_weight", format_weight(sol.kept_weight)},
              {"deleted_weight", format_weight(sol.deleted_weight)},
              {"method", sol.method},
              {"certificate", cert}};
}

Solution solution_from_json(const Json& doc) {
  Solution s;
  const Json& kept = field(doc, "kept");
  if (!kept.is_array()) malformed("'kept' must be an array");
  for (const Json& e : kept) s.kept_edges.push_back(as_index(e, "kept edge"));
  std::sort(s.kept_edges.begin(), s.kept_edges.end());
  try {
    s.kept_weight = parse_weight(field(doc, "kept_weight").get<std::string>());
    s.deleted_weight = parse_weight(field(doc, "deleted_weight").get<std::string>());
  } catch (const Json::exception& e) {
    malformed(e.what());
  } catch (const std::invalid_argument& e) {
    malformed(e.what());
  }
  if (doc.contains("method") && doc["method"].is_string()) s.method = doc["method"].get<std::string>();
  return s;
}

}  // namespace mwbs
