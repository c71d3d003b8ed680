#include <set>

#include "corpus.hpp"
#include "doctest.h"
#include "mwbs/io.hpp"
#include "mwbs/plane_digraph.hpp"
#include "oracles.hpp"

using namespace mwbs;
using namespace mwbs::testing;

namespace {

constexpr End T = End::kTail;
constexpr End H = End::kHead;
constexpr Direction I = Direction::kIn;
constexpr Direction O = Direction::kOut;

Instance triangle() {
  // a->b->c->a
  return build(3, {{0, 1}, {1, 2}, {2, 0}}, {{{0, T}, {2, H}}, {{1, T}, {0, H}}, {{2, T}, {1, H}}});
}

// K5 with each vertex listing its neighbours in increasing order.
std::string k5_document() {
  Json edges = Json::array(), rot = Json::array();
  int id = 0;
  std::vector<std::vector<Json>> darts(5);
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b, ++id) {
      edges.push_back({{"id", id}, {"tail", a}, {"head", b}, {"weight", "1/1"}});
      darts[a].push_back({{"edge", id}, {"end", "tail"}});
      darts[b].push_back({{"edge", id}, {"end", "head"}});
    }
  }
  for (auto& d : darts) rot.push_back(d);
  return Json{{"vertices", 5}, {"edges", edges}, {"rotation", rot}}.dump();
}

}  // namespace

TEST_CASE("single vertex has one face") {
  PlaneDigraph g(1, {}, {{}});
  CHECK(g.vertex_count() == 1);
  CHECK(g.face_count() == 1);
}

TEST_CASE("directed triangle has two faces") {
  CHECK(triangle().graph.face_count() == 2);
}

TEST_CASE("K5 fails the Euler check") {
  try {
    decode_instance(k5_document());
    FAIL("K5 accepted");
  } catch (const EmbeddingError& e) {
    CHECK(e.kind() == EmbeddingError::Kind::kEuler);
  }
}

TEST_CASE("malformed embeddings are rejected by kind") {
  auto kind_of = [](auto&& make) {
    try {
      make();
    } catch (const EmbeddingError& e) {
      return e.kind();
    }
    return EmbeddingError::Kind::kMalformed;
  };
  CHECK(kind_of([] { PlaneDigraph(2, {{0, 0}}, {{{0, T}, {0, H}}, {}}); }) == EmbeddingError::Kind::kSelfLoop);
  CHECK(kind_of([] { PlaneDigraph(2, {{0, 1}}, {{{0, T}}, {{0, T}}}); }) == EmbeddingError::Kind::kDartMismatch);
  CHECK(kind_of([] {
          make_instance(PlaneDigraph(2, {{0, 1}}, {{{0, T}}, {{0, H}}}), {Weight(0)});
        }) == EmbeddingError::Kind::kNonpositiveWeight);
  CHECK_THROWS_AS(decode_instance("{\"vertices\": 1}"), EmbeddingError);
}

TEST_CASE("switch counts and wedges of a star centre") {
  CHECK(switch_count(make_star({I, O, I, O}, {}).graph, 0) == 4);
  CHECK(switch_count(make_star({I, I, O, O}, {}).graph, 0) == 2);
  CHECK(switch_count(make_star({I, I, I, I, I}, {}).graph, 0) == 0);

  auto w4 = wedges(make_star({I, O, I, O}, {}).graph, 0);
  CHECK(w4.size() == 4);
  for (const auto& w : w4) CHECK(w.length == 1);
  auto w2 = wedges(make_star({I, I, O, O}, {}).graph, 0);
  REQUIRE(w2.size() == 2);
  CHECK(w2[0].length == 2);
  CHECK(w2[1].length == 2);
  auto w1 = wedges(make_star({O, O, O}, {}).graph, 0);
  REQUIRE(w1.size() == 1);
  CHECK(w1[0].direction == O);
  CHECK(w1[0].length == 3);
  CHECK(wedges(PlaneDigraph(1, {}, {{}}), 0).empty());
}

TEST_CASE("good edge-sections split at bad neighbours") {
  // Centre 0 with darts to g, g, B, g, B; each B is made bad by its own alternating leaves.
  std::vector<Edge> edges;
  std::vector<std::vector<Dart>> rot(1);
  auto add_leaf = [&](VertexId centre, bool in) {
    auto leaf = static_cast<VertexId>(rot.size());
    rot.emplace_back();
    auto e = static_cast<EdgeId>(edges.size());
    edges.push_back(in ? Edge{leaf, centre} : Edge{centre, leaf});
    rot[centre].push_back({e, in ? H : T});
    rot[leaf].push_back({e, in ? T : H});
    return leaf;
  };
  add_leaf(0, true);
  add_leaf(0, false);
  VertexId b1 = add_leaf(0, true);
  add_leaf(0, false);
  VertexId b2 = add_leaf(0, true);
  for (VertexId b : {b1, b2})
    for (bool in : {true, false, true}) add_leaf(b, in);
  Instance inst = build(rot.size(), edges, rot);
  const PlaneDigraph& g = inst.graph;
  REQUIRE(!is_bimodal(g, 0));
  REQUIRE(!is_bimodal(g, b1));
  REQUIRE(!is_bimodal(g, b2));
  auto secs = good_edge_sections(g, 0);
  REQUIRE(secs.size() == 2);
  CHECK(secs[0].start == 0);
  CHECK(secs[0].length == 2);
  CHECK(secs[1].start == 3);
  CHECK(secs[1].length == 1);
  CHECK_FALSE(secs[0].full_rotation);
  CHECK(good_edge_sections(g, b1).size() == 1);
  CHECK_THROWS_AS(good_edge_sections(g, 1), std::invalid_argument);
}

TEST_CASE("bad vertex whose neighbours are all bad has no sections") {
  // Two vertices joined by four parallel edges alternating direction.
  std::vector<Edge> edges{{0, 1}, {1, 0}, {0, 1}, {1, 0}};
  std::vector<std::vector<Dart>> rot{{{0, T}, {1, H}, {2, T}, {3, H}}, {{3, T}, {2, H}, {1, T}, {0, H}}};
  Instance inst = build(2, edges, rot);
  REQUIRE(bad_vertices(inst.graph).size() == 2);
  CHECK(good_edge_sections(inst.graph, 0).empty());
}

TEST_CASE("bad vertex without bad neighbours has one cyclic section") {
  Instance star = make_star({I, O, I, O, I}, {});
  auto secs = good_edge_sections(star.graph, 0);
  REQUIRE(secs.size() == 1);
  CHECK(secs[0].full_rotation);
  CHECK(secs[0].length == 5);
}

TEST_CASE("encode and decode round-trip") {
  for (const auto& entry : oracle_corpus(40, 7)) {
    std::string text = encode_instance(entry.instance);
    CHECK(encode_instance(decode_instance(text)) == text);
  }
  // Key order and whitespace are normalised.
  std::string loose = "{ \"rotation\": [[{\"end\":\"tail\",\"edge\":0}],[{\"edge\":0,\"end\":\"head\"}]],"
                      " \"vertices\": 2, \"edges\": [{\"weight\":\"2/4\",\"tail\":0,\"id\":0,\"head\":1}] }";
  std::string canon = encode_instance(decode_instance(loose));
  CHECK(canon.find(' ') == std::string::npos);
  CHECK(canon.find("\"1/2\"") != std::string::npos);
  CHECK(encode_instance(decode_instance(canon)) == canon);
}

TEST_CASE("switch counts agree with a run-counting check on random subgraphs") {
  Rng rng(11);
  for (const auto& entry : oracle_corpus(60, 3)) {
    const PlaneDigraph& g = entry.instance.graph;
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<bool> kept(g.edge_count());
      for (std::size_t e = 0; e < kept.size(); ++e) kept[e] = rng.below(3) != 0;
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        int s = switch_count(g, v, kept);
        CHECK(s % 2 == 0);
        CHECK((s <= 2) == naive_bimodal(kept_letters(g, v, kept)));
      }
    }
  }
}

TEST_CASE("wedges partition darts and alternate") {
  for (const auto& entry : oracle_corpus(60, 5)) {
    const PlaneDigraph& g = entry.instance.graph;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto ws = wedges(g, v);
      std::size_t total = 0;
      for (std::size_t k = 0; k < ws.size(); ++k) {
        total += ws[k].length;
        if (ws.size() > 1) CHECK(ws[k].direction != ws[(k + 1) % ws.size()].direction);
      }
      CHECK(total == g.degree(v));
      int s = switch_count(g, v);
      CHECK(ws.size() == (s >= 2 ? static_cast<std::size_t>(s) : (g.degree(v) ? 1u : 0u)));
    }
  }
}

TEST_CASE("face tracing covers each dart once") {
  for (const auto& entry : oracle_corpus(60, 9)) {
    const PlaneDigraph& g = entry.instance.graph;
    auto faces = trace_faces(g);
    CHECK(faces.size() == g.face_count());
    std::size_t darts = 0;
    std::set<std::pair<EdgeId, int>> seen;
    for (const auto& f : faces)
      for (const Dart& d : f) {
        ++darts;
        seen.insert({d.edge, static_cast<int>(d.end)});
      }
    CHECK(darts == 2 * g.edge_count());
    CHECK(seen.size() == darts);
    CHECK(static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count()) + static_cast<long>(g.face_count()) ==
          2);
  }
}

TEST_CASE("section counts stay within b - 1 when a bad neighbour exists") {
  GenParams p;
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    p.seed = seed;
    p.n = 6 + seed % 10;
    const PlaneDigraph& g = gen_instance(p).graph;
    auto bad = bad_mask(g);
    std::size_t b = bad_vertices(g).size();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!bad[v]) continue;
      bool bad_neighbour = false;
      for (const Dart& d : g.rotation(v)) bad_neighbour = bad_neighbour || bad[g.opposite(d)];
      auto secs = good_edge_sections(g, v, bad);
      if (bad_neighbour) CHECK(secs.size() <= b - 1);
      else CHECK(secs.size() == 1);
    }
  }
}
