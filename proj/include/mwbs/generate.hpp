#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mwbs/instance.hpp"

namespace mwbs {

// Seeded source whose draws do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound), bound > 0
  bool coin(const Weight& p);                // true with probability p in [0, 1]
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

enum class Density { kTriangulation, kSparse };

struct GenParams {
  std::size_t n = 10;
  std::uint64_t seed = 1;
  Weight orientation_bias{1, 2};  // chance an edge points from lower to higher id
  Weight weight_lo = 1, weight_hi = 4;
  Density density = Density::kTriangulation;
  Weight sparse_p{1, 2};  // sparse: chance a non-tree edge survives
};

// Random triangulation by face insertion, optionally thinned to a spanning
// tree plus random extra edges, then oriented and weighted. Weights are
// lo + (hi - lo) * k / 8 for k in 0..8. Throws std::invalid_argument on bad params.
Instance gen_instance(const GenParams& p);

struct PlantParams {
  std::size_t n = 200;
  std::uint64_t seed = 1;
  std::size_t stars = 4;      // planted bad vertices
  std::size_t star_size = 4;  // pendant edges per planted star, alternating in/out
  Weight weight_lo = 1, weight_hi = 4;
};

struct PlantedInstance {
  Instance instance;
  std::vector<VertexId> centers;  // ascending; exactly the bad vertices
};

// A triangulation made bimodal by deleting, around each bad vertex, the
// cheapest edge set that fixes it; then alternating pendant stars are planted
// at pairwise non-adjacent vertices.
PlantedInstance gen_planted(const PlantParams& p);

}  // namespace mwbs
