#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mwbs/configuration.hpp"
#include "mwbs/instance.hpp"

namespace mwbs::testing {

// Configurations as plain letter strings: "i", "o", "io", "oi", "oio", "ioi".
std::string letters(Configuration x);

// Rewrites "ii" -> "i" and "oo" -> "o" until nothing changes.
std::string collapse(std::string s);

bool string_compatible(Configuration x, Configuration y);
bool string_compatible_wrt(Configuration x, Configuration y, Configuration target);

// Counts maximal cyclic runs of equal letters; bimodal means at most two.
bool naive_bimodal(const std::string& cyclic);

// Direction letters of v's kept darts in rotation order.
std::string kept_letters(const PlaneDigraph& g, VertexId v, const std::vector<bool>& kept);

bool naive_bimodal_subgraph(const PlaneDigraph& g, const std::vector<bool>& kept);

// Cheapest deletion within a linear run of darts so the kept letters collapse
// to a substring of x, by trying every kept subset.
Weight section_minimum(const std::string& run, const std::vector<Weight>& weights, Configuration x);

// Brute-force DP entries for one arc: for every assignment over mid (base-6,
// digit k for mid[k]) the least deleted cost among inside subsets that keep
// all-inside vertices bimodal and make each mid vertex's kept inside run
// collapse into its assigned configuration; nullopt where no subset works.
std::vector<std::optional<std::int64_t>> assignment_minima(const PlaneDigraph& g, const std::vector<std::int64_t>& cost,
                                                           const std::vector<bool>& inside,
                                                           const std::vector<VertexId>& mid);

// Largest undirected distance between two vertices of the same component.
std::size_t diameter(const PlaneDigraph& g);

}  // namespace mwbs::testing
