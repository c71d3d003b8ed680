#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mwbs {

using BigInt = boost::multiprecision::cpp_int;
using Weight = boost::multiprecision::cpp_rational;

// Accepts "p/q" or "p". Throws std::invalid_argument on anything else.
Weight parse_weight(std::string_view text);

// Always "p/q" in lowest terms, so zero prints as "0/1".
std::string format_weight(const Weight& w);

// Smallest integer >= w.
BigInt ceil(const Weight& w);

// Weights multiplied by the lcm of their denominators.
struct ScaledCosts {
  BigInt scale = 1;
  std::vector<BigInt> costs;
  BigInt total = 0;

  // The costs as int64 if the total stays clear of overflow.
  std::optional<std::vector<std::int64_t>> narrow() const;
  Weight unscale(const BigInt& cost) const { return Weight(cost, scale); }
};

ScaledCosts scale_to_integers(std::span<const Weight> weights);

}  // namespace mwbs
