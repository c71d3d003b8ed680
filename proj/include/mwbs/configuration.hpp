#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "mwbs/plane_digraph.hpp"

namespace mwbs {

// The six block patterns a vertex may show inside a noose.
enum class Configuration : std::uint8_t { kI = 0, kO, kIO, kOI, kOIO, kIOI };

inline constexpr std::array<Configuration, 6> kAllConfigurations = {
    Configuration::kI, Configuration::kO, Configuration::kIO, Configuration::kOI, Configuration::kOIO, Configuration::kIOI};

// An alternating in/out string after collapsing equal neighbours, stored as
// its first letter and length. Length 0 is the empty pattern.
struct Pattern {
  Direction first = Direction::kIn;
  std::uint8_t length = 0;

  Direction last() const {
    return (length % 2 == 1) ? first : (first == Direction::kIn ? Direction::kOut : Direction::kIn);
  }
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

Pattern pattern_of(Configuration x);
Pattern concat(Pattern a, Pattern b);
Pattern push(Pattern a, Direction d);
bool is_substring(Pattern p, Configuration x);

bool compatible(Configuration x, Configuration y);
bool compatible_wrt(Configuration x, Configuration y, Configuration target);

std::string to_string(Configuration x);  // "(i,o,i)"
std::optional<Configuration> parse_configuration(std::string_view text);

// Whether a run of dart directions, read clockwise, fits the configuration.
bool realizes(Configuration x, std::span<const Direction> run);

}  // namespace mwbs
