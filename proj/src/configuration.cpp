#include "mwbs/configuration.hpp"

namespace mwbs {

namespace {
constexpr Direction kI = Direction::kIn;
constexpr Direction kO = Direction::kOut;
}  // namespace

Pattern pattern_of(Configuration x) {
  switch (x) {
    case Configuration::kI: return {kI, 1};
    case Configuration::kO: return {kO, 1};
    case Configuration::kIO: return {kI, 2};
    case Configuration::kOI: return {kO, 2};
    case Configuration::kOIO: return {kO, 3};
    case Configuration::kIOI: return {kI, 3};
  }
  return {};
}

Pattern concat(Pattern a, Pattern b) {
  if (a.length == 0) return b;
  if (b.length == 0) return a;
  int len = a.length + b.length - (a.last() == b.first ? 1 : 0);
  return {a.first, static_cast<std::uint8_t>(len)};
}

Pattern push(Pattern a, Direction d) { return concat(a, Pattern{d, 1}); }

bool is_substring(Pattern p, Configuration x) {
  if (p.length == 0) return true;
  Pattern q = pattern_of(x);
  if (p.first == q.first) return p.length <= q.length;
  return p.length + 1 <= q.length;
}

bool compatible(Configuration x, Configuration y) {
  // Every alternating string of length <= 3 sits inside (o,i,o) or (i,o,i).
  return concat(pattern_of(x), pattern_of(y)).length <= 3;
}

bool compatible_wrt(Configuration x, Configuration y, Configuration target) {
  return is_substring(concat(pattern_of(x), pattern_of(y)), target);
}

std::string to_string(Configuration x) {
  Pattern p = pattern_of(x);
  std::string s = "(";
  Direction d = p.first;
  for (int k = 0; k < p.length; ++k) {
    if (k) s += ',';
    s += d == kI ? 'i' : 'o';
    d = d == kI ? kO : kI;
  }
  return s + ")";
}

std::optional<Configuration> parse_configuration(std::string_view text) {
  for (Configuration x : kAllConfigurations)
    if (to_string(x) == text) return x;
  return std::nullopt;
}

bool realizes(Configuration x, std::span<const Direction> run) {
  Pattern p;
  for (Direction d : run) p = push(p, d);
  return is_substring(p, x);
}

}  // namespace mwbs
