#include "mwbs/weight.hpp"

#include <limits>
#include <stdexcept>

namespace mwbs {

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  if (!s.empty() && s[0] == '-') i = 1;
  if (i == s.size()) throw std::invalid_argument("malformed weight '" + std::string(whole) + "'");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9')
      throw std::invalid_argument("malformed weight '" + std::string(whole) + "'");
  }
  return BigInt(std::string(s));
}

}  // namespace

Weight parse_weight(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Weight(parse_integer(text, text));
  BigInt p = parse_integer(text.substr(0, slash), text);
  BigInt q = parse_integer(text.substr(slash + 1), text);
  if (q <= 0) throw std::invalid_argument("weight denominator must be positive in '" + std::string(text) + "'");
  return Weight(p, q);
}

std::string format_weight(const Weight& w) {
  return boost::multiprecision::numerator(w).str() + "/" + boost::multiprecision::denominator(w).str();
}

BigInt ceil(const Weight& w) {
  BigInt p = boost::multiprecision::numerator(w);
  BigInt q = boost::multiprecision::denominator(w);
  BigInt r = p / q;  // truncates toward zero
  if (r * q < p) r += 1;
  return r;
}

std::optional<std::vector<std::int64_t>> ScaledCosts::narrow() const {
  if (total >= (BigInt(1) << 62)) return std::nullopt;
  std::vector<std::int64_t> out;
  out.reserve(costs.size());
  for (const auto& c : costs) out.push_back(c.convert_to<std::int64_t>());
  return out;
}

ScaledCosts scale_to_integers(std::span<const Weight> weights) {
  ScaledCosts sc;
  for (const auto& w : weights) {
    BigInt d = boost::multiprecision::denominator(w);
    sc.scale = sc.scale / boost::multiprecision::gcd(sc.scale, d) * d;
  }
  sc.costs.reserve(weights.size());
  for (const auto& w : weights) {
    BigInt c = boost::multiprecision::numerator(w) * (sc.scale / boost::multiprecision::denominator(w));
    sc.total += c;
    sc.costs.push_back(std::move(c));
  }
  return sc;
}

}  // namespace mwbs
