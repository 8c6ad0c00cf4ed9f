#include "sepenum/weights.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace sepenum {

using boost::multiprecision::cpp_int;

WeightedGraph::WeightedGraph(Graph g)
    : graph(std::move(g)), weights(static_cast<std::size_t>(graph.order()), Weight(1)) {}

WeightedGraph::WeightedGraph(Graph g, std::vector<Weight> w)
    : graph(std::move(g)), weights(std::move(w)) {
  if (static_cast<int>(weights.size()) != graph.order())
    throw std::invalid_argument("weights length differs from vertex count");
  for (const auto& x : weights)
    if (x < 0) throw std::invalid_argument("negative weight");
}

Weight WeightedGraph::total(const VertexSet& s) const {
  Weight t = 0;
  s.for_each([&](Vertex v) { t += weights[v]; });
  return t;
}

ScaledWeights::ScaledWeights(const std::vector<Weight>& weights) : denominator(1) {
  for (const auto& w : weights) {
    cpp_int d = boost::multiprecision::denominator(w);
    denominator = denominator / boost::multiprecision::gcd(denominator, d) * d;
  }
  cpp_int sum = 0;
  const cpp_int limit = std::numeric_limits<std::int64_t>::max();
  value.reserve(weights.size());
  for (const auto& w : weights) {
    cpp_int scaled = boost::multiprecision::numerator(w) * (denominator / boost::multiprecision::denominator(w));
    sum += scaled;
    if (sum > limit) throw std::overflow_error("total weight too large for exact int64 arithmetic");
    value.push_back(static_cast<std::int64_t>(scaled));
  }
}

Weight ScaledWeights::unscale(std::int64_t v) const { return Weight(cpp_int(v), denominator); }

Weight parse_weight(const std::string& text) {
  auto digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  // cpp_int reads a leading 0 as octal
  auto dec = [](const std::string& s) {
    auto nz = s.find_first_not_of('0');
    return cpp_int(nz == std::string::npos ? std::string("0") : s.substr(nz));
  };
  std::string t = text;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (auto slash = t.find('/'); slash != std::string::npos) {
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!digits(num) || !digits(den)) throw std::invalid_argument("bad weight '" + text + "'");
    cpp_int d = dec(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Weight(dec(num), d);
  }
  if (auto dot = t.find('.'); dot != std::string::npos) {
    std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!digits(ip) || (!fp.empty() && !digits(fp)))
      throw std::invalid_argument("bad weight '" + text + "'");
    cpp_int scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    return Weight(dec(ip + fp), scale);
  }
  if (!digits(t)) throw std::invalid_argument("bad weight '" + text + "'");
  return Weight(dec(t));
}

std::string format_weight(const Weight& w) {
  if (boost::multiprecision::denominator(w) == 1) return boost::multiprecision::numerator(w).str();
  return boost::multiprecision::numerator(w).str() + "/" + boost::multiprecision::denominator(w).str();
}

}  // namespace sepenum
