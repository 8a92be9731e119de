#include "rsdl/rank.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rsdl {

Weight CostMap::weight(const Literal& q) const {
  auto it = weights_.find(q);
  return it == weights_.end() ? Weight(1) : it->second;
}

void CostMap::set(const Literal& q, Weight w) {
  if (w < 0) throw std::invalid_argument("negative weight for " + to_string(q));
  weights_[q] = w;
}

CostMap CostMap::scaled(Weight factor) const {
  if (factor < 0) throw std::invalid_argument("negative scale factor");
  CostMap out;
  for (const auto& [q, w] : weights_) out.weights_[q] = w * factor;
  return out;
}

namespace {

long long parse_int(std::string_view s, std::string_view what) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
    throw std::invalid_argument("malformed weight '" + std::string(what) + "'");
  return v;
}

Weight parse_weight(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Weight w;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    long long d = parse_int(s.substr(slash + 1), text);
    if (d == 0) throw std::invalid_argument("zero denominator in weight '" + std::string(text) + "'");
    w = Weight(parse_int(s.substr(0, slash), text), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (frac.empty() || frac.size() > 15) throw std::invalid_argument("malformed weight '" + std::string(text) + "'");
    long long scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    w = Weight(whole.empty() ? 0 : parse_int(whole, text)) + Weight(parse_int(frac, text), scale);
  } else {
    w = Weight(parse_int(s, text));
  }
  return negative ? -w : w;
}

}  // namespace

CostMap CostMap::parse(std::string_view text) {
  CostMap out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto c = line.find_first_of("%#"); c != std::string::npos) line.erase(c);
    std::istringstream fields(line);
    std::string lit, weight, extra;
    if (!(fields >> lit)) continue;
    if (!(fields >> weight) || (fields >> extra))
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected '<literal> <weight>'");
    Literal q = lit.front() == '~' ? neg(lit.substr(1)) : pos(lit);
    if (!is_identifier(q.atom)) throw std::invalid_argument("line " + std::to_string(lineno) + ": invalid literal '" + lit + "'");
    try {
      out.set(q, parse_weight(weight));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

Weight cost(const Extension& e, const CostMap& costs) {
  Weight total = 0;
  for (const auto& p : e.proven)
    if (p.consumed_count) total += costs.weight(p.literal) * static_cast<long long>(p.consumed_count);
  return total;
}

std::vector<RankedExtension> rank_extensions(std::vector<Extension> exts, const CostMap& costs) {
  std::vector<RankedExtension> out;
  out.reserve(exts.size());
  for (auto& e : exts) {
    Weight c = cost(e, costs);
    out.push_back({std::move(e), c});
  }
  std::stable_sort(out.begin(), out.end(), [](const RankedExtension& a, const RankedExtension& b) {
    if (a.extension.cyclic != b.extension.cyclic) return !a.extension.cyclic;
    if (a.cost != b.cost) return a.cost < b.cost;
    return a.extension < b.extension;
  });
  return out;
}

double to_double(Weight w) { return boost::rational_cast<double>(w); }

}  // namespace rsdl
