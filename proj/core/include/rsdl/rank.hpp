#pragma once

#include <map>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "rsdl/extension.hpp"

namespace rsdl {

using Weight = boost::rational<long long>;

/// Per-literal nonnegative weights; unlisted literals weigh 1.
class CostMap {
 public:
  Weight weight(const Literal& q) const;
  void set(const Literal& q, Weight w);  // throws std::invalid_argument if w < 0
  CostMap scaled(Weight factor) const;

  /// `<literal> <weight>` per line, `%` or `#` comments. Weights are
  /// decimals or fractions (`1.5`, `3/4`). Throws std::invalid_argument.
  static CostMap parse(std::string_view text);

  const std::map<Literal, Weight>& entries() const { return weights_; }

 private:
  std::map<Literal, Weight> weights_;
};

Weight cost(const Extension& e, const CostMap& costs);

struct RankedExtension {
  Extension extension;
  Weight cost;
};

/// Ascending by consumed cost; acyclic before cyclic; ties by canonical order.
std::vector<RankedExtension> rank_extensions(std::vector<Extension> exts, const CostMap& costs);

double to_double(Weight w);

}  // namespace rsdl
