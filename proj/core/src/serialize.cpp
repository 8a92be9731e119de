#include <algorithm>

#include "rsdl/parser.hpp"

namespace rsdl {

std::string serialize_theory(const Theory& t) {
  Theory n = t;
  normalize(n);
  std::string out;
  for (const auto& f : n.facts) out += "fact " + to_string(f) + ".\n";

  std::sort(n.rules.begin(), n.rules.end(),
            [](const Rule& a, const Rule& b) { return a.label < b.label; });
  for (const auto& r : n.rules) out += to_string(r) + ".\n";

  std::sort(n.superiority.begin(), n.superiority.end());
  for (const auto& s : n.superiority) out += s.stronger + " > " + s.weaker + ".\n";
  return out;
}

}  // namespace rsdl
