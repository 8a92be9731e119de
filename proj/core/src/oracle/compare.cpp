#include <algorithm>

#include "rsdl/oracle.hpp"

namespace rsdl::oracle {

DiffReport compare(const std::vector<Extension>& engine, const std::vector<Extension>& oracle) {
  auto contains = [](const std::vector<Extension>& v, const Extension& e) {
    return std::find(v.begin(), v.end(), e) != v.end();
  };
  DiffReport d;
  for (const auto& e : oracle)
    if (!contains(engine, e)) d.entries.push_back({DiffEntry::Kind::missing_from_engine, e});
  for (const auto& e : engine)
    if (!contains(oracle, e)) d.entries.push_back({DiffEntry::Kind::extra_in_engine, e});
  return d;
}

std::string to_string(const DiffReport& d) {
  if (d.empty()) return "no differences\n";
  std::string out;
  for (const auto& entry : d.entries) {
    out += entry.kind == DiffEntry::Kind::missing_from_engine ? "missing from engine: " : "extra in engine: ";
    out += to_string(entry.extension) + "\n";
    for (const auto& s : entry.extension.trace) out += "    " + to_string(s) + "\n";
  }
  return out;
}

}  // namespace rsdl::oracle
