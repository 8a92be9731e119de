#include "rsdl/theory.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rsdl {

const Rule* Theory::find_rule(std::string_view label) const {
  for (const auto& r : rules)
    if (r.label == label) return &r;
  return nullptr;
}

bool Theory::stronger(std::string_view a, std::string_view b) const {
  for (const auto& s : superiority)
    if (s.stronger == a && s.weaker == b) return true;
  return false;
}

std::vector<Literal> Theory::signature() const {
  std::set<Literal> sig(facts.begin(), facts.end());
  for (const auto& r : rules) {
    sig.insert(r.body.items.begin(), r.body.items.end());
    sig.insert(r.head.items.begin(), r.head.items.end());
  }
  return {sig.begin(), sig.end()};
}

void normalize(Theory& t) {
  std::sort(t.facts.begin(), t.facts.end());
  for (auto& r : t.rules) normalize(r);
}

bool same_structure(const Theory& a, const Theory& b) {
  Theory x = a, y = b;
  normalize(x);
  normalize(y);
  if (x.facts != y.facts) return false;
  auto by_label = [](const Theory& t) {
    std::map<std::string, const Rule*> m;
    for (const auto& r : t.rules) m.emplace(r.label, &r);
    return m;
  };
  auto rx = by_label(x), ry = by_label(y);
  if (rx.size() != ry.size() || x.rules.size() != y.rules.size()) return false;
  for (const auto& [label, r] : rx) {
    auto it = ry.find(label);
    if (it == ry.end() || !(*r == *it->second)) return false;
  }
  std::set<Superiority> sx(x.superiority.begin(), x.superiority.end());
  std::set<Superiority> sy(y.superiority.begin(), y.superiority.end());
  return sx == sy;
}

std::vector<const Rule*> rules_for(const Theory& t, const Literal& q, RuleSelector sel) {
  std::vector<const Rule*> out;
  for (const auto& r : t.rules) {
    bool match = false;
    switch (sel.kind) {
      case RuleSelector::Kind::any:
        match = r.has_in_head(q);
        break;
      case RuleSelector::Kind::strict:
        match = r.kind == RuleKind::strict && r.has_in_head(q);
        break;
      case RuleSelector::Kind::strict_or_defeasible:
        match = r.kind != RuleKind::defeater && r.has_in_head(q);
        break;
      case RuleSelector::Kind::head_sequence_index:
        match = r.head.kind == HeadKind::sequence && sel.index >= 1 &&
                sel.index <= r.head.items.size() && r.head.items[sel.index - 1] == q;
        break;
      case RuleSelector::Kind::head_multiset:
        match = r.head.kind == HeadKind::multiset && r.has_in_head(q);
        break;
    }
    if (match) out.push_back(&r);
  }
  return out;
}

}  // namespace rsdl
