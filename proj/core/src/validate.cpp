#include <algorithm>
#include <map>
#include <set>

#include "rsdl/theory.hpp"

namespace rsdl {

namespace {

std::string describe(const ValidationReport& r) {
  std::string out = "invalid theory";
  for (const auto& v : r.violations) out += "; " + v.message;
  return out;
}

// Reports one cycle per strongly connected back edge found by DFS.
void find_cycles(const std::map<std::string, std::vector<std::string>>& graph,
                 std::vector<Violation>& out) {
  enum class Mark { white, grey, black };
  std::map<std::string, Mark> mark;
  for (const auto& [n, _] : graph) mark[n] = Mark::white;
  std::vector<std::string> path;

  auto dfs = [&](auto&& self, const std::string& n) -> void {
    mark[n] = Mark::grey;
    path.push_back(n);
    if (auto it = graph.find(n); it != graph.end()) {
      for (const auto& m : it->second) {
        if (m == n) continue;  // reported as irreflexivity
        if (mark[m] == Mark::grey) {
          auto from = std::find(path.begin(), path.end(), m);
          std::vector<std::string> cycle(from, path.end());
          std::string msg = "superiority cycle:";
          for (const auto& c : cycle) msg += " " + c + " >";
          msg += " " + m;
          out.push_back({ViolationKind::superiority_cycle, msg, cycle});
        } else if (mark[m] == Mark::white) {
          self(self, m);
        }
      }
    }
    path.pop_back();
    mark[n] = Mark::black;
  };

  for (const auto& [n, _] : graph)
    if (mark[n] == Mark::white) dfs(dfs, n);
}

}  // namespace

InvalidTheory::InvalidTheory(ValidationReport r)
    : std::runtime_error(describe(r)), report(std::move(r)) {}

ValidationReport validate_theory(const Theory& t) {
  ValidationReport rep;
  auto& v = rep.violations;

  std::set<std::string> labels;
  for (const auto& r : t.rules) {
    if (!labels.insert(r.label).second)
      v.push_back({ViolationKind::duplicate_label, "duplicate label " + r.label, {r.label}});
    if (!is_identifier(r.label))
      v.push_back({ViolationKind::invalid_identifier, "invalid rule label '" + r.label + "'", {r.label}});
    for (const auto* items : {&r.body.items, &r.head.items})
      for (const auto& q : *items)
        if (!is_identifier(q.atom))
          v.push_back({ViolationKind::invalid_identifier,
                       "invalid atom '" + q.atom + "' in rule " + r.label, {r.label}});
    if (r.head.items.empty())
      v.push_back({ViolationKind::empty_head, "empty head in rule " + r.label, {r.label}});
    else if (r.head.kind == HeadKind::single && r.head.items.size() != 1)
      v.push_back({ViolationKind::malformed_head,
                   "single head with " + std::to_string(r.head.items.size()) + " literals in rule " + r.label,
                   {r.label}});
  }
  for (const auto& f : t.facts)
    if (!is_identifier(f.atom))
      v.push_back({ViolationKind::invalid_identifier, "invalid fact atom '" + f.atom + "'", {}});

  std::map<std::string, std::vector<std::string>> graph;
  for (const auto& s : t.superiority) {
    bool dangling = false;
    for (const auto* l : {&s.stronger, &s.weaker}) {
      if (!labels.count(*l)) {
        v.push_back({ViolationKind::dangling_superiority,
                     "superiority refers to unknown rule " + *l, {*l}});
        dangling = true;
      }
    }
    if (s.stronger == s.weaker) {
      v.push_back({ViolationKind::irreflexive_superiority,
                   "irreflexive superiority: " + s.stronger + " > " + s.weaker, {s.stronger}});
      continue;
    }
    if (!dangling) graph[s.stronger].push_back(s.weaker);
  }
  for (auto& [_, succ] : graph) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }
  find_cycles(graph, v);

  // Strict inconsistency guard: a syntactically complementary fact pair is
  // rejected when some strict rule concludes either literal.
  std::set<Literal> facts(t.facts.begin(), t.facts.end());
  for (const auto& f : facts) {
    if (f.negative() || !facts.count(complement(f))) continue;
    bool strict = false;
    for (const auto& r : t.rules)
      if (r.kind == RuleKind::strict && (r.has_in_head(f) || r.has_in_head(complement(f))))
        strict = true;
    if (strict)
      v.push_back({ViolationKind::complementary_facts,
                   "facts " + to_string(f) + " and " + to_string(complement(f)) +
                       " are complementary and a strict rule concludes one of them",
                   {}});
  }

  if (t.config.max_steps == 0)
    v.push_back({ViolationKind::invalid_config, "max_steps must be positive", {}});
  else if (t.config.max_steps < t.facts.size())
    v.push_back({ViolationKind::invalid_config,
                 "max_steps (" + std::to_string(t.config.max_steps) + ") is smaller than the number of facts (" +
                     std::to_string(t.facts.size()) + ")",
                 {}});
  return rep;
}

}  // namespace rsdl
