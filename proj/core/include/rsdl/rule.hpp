#pragma once

#include <string>
#include <vector>

#include "rsdl/literal.hpp"

namespace rsdl {

enum class BodyKind { multiset, sequence };
enum class HeadKind { single, multiset, sequence };
enum class RuleKind { strict, defeasible, defeater };

struct RuleBody {
  BodyKind kind = BodyKind::multiset;
  std::vector<Literal> items;  // order only matters for sequences

  bool operator==(const RuleBody&) const = default;
};

struct RuleHead {
  HeadKind kind = HeadKind::single;
  std::vector<Literal> items;

  bool operator==(const RuleHead&) const = default;
};

struct Rule {
  std::string label;
  RuleBody body;
  RuleKind kind = RuleKind::defeasible;
  RuleHead head;

  bool operator==(const Rule&) const = default;

  bool has_in_head(const Literal& q) const;
  bool has_in_body(const Literal& q) const;
};

// Convenience constructors, mostly for tests and generators.
RuleBody multiset_body(std::vector<Literal> items);
RuleBody sequence_body(std::vector<Literal> items);
RuleHead single_head(Literal q);
RuleHead multiset_head(std::vector<Literal> items);
RuleHead sequence_head(std::vector<Literal> items);

Rule make_rule(std::string label, RuleBody body, RuleKind kind, RuleHead head);

/// Sorts multiset bodies and heads; sequences are left untouched.
void normalize(Rule& r);

std::string_view arrow(RuleKind k);
std::string_view to_string(RuleKind k);

/// Renders `label: body => head`, without the final period.
std::string to_string(const Rule& r);

}  // namespace rsdl
