#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsdl/literal.hpp"
#include "rsdl/rule.hpp"

namespace rsdl {

enum class HeadVariant { whole_head, per_literal };
enum class EnumerationMode { all, deterministic };
enum class TieBreak { lexicographic, declaration };

struct ReasonerConfig {
  HeadVariant head_variant = HeadVariant::per_literal;
  std::size_t max_steps = 1000;
  EnumerationMode enumeration = EnumerationMode::all;
  TieBreak tie_break = TieBreak::lexicographic;

  bool operator==(const ReasonerConfig&) const = default;
};

struct Superiority {
  std::string stronger;
  std::string weaker;

  auto operator<=>(const Superiority&) const = default;
  bool operator==(const Superiority&) const = default;
};

/// Facts are a multiset: a fact listed twice is two resource instances.
struct Theory {
  std::vector<Literal> facts;
  std::vector<Rule> rules;
  std::vector<Superiority> superiority;
  ReasonerConfig config;

  const Rule* find_rule(std::string_view label) const;
  bool stronger(std::string_view a, std::string_view b) const;

  /// Every literal occurring in facts, bodies or heads, sorted and unique.
  std::vector<Literal> signature() const;
};

/// Sorts facts and every multiset body/head.
void normalize(Theory& t);

/// Equality up to multiset reordering, rule order and superiority order.
/// The reasoner configuration is not part of the structure.
bool same_structure(const Theory& a, const Theory& b);

struct RuleSelector {
  enum class Kind { any, strict, strict_or_defeasible, head_sequence_index, head_multiset };
  Kind kind = Kind::any;
  std::size_t index = 0;  // 1-based, only for head_sequence_index

  static RuleSelector any() { return {Kind::any, 0}; }
  static RuleSelector strict() { return {Kind::strict, 0}; }
  static RuleSelector strict_or_defeasible() { return {Kind::strict_or_defeasible, 0}; }
  static RuleSelector at_sequence_index(std::size_t i) { return {Kind::head_sequence_index, i}; }
  static RuleSelector in_multiset_head() { return {Kind::head_multiset, 0}; }
};

/// R[q], R_s[q], R_sd[q], R[q;i] and R[q,i]. Results follow declaration order.
std::vector<const Rule*> rules_for(const Theory& t, const Literal& q, RuleSelector sel);

enum class ViolationKind {
  duplicate_label,
  invalid_identifier,
  dangling_superiority,
  irreflexive_superiority,
  superiority_cycle,
  empty_head,
  malformed_head,
  mixed_nesting,
  complementary_facts,
  invalid_config,
};

struct Violation {
  ViolationKind kind;
  std::string message;
  std::vector<std::string> labels;  // rule labels involved, if any
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

ValidationReport validate_theory(const Theory& t);

struct InvalidTheory : std::runtime_error {
  ValidationReport report;
  explicit InvalidTheory(ValidationReport r);
};

}  // namespace rsdl
