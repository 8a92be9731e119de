#include <algorithm>

#include "compiled_theory.hpp"

namespace rsdl {

using detail::Context;
using detail::LitId;
using detail::StateAccess;

std::string_view to_string(FailureReason r) {
  switch (r) {
    case FailureReason::no_consumable_rule: return "no consumable rule";
    case FailureReason::undefeated_attacker: return "undefeated attacker";
    case FailureReason::strict_opposite: return "strict opposite";
    case FailureReason::adjacency: return "adjacency";
    case FailureReason::coherence: return "coherence";
    case FailureReason::budget_exhausted: return "budget exhausted";
    case FailureReason::is_fact: return "is a fact";
    case FailureReason::rule_not_blocked: return "rule not blocked";
    case FailureReason::not_established: return "not established";
    case FailureReason::attacker_superior: return "attacker superior";
    case FailureReason::inconsistent_state: return "inconsistent state";
  }
  return "?";
}

namespace {

Failure inconsistent() { return {FailureReason::inconsistent_state, "state is strictly inconsistent"}; }

bool emits_first(const detail::CompiledTheory& ct, const Move& m, const Literal& q) {
  if (m.emits.empty()) return m.target == q;
  auto ri = ct.rule_index(*m.via);
  if (ct.rules[*ri].head_kind == HeadKind::sequence) return m.emits.front() == q;
  return std::find(m.emits.begin(), m.emits.end(), q) != m.emits.end();
}

bool budget_spent(const DerivationState& s) { return s.productions() >= s.theory().config.max_steps; }

}  // namespace

StepResult step_strict(const DerivationState& s, const Literal& q) {
  if (s.inconsistent()) return inconsistent();
  const auto& ct = StateAccess::ct(s);
  for (const auto& m : enabled_moves(s)) {
    if (m.kind != MoveKind::strict_step || !emits_first(ct, m, q)) continue;
    auto n = apply(s, m);
    if (n.inconsistent())
      for (const auto& e : m.emits)
        if (n.has(complement(e), Tag::plus_delta))
          return Failure{FailureReason::inconsistent_state,
                         "+Δ " + to_string(e) + " and +Δ " + to_string(complement(e)) + " would both be present"};
    return n;
  }

  const std::string name = to_string(q);
  auto x = ct.find(q);
  if (!x) return Failure{FailureReason::no_consumable_rule, "no rule concludes " + name};
  Context cx(s);
  if (cx.refuted(*x, Strength::delta)) return Failure{FailureReason::coherence, "-Δ " + name + " already established"};
  bool any_consumable = false;
  for (auto ri : ct.heads[*x]) {
    const auto& r = ct.rules[ri];
    if (r.kind != RuleKind::strict || !cx.consumable(ri, Strength::delta)) continue;
    any_consumable = true;
    if (r.head_kind == HeadKind::sequence && r.head.front() != *x)
      return Failure{FailureReason::adjacency,
                     name + " only follows an earlier member of the head of " + r.label + " in the same firing"};
  }
  if (any_consumable && budget_spent(s))
    return Failure{FailureReason::budget_exhausted, "step budget of " + std::to_string(s.theory().config.max_steps) + " exhausted"};
  std::string msg = "no Δ-consumable strict rule for " + name;
  if (ct.is_fact[*x]) msg += " (fact instances are only placed initially)";
  return Failure{FailureReason::no_consumable_rule, msg};
}

StepResult step_defeasible(const DerivationState& s, const Literal& q) {
  if (s.inconsistent()) return inconsistent();
  const auto& ct = StateAccess::ct(s);
  auto moves = enabled_moves(s);
  for (const auto& m : moves)
    if (m.kind == MoveKind::defeasible_step && !m.via && m.target == q) return apply(s, m);
  for (const auto& m : moves)
    if (m.kind == MoveKind::defeasible_step && m.via && emits_first(ct, m, q)) return apply(s, m);

  const std::string name = to_string(q);
  auto x = ct.find(q);
  if (!x) return Failure{FailureReason::no_consumable_rule, "no rule concludes " + name};
  Context cx(s);
  if (cx.refuted(*x, Strength::partial)) return Failure{FailureReason::coherence, "-∂ " + name + " already established"};

  auto rank = [](FailureReason r) {
    switch (r) {
      case FailureReason::undefeated_attacker: return 0;
      case FailureReason::strict_opposite: return 1;
      case FailureReason::coherence: return 2;
      case FailureReason::adjacency: return 3;
      default: return 4;
    }
  };
  std::optional<Failure> best;
  auto offer = [&](FailureReason r, std::string msg) {
    if (!best || rank(r) < rank(best->reason)) best = Failure{r, std::move(msg)};
  };
  bool any_consumable = false;
  for (auto ri : ct.heads[*x]) {
    const auto& r = ct.rules[ri];
    if (r.kind == RuleKind::defeater || !cx.consumable(ri, Strength::partial)) continue;
    any_consumable = true;
    std::vector<detail::MemberStatus> st;
    for (LitId h : r.head) st.push_back(detail::evaluate_member(cx, h));
    const auto at = static_cast<std::size_t>(std::find(r.head.begin(), r.head.end(), *x) - r.head.begin());
    if (!st[at].pass) {
      offer(st[at].reason, st[at].detail);
    } else if (r.head_kind == HeadKind::sequence && at > 0) {
      offer(FailureReason::adjacency,
            name + " only follows an earlier member of the head of " + r.label + " in the same firing");
    } else {
      for (const auto& m : st)
        if (!m.pass) offer(m.reason, m.detail);
    }
  }
  if (best) return *best;
  if (any_consumable && budget_spent(s))
    return Failure{FailureReason::budget_exhausted, "step budget of " + std::to_string(s.theory().config.max_steps) + " exhausted"};
  return Failure{FailureReason::no_consumable_rule, "no ∂-consumable rule for " + name};
}

StepResult refute_strict(const DerivationState& s, const Literal& q) {
  for (const auto& m : enabled_moves(s))
    if (m.kind == MoveKind::refute_strict && m.target == q) return apply(s, m);

  const auto& ct = StateAccess::ct(s);
  const std::string name = to_string(q);
  auto x = ct.find(q);
  if (!x || !ct.in_signature[*x]) return Failure{FailureReason::not_established, name + " does not occur in the theory"};
  if (ct.is_fact[*x]) return Failure{FailureReason::is_fact, name + " is a fact"};
  Context cx(s);
  if (cx.refuted(*x, Strength::delta)) return Failure{FailureReason::coherence, "-Δ " + name + " already established"};
  if (StateAccess::proven_delta(s, *x)) return Failure{FailureReason::coherence, "+Δ " + name + " already established"};
  for (auto ri : ct.heads[*x]) {
    if (ct.rules[ri].kind != RuleKind::strict) continue;
    if (!cx.discarded(ri, Strength::delta) && cx.applicable(ri, Strength::delta))
      return Failure{FailureReason::rule_not_blocked, "strict rule " + ct.rules[ri].label + " is Δ-applicable"};
  }
  return Failure{FailureReason::rule_not_blocked, "-Δ " + name + " is not derivable here"};
}

StepResult refute_defeasible(const DerivationState& s, const Literal& q) {
  for (const auto& m : enabled_moves(s))
    if (m.kind == MoveKind::refute_defeasible && m.target == q) return apply(s, m);

  const auto& ct = StateAccess::ct(s);
  const std::string name = to_string(q);
  auto x = ct.find(q);
  if (!x || !ct.in_signature[*x]) return Failure{FailureReason::not_established, name + " does not occur in the theory"};
  Context cx(s);
  if (!cx.refuted(*x, Strength::delta)) return Failure{FailureReason::not_established, "-Δ " + name + " not established"};
  if (cx.refuted(*x, Strength::partial)) return Failure{FailureReason::coherence, "-∂ " + name + " already established"};
  if (s.has(q, Tag::plus_partial) || s.has(q, Tag::plus_delta))
    return Failure{FailureReason::coherence, name + " already proven"};
  const LitId c = detail::comp(*x);
  for (auto ri : ct.heads[*x]) {
    if (ct.rules[ri].kind == RuleKind::defeater || cx.discarded(ri, Strength::partial)) continue;
    bool blocked = false;
    for (auto si : ct.heads[c]) {
      if (!cx.applicable(si, Strength::sigma)) continue;
      blocked = std::all_of(ct.heads[*x].begin(), ct.heads[*x].end(), [&](std::uint32_t t) {
        return cx.discarded(t, Strength::partial) || !ct.beats(t, si);
      });
      if (blocked) break;
    }
    if (!blocked)
      return Failure{FailureReason::rule_not_blocked,
                     "rule " + ct.rules[ri].label + " for " + name +
                         " is neither ∂-discarded nor blocked by an undefeated σ-applicable attacker"};
  }
  return Failure{FailureReason::rule_not_blocked, "-∂ " + name + " is not derivable here"};
}

StepResult support(const DerivationState& s, const Literal& q) {
  for (const auto& m : enabled_moves(s))
    if (m.kind == MoveKind::support_step && m.target == q) return apply(s, m);

  const auto& ct = StateAccess::ct(s);
  const std::string name = to_string(q);
  auto x = ct.find(q);
  if (!x) return Failure{FailureReason::no_consumable_rule, "no rule concludes " + name};
  if (s.has(q, Tag::plus_sigma)) return Failure{FailureReason::coherence, "+σ " + name + " already established"};
  Context cx(s);
  const LitId c = detail::comp(*x);
  for (auto ri : ct.heads[*x]) {
    if (ct.rules[ri].kind == RuleKind::defeater || !cx.applicable(ri, Strength::sigma)) continue;
    for (auto si : ct.heads[c])
      if (ct.beats(si, ri) && !cx.discarded(si, Strength::partial))
        return Failure{FailureReason::attacker_superior,
                       "attacker " + ct.rules[si].label + " ≻ " + ct.rules[ri].label + " is not discarded"};
  }
  return Failure{FailureReason::no_consumable_rule, "no σ-applicable rule for " + name};
}

}  // namespace rsdl
