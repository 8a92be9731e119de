#include <algorithm>

#include "compiled_theory.hpp"

namespace rsdl {

using detail::LitId;
using detail::StateAccess;

const Theory& DerivationState::theory() const { return ct_->theory; }

DerivationStep DerivationState::step(std::size_t index) const {
  if (index == 0 || index > log_.size()) throw std::out_of_range("no step " + std::to_string(index));
  const Record& r = log_[index - 1];
  DerivationStep d;
  d.index = index;
  d.tag = r.tag;
  d.literal = ct_->literal(r.lit);
  d.justification = r.just;
  if (r.rule >= 0) d.rule = ct_->rules[static_cast<std::size_t>(r.rule)].label;
  if (r.consumed_at) d.consumed_at = r.consumed_at;
  d.consumed_from.assign(r.consumed_from.begin(), r.consumed_from.end());
  d.move = r.move;
  return d;
}

std::vector<DerivationStep> DerivationState::steps() const {
  std::vector<DerivationStep> out;
  out.reserve(log_.size());
  for (std::size_t i = 1; i <= log_.size(); ++i) out.push_back(step(i));
  return out;
}

std::vector<std::pair<Literal, std::size_t>> DerivationState::available_pool() const {
  std::vector<std::pair<Literal, std::size_t>> out;
  for (std::size_t i = 0; i < log_.size(); ++i)
    if (detail::counts_as(log_[i], Strength::partial) && !log_[i].consumed_at)
      out.emplace_back(ct_->literal(log_[i].lit), i + 1);
  return out;
}

std::size_t DerivationState::available(const Literal& q, Strength s) const {
  auto x = ct_->find(q);
  if (!x) return 0;
  return s == Strength::delta ? unused_delta_[*x] : unused_delta_[*x] + unused_partial_[*x];
}

std::size_t DerivationState::proven(const Literal& q, Strength s) const {
  auto x = ct_->find(q);
  if (!x) return 0;
  return s == Strength::delta ? proven_delta_[*x] : proven_delta_[*x] + proven_partial_[*x];
}

bool DerivationState::has(const Literal& q, Tag t) const {
  auto x = ct_->find(q);
  if (!x) return false;
  switch (t) {
    case Tag::plus_delta: return proven_delta_[*x] > 0;
    case Tag::plus_partial: return proven_partial_[*x] + mirrors_[*x] > 0;
    case Tag::minus_delta: return flags_[*x] & detail::kRefutedDelta;
    case Tag::minus_partial: return flags_[*x] & detail::kRefutedPartial;
    case Tag::plus_sigma: return flags_[*x] & detail::kSupported;
  }
  return false;
}

std::vector<TaggedLiteral> DerivationState::refuted() const {
  std::vector<TaggedLiteral> out;
  for (LitId x = 0; x < flags_.size(); ++x) {
    if (flags_[x] & detail::kRefutedDelta) out.push_back({ct_->literal(x), Tag::minus_delta});
    if (flags_[x] & detail::kRefutedPartial) out.push_back({ct_->literal(x), Tag::minus_partial});
  }
  return out;
}

std::vector<Literal> DerivationState::supported() const {
  std::vector<Literal> out;
  for (LitId x = 0; x < flags_.size(); ++x)
    if (flags_[x] & detail::kSupported) out.push_back(ct_->literal(x));
  return out;
}

DerivationState init_state(const Theory& t) {
  auto ct = detail::compile(t);
  DerivationState s = StateAccess::make(ct);
  std::uint32_t move = 1;
  for (LitId x : ct->facts) {
    StateAccess::Record r;
    r.lit = x;
    r.tag = Tag::plus_delta;
    r.just = JustificationKind::fact;
    r.move = move++;
    StateAccess::append(s, std::move(r));
  }
  StateAccess::add_productions(s, ct->facts.size());
  return s;
}

namespace {

std::uint32_t checked_rule(const detail::CompiledTheory& ct, std::string_view label, BodyKind expected) {
  auto r = ct.rule_index(label);
  if (!r) throw EngineError("unknown rule " + std::string(label));
  if (ct.rules[*r].body_kind != expected)
    throw EngineError("rule " + std::string(label) + " does not have a " +
                      (expected == BodyKind::sequence ? "sequence" : "multiset") + " body");
  return *r;
}

}  // namespace

bool is_applicable(const DerivationState& s, std::string_view rule, Strength st) {
  detail::Context cx(s);
  return cx.applicable(checked_rule(cx.ct(), rule, BodyKind::multiset), st);
}

bool is_consumable(const DerivationState& s, std::string_view rule, Strength st) {
  detail::Context cx(s);
  return cx.consumable(checked_rule(cx.ct(), rule, BodyKind::multiset), st);
}

bool is_discarded(const DerivationState& s, std::string_view rule, Strength st) {
  detail::Context cx(s);
  return cx.discarded(checked_rule(cx.ct(), rule, BodyKind::multiset), st);
}

bool is_sequence_applicable(const DerivationState& s, std::string_view rule, Strength st) {
  detail::Context cx(s);
  return cx.applicable(checked_rule(cx.ct(), rule, BodyKind::sequence), st);
}

bool is_sequence_consumable(const DerivationState& s, std::string_view rule, Strength st) {
  detail::Context cx(s);
  return cx.consumable(checked_rule(cx.ct(), rule, BodyKind::sequence), st);
}

bool is_sequence_discarded(const DerivationState& s, std::string_view rule, Strength st) {
  detail::Context cx(s);
  return cx.discarded(checked_rule(cx.ct(), rule, BodyKind::sequence), st);
}

DerivationState consume(const DerivationState& s, const std::vector<std::size_t>& plan, std::size_t at) {
  DerivationState n = s;
  std::vector<std::size_t> sorted = plan;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw EngineError("instance already consumed");
  for (std::size_t i : sorted)
    StateAccess::mark_consumed(n, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(at));
  return n;
}

}  // namespace rsdl
