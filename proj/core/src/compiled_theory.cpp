#include "compiled_theory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace rsdl::detail {

Literal CompiledTheory::literal(LitId x) const {
  return Literal{atoms[x / 2], (x & 1u) ? Polarity::negative : Polarity::positive};
}

std::optional<LitId> CompiledTheory::find(const Literal& q) const {
  auto it = atom_ids.find(q.atom);
  if (it == atom_ids.end()) return std::nullopt;
  return it->second * 2 + (q.negative() ? 1u : 0u);
}

std::optional<std::uint32_t> CompiledTheory::rule_index(std::string_view label) const {
  for (std::uint32_t i = 0; i < rules.size(); ++i)
    if (rules[i].label == label) return i;
  return std::nullopt;
}

std::shared_ptr<const CompiledTheory> compile(const Theory& t) {
  auto report = validate_theory(t);
  if (!report.valid()) throw InvalidTheory(std::move(report));

  auto ct = std::make_shared<CompiledTheory>();
  ct->theory = t;
  normalize(ct->theory);
  const Theory& th = ct->theory;

  std::set<std::string> atoms;
  for (const auto& f : th.facts) atoms.insert(f.atom);
  for (const auto& r : th.rules) {
    for (const auto& q : r.body.items) atoms.insert(q.atom);
    for (const auto& q : r.head.items) atoms.insert(q.atom);
  }
  ct->atoms.assign(atoms.begin(), atoms.end());
  for (std::uint32_t i = 0; i < ct->atoms.size(); ++i) ct->atom_ids.emplace(ct->atoms[i], i);
  const std::size_t n = ct->literal_count();

  std::vector<std::size_t> order(th.rules.size());
  std::iota(order.begin(), order.end(), 0);
  if (th.config.tie_break == TieBreak::lexicographic)
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return th.rules[a].label < th.rules[b].label; });

  ct->heads.assign(n, {});
  ct->in_signature.assign(n, false);
  ct->in_body.assign(n, false);
  ct->is_fact.assign(n, false);

  for (std::size_t i : order) {
    const Rule& r = th.rules[i];
    CompiledRule c;
    c.label = r.label;
    c.kind = r.kind;
    c.body_kind = r.body.kind;
    c.head_kind = r.head.kind;
    std::map<LitId, std::uint32_t> counts;
    for (const auto& q : r.body.items) {
      LitId x = *ct->find(q);
      c.body.push_back(x);
      ++counts[x];
      ct->in_body[x] = true;
      ct->in_signature[x] = true;
    }
    c.body_counts.assign(counts.begin(), counts.end());
    for (const auto& q : r.head.items) {
      LitId x = *ct->find(q);
      c.head.push_back(x);
      ct->in_signature[x] = true;
    }
    const auto idx = static_cast<std::uint32_t>(ct->rules.size());
    std::set<LitId> distinct(c.head.begin(), c.head.end());
    for (LitId x : distinct) ct->heads[x].push_back(idx);
    if (c.body_kind == BodyKind::sequence) ct->sequence_bodies = true;
    ct->rules.push_back(std::move(c));
  }

  for (const auto& f : th.facts) {
    LitId x = *ct->find(f);
    ct->facts.push_back(x);
    ct->is_fact[x] = true;
    ct->in_signature[x] = true;
  }
  for (LitId x = 0; x < n; ++x)
    if (ct->in_signature[x]) ct->signature.push_back(x);

  const std::size_t m = ct->rules.size();
  ct->superior.assign(m * m, 0);
  for (const auto& s : th.superiority) {
    auto a = ct->rule_index(s.stronger), b = ct->rule_index(s.weaker);
    if (a && b) ct->superior[*a * m + *b] = 1;
  }
  return ct;
}

DerivationState StateAccess::make(std::shared_ptr<const CompiledTheory> ct) {
  DerivationState s;
  const std::size_t n = ct->literal_count();
  s.proven_delta_.assign(n, 0);
  s.proven_partial_.assign(n, 0);
  s.unused_delta_.assign(n, 0);
  s.unused_partial_.assign(n, 0);
  s.mirrors_.assign(n, 0);
  s.flags_.assign(n, 0);
  s.ct_ = std::move(ct);
  return s;
}

std::uint32_t StateAccess::append(DerivationState& s, Record r) {
  const LitId x = r.lit;
  const std::string name = to_string(s.ct_->literal(x));
  switch (r.tag) {
    case Tag::plus_delta:
      if (s.flags_[x] & kRefutedDelta) throw EngineError("incoherent: +Δ " + name + " after -Δ " + name);
      ++s.proven_delta_[x];
      ++s.unused_delta_[x];
      break;
    case Tag::plus_partial:
      if (s.flags_[x] & kRefutedPartial) throw EngineError("incoherent: +∂ " + name + " after -∂ " + name);
      if (r.just == JustificationKind::strict_shortcut) {
        ++s.mirrors_[x];
      } else {
        ++s.proven_partial_[x];
        ++s.unused_partial_[x];
      }
      break;
    case Tag::minus_delta:
      if (s.proven_delta_[x]) throw EngineError("incoherent: -Δ " + name + " after +Δ " + name);
      if (s.flags_[x] & kRefutedDelta) throw EngineError("-Δ " + name + " already established");
      s.flags_[x] |= kRefutedDelta;
      break;
    case Tag::minus_partial:
      if (s.proven_partial_[x] || s.mirrors_[x] || s.proven_delta_[x])
        throw EngineError("incoherent: -∂ " + name + " after a proof of " + name);
      if (s.flags_[x] & kRefutedPartial) throw EngineError("-∂ " + name + " already established");
      s.flags_[x] |= kRefutedPartial;
      break;
    case Tag::plus_sigma:
      if (s.flags_[x] & kSupported) throw EngineError("+σ " + name + " already established");
      s.flags_[x] |= kSupported;
      break;
  }
  s.log_.push_back(std::move(r));
  return static_cast<std::uint32_t>(s.log_.size());
}

void StateAccess::mark_consumed(DerivationState& s, std::uint32_t index, std::uint32_t at) {
  if (index == 0 || index > s.log_.size()) throw EngineError("consumption plan refers to unknown step " + std::to_string(index));
  if (index >= at) throw EngineError("consumption plan refers to a step not before the consuming step");
  auto& r = s.log_[index - 1];
  if (!is_proof(r.tag) || r.just == JustificationKind::strict_shortcut)
    throw EngineError("step " + std::to_string(index) + " is not a consumable instance");
  if (r.consumed_at) throw EngineError("instance already consumed");
  r.consumed_at = at;
  if (r.tag == Tag::plus_delta) --s.unused_delta_[r.lit];
  else --s.unused_partial_[r.lit];
}

}  // namespace rsdl::detail
