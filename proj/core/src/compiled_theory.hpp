#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rsdl/engine.hpp"
#include "rsdl/theory.hpp"

namespace rsdl::detail {

/// Literal ids: 2 * atom + polarity, atoms numbered in sorted order, so id
/// order coincides with Literal order and complement is `id ^ 1`.
using LitId = std::uint32_t;

inline LitId comp(LitId x) { return x ^ 1u; }

struct CompiledRule {
  std::string label;
  RuleKind kind = RuleKind::defeasible;
  BodyKind body_kind = BodyKind::multiset;
  HeadKind head_kind = HeadKind::single;
  std::vector<LitId> body;
  std::vector<std::pair<LitId, std::uint32_t>> body_counts;  // multiset view
  std::vector<LitId> head;
};

struct CompiledTheory {
  Theory theory;
  std::vector<std::string> atoms;
  std::unordered_map<std::string, std::uint32_t> atom_ids;
  std::vector<CompiledRule> rules;                 // tie-break order
  std::vector<std::vector<std::uint32_t>> heads;   // rules with the literal in their head
  std::vector<std::uint8_t> superior;              // rules x rules
  std::vector<LitId> facts;
  std::vector<LitId> signature;                    // sorted
  std::vector<bool> in_signature, in_body, is_fact;
  bool sequence_bodies = false;

  std::size_t literal_count() const { return atoms.size() * 2; }
  Literal literal(LitId x) const;
  std::optional<LitId> find(const Literal& q) const;
  std::optional<std::uint32_t> rule_index(std::string_view label) const;
  bool beats(std::uint32_t a, std::uint32_t b) const { return superior[a * rules.size() + b] != 0; }
};

std::shared_ptr<const CompiledTheory> compile(const Theory& t);

enum : std::uint8_t { kRefutedDelta = 1, kRefutedPartial = 2, kSupported = 4 };

class StateAccess {
 public:
  using Record = DerivationState::Record;

  static const CompiledTheory& ct(const DerivationState& s) { return *s.ct_; }
  static const std::vector<Record>& log(const DerivationState& s) { return s.log_; }
  static std::uint32_t proven_delta(const DerivationState& s, LitId x) { return s.proven_delta_[x]; }
  static std::uint32_t proven_partial(const DerivationState& s, LitId x) { return s.proven_partial_[x]; }
  static std::uint32_t unused_delta(const DerivationState& s, LitId x) { return s.unused_delta_[x]; }
  static std::uint32_t unused_partial(const DerivationState& s, LitId x) { return s.unused_partial_[x]; }
  static std::uint32_t mirrors(const DerivationState& s, LitId x) { return s.mirrors_[x]; }
  static std::uint8_t flags(const DerivationState& s, LitId x) { return s.flags_[x]; }

  static DerivationState make(std::shared_ptr<const CompiledTheory> ct);
  /// Appends a record, enforcing coherence; returns its 1-based index.
  static std::uint32_t append(DerivationState& s, Record r);
  static void mark_consumed(DerivationState& s, std::uint32_t index, std::uint32_t at);
  static void set_inconsistent(DerivationState& s) { s.inconsistent_ = true; }
  static void add_productions(DerivationState& s, std::size_t n) { s.productions_ += n; }
};

/// Proof instances usable for a predicate of strength `st`: +Δ only for
/// delta, +Δ and firing-produced +∂ otherwise (shortcut mirrors excluded).
inline bool counts_as(const StateAccess::Record& r, Strength st) {
  if (r.tag == Tag::plus_delta) return true;
  return st != Strength::delta && r.tag == Tag::plus_partial && r.just != JustificationKind::strict_shortcut;
}

/// Lazily cached rule statuses for one state.
class Context {
 public:
  explicit Context(const DerivationState& s);

  const DerivationState& state() const { return s_; }
  const CompiledTheory& ct() const { return ct_; }

  bool applicable(std::uint32_t r, Strength st);
  bool consumable(std::uint32_t r, Strength st);
  bool discarded(std::uint32_t r, Strength st);

  std::uint32_t proven(LitId x, Strength st) const;
  std::uint32_t unused(LitId x, Strength st) const;
  bool refuted(LitId x, Strength st) const;

  /// −Δ conditions for x (ignores whether −Δ x is already present).
  bool strict_refutable(LitId x);
  bool defeasible_refutable(LitId x);
  bool supportable(LitId x);

  /// Literals whose instance order can still matter: premises of sequence
  /// bodies not yet discarded at both levels. Instances of any other
  /// literal are interchangeable within their class.
  const std::vector<bool>& ordered_literals();

  /// Consumption plans (0-based record positions, ascending) covering the
  /// bodies of `payers` jointly from unused instances of strength `st`.
  /// Unless `every`, interchangeable instances are taken oldest first, so
  /// only one representative per choice of counts comes back.
  std::vector<std::vector<std::uint32_t>> plans(const std::vector<std::uint32_t>& payers, Strength st,
                                                bool every = false);

 private:
  enum Tri : std::int8_t { unknown = -1, no = 0, yes = 1 };
  static int slot(Strength st) { return st == Strength::delta ? 0 : 1; }

  bool seq_embeds(const CompiledRule& r, Strength st, bool unused_only) const;
  bool seq_discarded(const CompiledRule& r, Strength st);
  const std::vector<bool>& producible(Strength st);

  const DerivationState& s_;
  const CompiledTheory& ct_;
  std::vector<Tri> applicable_[2], consumable_[2], discarded_[2];
  std::optional<std::vector<bool>> producible_[2];
  std::optional<std::vector<bool>> ordered_;
};

/// Evaluation of one head member of a defeasible firing.
struct Fight {
  std::uint32_t attacker;
  std::vector<std::uint32_t> candidates;  // consumable t with t ≻ attacker
};

struct MemberStatus {
  bool pass = false;
  bool needs_auto = false;  // −Δ∼h must be appended first
  std::vector<Fight> fights;  // against ∂-applicable attackers only
  FailureReason reason = FailureReason::no_consumable_rule;
  std::string detail;
};

MemberStatus evaluate_member(Context& cx, LitId h);

/// Head positions a firing of r may emit given member statuses; empty if blocked.
std::vector<std::size_t> emitted_positions(const CompiledRule& r, const std::vector<MemberStatus>& st,
                                           HeadVariant variant);

/// Head positions a strict firing of r may emit.
std::vector<std::size_t> strict_positions(const Context& cx, const CompiledRule& r);

std::vector<Move> generate_moves(const DerivationState& s, bool ignore_budget, bool productions_only,
                                 bool every_plan = false);

}  // namespace rsdl::detail
