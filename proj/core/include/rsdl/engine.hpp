#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "rsdl/extension.hpp"
#include "rsdl/theory.hpp"

namespace rsdl {

namespace detail {
struct CompiledTheory;
class StateAccess;
}  // namespace detail

/// Raised on engine misuse: double consumption, incoherent appends,
/// predicates called on the wrong body kind.
struct EngineError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Which proof tag a predicate is evaluated against.
enum class Strength { delta, partial, sigma };

/// The proof matrix rendered as an append-only step log. Values are
/// immutable from the outside; every operation returns a new state.
class DerivationState {
 public:
  const Theory& theory() const;

  std::size_t size() const { return log_.size(); }
  std::vector<DerivationStep> steps() const;
  DerivationStep step(std::size_t index) const;

  /// Unconsumed proof instances: (literal, step index), in step order.
  std::vector<std::pair<Literal, std::size_t>> available_pool() const;
  std::size_t available(const Literal& q, Strength s) const;
  std::size_t proven(const Literal& q, Strength s) const;

  bool has(const Literal& q, Tag t) const;
  std::vector<TaggedLiteral> refuted() const;
  std::vector<Literal> supported() const;

  /// Number of proven (+Δ/+∂) instances produced so far, facts included.
  std::size_t productions() const { return productions_; }
  bool inconsistent() const { return inconsistent_; }

 private:
  friend class detail::StateAccess;

  struct Record {
    std::uint32_t lit = 0;
    Tag tag = Tag::plus_delta;
    JustificationKind just = JustificationKind::fact;
    std::int32_t rule = -1;
    std::uint32_t consumed_at = 0;  // 0 = unconsumed
    std::uint32_t move = 0;
    std::vector<std::uint32_t> consumed_from;
  };

  std::shared_ptr<const detail::CompiledTheory> ct_;
  std::vector<Record> log_;
  // Per literal id.
  std::vector<std::uint32_t> proven_delta_;    // +Δ instances
  std::vector<std::uint32_t> proven_partial_;  // +∂ instances from firings (no mirrors)
  std::vector<std::uint32_t> unused_delta_;
  std::vector<std::uint32_t> unused_partial_;
  std::vector<std::uint32_t> mirrors_;
  std::vector<std::uint8_t> flags_;
  std::size_t productions_ = 0;
  bool inconsistent_ = false;
};

/// Initial state: one +Δ step per fact instance. Throws InvalidTheory.
DerivationState init_state(const Theory& t);

// Predicates over multiset bodies (Strength::sigma only for applicability).
bool is_applicable(const DerivationState& s, std::string_view rule, Strength st);
bool is_consumable(const DerivationState& s, std::string_view rule, Strength st);
bool is_discarded(const DerivationState& s, std::string_view rule, Strength st);

// Predicates over sequence bodies.
bool is_sequence_applicable(const DerivationState& s, std::string_view rule, Strength st);
bool is_sequence_consumable(const DerivationState& s, std::string_view rule, Strength st);
bool is_sequence_discarded(const DerivationState& s, std::string_view rule, Strength st);

/// Marks each planned +Δ/+∂ step as consumed at step `at`. Throws
/// EngineError("instance already consumed") on double consumption.
DerivationState consume(const DerivationState& s, const std::vector<std::size_t>& plan,
                        std::size_t at);

enum class MoveKind { strict_step, defeasible_step, refute_strict, refute_defeasible, support_step };

std::string_view to_string(MoveKind k);

/// One application of a proof-tag condition block. A rule firing may
/// append several steps: automatic −Δ∼h refutations first, then the
/// emitted head literals in order.
struct Move {
  MoveKind kind = MoveKind::strict_step;
  Literal target;
  std::optional<std::string> via;          // firing rule; empty for shortcuts/refutations
  std::vector<std::size_t> consumption_plan;
  std::vector<Literal> emits;
  std::vector<Literal> auto_refuted;       // −Δ steps appended before emission
  std::vector<std::string> team;           // winning team members that pay

  bool operator==(const Move&) const = default;
};

std::string to_string(const Move& m);

/// Every move that would succeed now, in deterministic order (rule firings
/// in tie-break order, then refutations, then support, then shortcuts).
std::vector<Move> enabled_moves(const DerivationState& s);

/// True if some production move is enabled when the step budget is ignored.
bool has_pending_production(const DerivationState& s);

/// Applies a move produced by enabled_moves on the same state.
DerivationState apply(const DerivationState& s, const Move& m);

/// Moves that commute with every other move and never change another move's
/// effect: +σ, +Δ→+∂ shortcuts, −Δ q with every strict rule for q
/// Δ-discarded, and −∂ q for q occurring in no body.
bool is_inert(const DerivationState& s, const Move& m);

enum class FailureReason {
  no_consumable_rule,
  undefeated_attacker,
  strict_opposite,
  adjacency,
  coherence,
  budget_exhausted,
  is_fact,
  rule_not_blocked,
  not_established,
  attacker_superior,
  inconsistent_state,
};

std::string_view to_string(FailureReason r);

struct Failure {
  FailureReason reason;
  std::string message;
};

class StepResult {
 public:
  StepResult(DerivationState s) : v_(std::move(s)) {}
  StepResult(Failure f) : v_(std::move(f)) {}

  bool ok() const { return std::holds_alternative<DerivationState>(v_); }
  explicit operator bool() const { return ok(); }
  const DerivationState& state() const { return std::get<DerivationState>(v_); }
  const Failure& failure() const { return std::get<Failure>(v_); }

 private:
  std::variant<DerivationState, Failure> v_;
};

StepResult step_strict(const DerivationState& s, const Literal& q);
StepResult refute_strict(const DerivationState& s, const Literal& q);
StepResult step_defeasible(const DerivationState& s, const Literal& q);
StepResult refute_defeasible(const DerivationState& s, const Literal& q);
StepResult support(const DerivationState& s, const Literal& q);

}  // namespace rsdl
