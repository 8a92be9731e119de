#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rsdl/literal.hpp"

namespace rsdl {

enum class Tag { plus_delta, minus_delta, plus_partial, minus_partial, plus_sigma };

/// +Δ, −Δ, +∂, −∂, +σ (UTF-8).
std::string_view symbol(Tag t);
/// ASCII names used in JSON output: +Delta, -Delta, +partial, -partial, +sigma.
std::string_view json_name(Tag t);
std::optional<Tag> tag_from_json_name(std::string_view s);

inline bool is_proof(Tag t) { return t == Tag::plus_delta || t == Tag::plus_partial; }
inline bool is_refutation(Tag t) { return t == Tag::minus_delta || t == Tag::minus_partial; }

enum class JustificationKind {
  fact,             // initial resource
  rule,             // produced by firing `rule`
  refutation,       // −Δ / −∂ after a failure scan
  strict_shortcut,  // +∂ inherited from an earlier +Δ instance
  support,          // +σ
};

std::string_view to_string(JustificationKind k);

/// One entry of the append-only proof log. `index` is 1-based; a consumed
/// instance records the index of the step whose firing spent it.
struct DerivationStep {
  std::size_t index = 0;
  Tag tag = Tag::plus_delta;
  Literal literal;
  JustificationKind justification = JustificationKind::fact;
  std::string rule;                       // producing rule, if any
  std::optional<std::size_t> consumed_at;
  std::vector<std::size_t> consumed_from;
  std::size_t move = 0;  // index of the first step appended by the same move

  bool operator==(const DerivationStep&) const = default;
};

std::string to_string(const DerivationStep& s);

struct ProvenEntry {
  Literal literal;
  Tag tag = Tag::plus_delta;  // +Δ or +∂
  std::size_t count = 0;
  std::size_t consumed_count = 0;

  auto operator<=>(const ProvenEntry&) const = default;
  bool operator==(const ProvenEntry&) const = default;
};

struct TaggedLiteral {
  Literal literal;
  Tag tag = Tag::minus_delta;

  auto operator<=>(const TaggedLiteral&) const = default;
  bool operator==(const TaggedLiteral&) const = default;
};

/// Canonical outcome of one maximal derivation. Identity (==, ordering)
/// ignores the trace, which is only one representative derivation.
struct Extension {
  std::vector<ProvenEntry> proven;       // sorted by (literal, tag)
  std::vector<TaggedLiteral> refuted;    // sorted
  std::vector<Literal> supported;        // sorted
  bool cyclic = false;
  bool inconsistent = false;
  std::vector<DerivationStep> trace;

  std::size_t count(const Literal& q, Tag t) const;
  std::size_t consumed(const Literal& q, Tag t) const;
  /// Consumed instances of q over both proof tags.
  std::size_t consumed(const Literal& q) const;
  bool has(const Literal& q, Tag t) const;

  bool operator==(const Extension& o) const;
  std::strong_ordering operator<=>(const Extension& o) const;
};

/// Aggregates a proof log into its canonical extension. Mirror +∂ steps
/// (strict shortcut) count as +∂ conclusions but never as consumed
/// resources: the underlying resource is the +Δ instance.
Extension summarize(std::span<const DerivationStep> steps, bool cyclic, bool inconsistent,
                    bool keep_trace = true);

std::string to_string(const Extension& e);

}  // namespace rsdl
