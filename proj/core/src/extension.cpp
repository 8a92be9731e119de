#include "rsdl/extension.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace rsdl {

std::string_view symbol(Tag t) {
  switch (t) {
    case Tag::plus_delta: return "+Δ";
    case Tag::minus_delta: return "-Δ";
    case Tag::plus_partial: return "+∂";
    case Tag::minus_partial: return "-∂";
    case Tag::plus_sigma: return "+σ";
  }
  return "?";
}

std::string_view json_name(Tag t) {
  switch (t) {
    case Tag::plus_delta: return "+Delta";
    case Tag::minus_delta: return "-Delta";
    case Tag::plus_partial: return "+partial";
    case Tag::minus_partial: return "-partial";
    case Tag::plus_sigma: return "+sigma";
  }
  return "?";
}

std::optional<Tag> tag_from_json_name(std::string_view s) {
  for (Tag t : {Tag::plus_delta, Tag::minus_delta, Tag::plus_partial, Tag::minus_partial, Tag::plus_sigma})
    if (json_name(t) == s || symbol(t) == s) return t;
  return std::nullopt;
}

std::string_view to_string(JustificationKind k) {
  switch (k) {
    case JustificationKind::fact: return "fact";
    case JustificationKind::rule: return "rule";
    case JustificationKind::refutation: return "failure-scan";
    case JustificationKind::strict_shortcut: return "strict";
    case JustificationKind::support: return "support";
  }
  return "?";
}

std::string to_string(const DerivationStep& s) {
  std::string out = std::to_string(s.index) + ". " + std::string(symbol(s.tag)) + " " + to_string(s.literal);
  switch (s.justification) {
    case JustificationKind::fact: out += " (fact)"; break;
    case JustificationKind::rule: out += " via " + s.rule; break;
    case JustificationKind::strict_shortcut: out += " (from +Δ)"; break;
    case JustificationKind::refutation:
    case JustificationKind::support: break;
  }
  if (!s.consumed_from.empty()) {
    out += ", consumed: [";
    for (std::size_t i = 0; i < s.consumed_from.size(); ++i) {
      if (i) out += ", ";
      out += "step " + std::to_string(s.consumed_from[i]);
    }
    out += "]";
  }
  if (s.consumed_at) out += " ✓" + std::to_string(*s.consumed_at);
  return out;
}

std::size_t Extension::count(const Literal& q, Tag t) const {
  for (const auto& p : proven)
    if (p.literal == q && p.tag == t) return p.count;
  return 0;
}

std::size_t Extension::consumed(const Literal& q, Tag t) const {
  for (const auto& p : proven)
    if (p.literal == q && p.tag == t) return p.consumed_count;
  return 0;
}

std::size_t Extension::consumed(const Literal& q) const {
  return consumed(q, Tag::plus_delta) + consumed(q, Tag::plus_partial);
}

bool Extension::has(const Literal& q, Tag t) const {
  if (is_proof(t)) return count(q, t) > 0;
  if (t == Tag::plus_sigma) return std::binary_search(supported.begin(), supported.end(), q);
  return std::binary_search(refuted.begin(), refuted.end(), TaggedLiteral{q, t});
}

bool Extension::operator==(const Extension& o) const {
  return proven == o.proven && refuted == o.refuted && supported == o.supported && cyclic == o.cyclic &&
         inconsistent == o.inconsistent;
}

std::strong_ordering Extension::operator<=>(const Extension& o) const {
  return std::tie(proven, refuted, supported, cyclic, inconsistent) <=>
         std::tie(o.proven, o.refuted, o.supported, o.cyclic, o.inconsistent);
}

Extension summarize(std::span<const DerivationStep> steps, bool cyclic, bool inconsistent,
                    bool keep_trace) {
  Extension e;
  std::map<std::pair<Literal, Tag>, std::pair<std::size_t, std::size_t>> proven;
  std::set<TaggedLiteral> refuted;
  std::set<Literal> supported;
  for (const auto& s : steps) {
    if (is_proof(s.tag)) {
      auto& [count, consumed] = proven[{s.literal, s.tag}];
      ++count;
      if (s.consumed_at && s.justification != JustificationKind::strict_shortcut) ++consumed;
    } else if (is_refutation(s.tag)) {
      refuted.insert({s.literal, s.tag});
    } else {
      supported.insert(s.literal);
    }
  }
  for (const auto& [k, v] : proven) e.proven.push_back({k.first, k.second, v.first, v.second});
  e.refuted.assign(refuted.begin(), refuted.end());
  e.supported.assign(supported.begin(), supported.end());
  e.cyclic = cyclic;
  e.inconsistent = inconsistent;
  if (keep_trace) e.trace.assign(steps.begin(), steps.end());
  return e;
}

std::string to_string(const Extension& e) {
  std::string out = "{";
  bool first = true;
  auto sep = [&] {
    if (!first) out += ", ";
    first = false;
  };
  for (const auto& p : e.proven) {
    sep();
    out += std::string(symbol(p.tag)) + " " + to_string(p.literal);
    if (p.count > 1) out += " x" + std::to_string(p.count);
    if (p.consumed_count) out += " (consumed " + std::to_string(p.consumed_count) + ")";
  }
  for (const auto& r : e.refuted) {
    sep();
    out += std::string(symbol(r.tag)) + " " + to_string(r.literal);
  }
  for (const auto& s : e.supported) {
    sep();
    out += "+σ " + to_string(s);
  }
  out += "}";
  if (e.cyclic) out += " [cyclic]";
  if (e.inconsistent) out += " [inconsistent]";
  return out;
}

}  // namespace rsdl
