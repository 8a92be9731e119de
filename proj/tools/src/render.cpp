#include "render.hpp"

namespace rsdl::cli {

namespace {

std::string_view variant_name(HeadVariant v) { return v == HeadVariant::whole_head ? "whole" : "per-literal"; }

Json step_json(const DerivationStep& s) {
  Json j;
  j["index"] = s.index;
  j["tag"] = json_name(s.tag);
  j["literal"] = to_string(s.literal);
  j["justification"] = to_string(s.justification);
  if (!s.rule.empty()) j["rule"] = s.rule;
  if (!s.consumed_from.empty()) j["consumed_from"] = s.consumed_from;
  if (s.consumed_at) j["consumed_at"] = *s.consumed_at;
  return j;
}

}  // namespace

std::string format_weight(const Weight& w) {
  if (w.denominator() == 1) return std::to_string(w.numerator());
  return std::to_string(w.numerator()) + "/" + std::to_string(w.denominator());
}

Json config_json(const ReasonerConfig& c) {
  Json j;
  j["head_variant"] = variant_name(c.head_variant);
  j["max_steps"] = c.max_steps;
  j["enumeration"] = c.enumeration == EnumerationMode::all ? "all" : "deterministic";
  j["tie_break"] = c.tie_break == TieBreak::lexicographic ? "lexicographic" : "declaration";
  return j;
}

Json extension_json(const Extension& e, bool with_trace, const std::optional<Weight>& cost) {
  Json j;
  Json proven = Json::array();
  for (const auto& p : e.proven)
    proven.push_back({{"literal", to_string(p.literal)},
                      {"tag", json_name(p.tag)},
                      {"count", p.count},
                      {"consumed_count", p.consumed_count}});
  j["proven"] = std::move(proven);
  Json refuted = Json::array();
  for (const auto& r : e.refuted) refuted.push_back({{"literal", to_string(r.literal)}, {"tag", json_name(r.tag)}});
  j["refuted"] = std::move(refuted);
  Json supported = Json::array();
  for (const auto& s : e.supported) supported.push_back(to_string(s));
  j["supported"] = std::move(supported);
  j["cyclic"] = e.cyclic;
  j["inconsistent"] = e.inconsistent;
  if (cost) {
    j["cost"] = to_double(*cost);
    j["cost_exact"] = format_weight(*cost);
  }
  if (with_trace) {
    Json trace = Json::array();
    for (const auto& s : e.trace) trace.push_back(step_json(s));
    j["trace"] = std::move(trace);
  }
  return j;
}

Json document(const std::string& theory, const ReasonerConfig& c, Json extensions) {
  Json j;
  j["theory"] = theory;
  j["config"] = config_json(c);
  j["extensions"] = std::move(extensions);
  return j;
}

std::string render_step(const DerivationStep& s, const std::vector<DerivationStep>& trace) {
  std::string out = std::to_string(s.index) + ". " + std::string(symbol(s.tag)) + " " + to_string(s.literal);
  switch (s.justification) {
    case JustificationKind::fact: out += " (fact)"; break;
    case JustificationKind::strict_shortcut: out += " (from +Δ)"; break;
    case JustificationKind::rule:
      out += " via " + (s.rule.empty() ? std::string("?") : s.rule);
      if (!s.consumed_from.empty()) {
        out += ", consumed: [";
        for (std::size_t i = 0; i < s.consumed_from.size(); ++i) {
          const auto ref = s.consumed_from[i];
          out += (i ? ", " : "") + std::string("step ") + std::to_string(ref);
          if (ref >= 1 && ref <= trace.size())
            out += " (" + std::string(symbol(trace[ref - 1].tag)) + " " + to_string(trace[ref - 1].literal) + ")";
        }
        out += "]";
      }
      break;
    case JustificationKind::refutation:
    case JustificationKind::support: break;
  }
  return out;
}

std::string render_trace(const std::vector<DerivationStep>& trace, const std::string& indent) {
  std::string out;
  for (const auto& s : trace) out += indent + render_step(s, trace) + "\n";
  return out;
}

std::string render_extension(const Extension& e, const std::string& indent) {
  std::string out;
  out += indent + "proven:";
  if (e.proven.empty()) out += " (none)";
  for (const auto& p : e.proven) {
    out += "\n" + indent + "  " + std::string(symbol(p.tag)) + " " + to_string(p.literal);
    if (p.count > 1) out += " x" + std::to_string(p.count);
    if (p.consumed_count) out += " (consumed " + std::to_string(p.consumed_count) + ")";
  }
  out += "\n" + indent + "refuted:";
  for (const auto& r : e.refuted) out += " " + std::string(symbol(r.tag)) + " " + to_string(r.literal) + ";";
  if (e.refuted.empty()) out += " (none)";
  out += "\n" + indent + "supported:";
  for (const auto& s : e.supported) out += " " + to_string(s);
  if (e.supported.empty()) out += " (none)";
  out += "\n";
  if (e.cyclic) out += indent + "cyclic: production still possible when the step budget ran out\n";
  if (e.inconsistent) out += indent + "inconsistent: a literal and its complement are both strictly proven\n";
  return out;
}

}  // namespace rsdl::cli
