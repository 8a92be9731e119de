#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "render.hpp"
#include "rsdl/engine.hpp"
#include "rsdl/enumerate.hpp"
#include "rsdl/parser.hpp"
#include "rsdl/rank.hpp"

namespace rsdl::cli {

namespace {

struct CliError {
  int code;
  std::string message;
};

struct Options {
  std::string input = "-";
  std::string head_variant = "per-literal";
  std::optional<std::size_t> max_steps;
  std::string tie_break = "lexicographic";
  std::string format;
  bool trace = false;
  std::size_t workers = 1;
  std::string costs;
  std::string goal;
  std::string literal;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CliError{io_error, "cannot read " + path};
  std::ostringstream ss;
  ss << f.rdbuf();
  if (f.bad()) throw CliError{io_error, "error reading " + path};
  return ss.str();
}

std::string theory_name(const std::string& path) {
  if (path == "-") return "stdin";
  return std::filesystem::path(path).stem().string();
}

std::size_t default_max_steps() {
  const char* env = std::getenv("RSDL_MAX_STEPS");
  if (!env || !*env) return ReasonerConfig{}.max_steps;
  std::size_t v = 0;
  std::string_view s(env);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || v == 0)
    throw CliError{user_error, "RSDL_MAX_STEPS must be a positive integer, got '" + std::string(s) + "'"};
  return v;
}

ReasonerConfig config_from(const Options& o) {
  ReasonerConfig c;
  c.head_variant = o.head_variant == "whole" ? HeadVariant::whole_head : HeadVariant::per_literal;
  c.max_steps = o.max_steps ? *o.max_steps : default_max_steps();
  c.tie_break = o.tie_break == "declaration" ? TieBreak::declaration : TieBreak::lexicographic;
  return c;
}

Theory load(const Options& o, std::istream& in, std::ostream& err) {
  const std::string text = read_input(o.input, in);
  ParseResult r = parse_theory(text, config_from(o));
  if (!r.ok()) {
    const std::string where = o.input == "-" ? "<stdin>" : o.input;
    for (const auto& d : r.diagnostics) err << where << ":" << to_string(d) << "\n";
    throw CliError{user_error, ""};
  }
  return std::move(r.theory);
}

Literal parse_literal(const std::string& s) {
  Literal q = !s.empty() && s.front() == '~' ? neg(s.substr(1)) : pos(s);
  if (!is_identifier(q.atom)) throw CliError{user_error, "invalid literal '" + s + "'"};
  return q;
}

bool mentions(const Theory& t, const Literal& q) {
  auto same = [&](const Literal& x) { return x.atom == q.atom; };
  if (std::any_of(t.facts.begin(), t.facts.end(), same)) return true;
  return std::any_of(t.rules.begin(), t.rules.end(), [&](const Rule& r) {
    return std::any_of(r.body.items.begin(), r.body.items.end(), same) ||
           std::any_of(r.head.items.begin(), r.head.items.end(), same);
  });
}

bool any_inconsistent(const std::vector<Extension>& exts) {
  return std::any_of(exts.begin(), exts.end(), [](const Extension& e) { return e.inconsistent; });
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Theory t = load(o, in, err);
  out << "ok: " << t.facts.size() << " facts, " << t.rules.size() << " rules, " << t.superiority.size()
      << " superiority pairs\n";
  return ok;
}

int cmd_enumerate(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Theory t = load(o, in, err);
  auto result = enumerate_extensions(t, {o.workers, o.trace});
  const auto& exts = result.extensions;
  if (o.format == "json") {
    Json list = Json::array();
    for (const auto& e : exts) list.push_back(extension_json(e, o.trace));
    out << document(theory_name(o.input), t.config, std::move(list)).dump(2) << "\n";
  } else {
    out << exts.size() << (exts.size() == 1 ? " extension\n" : " extensions\n");
    for (std::size_t i = 0; i < exts.size(); ++i) {
      out << "\nextension " << i + 1 << "\n" << render_extension(exts[i], "  ");
      if (o.trace) out << "  trace:\n" << render_trace(exts[i].trace, "    ");
    }
  }
  return any_inconsistent(exts) ? strict_inconsistency : ok;
}

int cmd_derive(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Theory t = load(o, in, err);
  Extension e = derive_deterministic(t);
  if (o.format == "json") {
    Json list = Json::array();
    list.push_back(extension_json(e, true));
    out << document(theory_name(o.input), t.config, std::move(list)).dump(2) << "\n";
  } else {
    out << render_extension(e) << "trace:\n" << render_trace(e.trace, "  ");
  }
  return e.inconsistent ? strict_inconsistency : ok;
}

int cmd_rank(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Theory t = load(o, in, err);
  CostMap costs;
  if (!o.costs.empty()) {
    std::ifstream f(o.costs, std::ios::binary);
    if (!f) throw CliError{io_error, "cannot read " + o.costs};
    std::ostringstream ss;
    ss << f.rdbuf();
    try {
      costs = CostMap::parse(ss.str());
    } catch (const std::invalid_argument& e) {
      throw CliError{user_error, o.costs + ": " + e.what()};
    }
  }
  auto exts = enumerate_extensions(t, {o.workers, o.trace}).extensions;
  const bool inconsistent = any_inconsistent(exts);
  if (!o.goal.empty()) {
    const Literal g = parse_literal(o.goal);
    std::erase_if(exts, [&](const Extension& e) { return !e.has(g, Tag::plus_partial); });
  }
  auto ranked = rank_extensions(std::move(exts), costs);
  if (o.format == "json") {
    Json list = Json::array();
    for (const auto& r : ranked) list.push_back(extension_json(r.extension, o.trace, r.cost));
    out << document(theory_name(o.input), t.config, std::move(list)).dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      out << (i ? "\n" : "") << "#" << i + 1 << " cost " << format_weight(ranked[i].cost) << "\n"
          << render_extension(ranked[i].extension, "  ");
      if (o.trace) out << "  trace:\n" << render_trace(ranked[i].extension.trace, "    ");
    }
  }
  return inconsistent ? strict_inconsistency : ok;
}

// Rules for ∼q that are σ-applicable in s: the attackers behind an ambiguity-propagating -∂ q.
std::vector<std::string> sigma_attackers(const DerivationState& s, const Literal& q) {
  std::vector<std::string> out;
  for (const Rule& r : s.theory().rules) {
    if (!r.has_in_head(complement(q))) continue;
    const bool app = r.body.kind == BodyKind::sequence ? is_sequence_applicable(s, r.label, Strength::sigma)
                                                       : is_applicable(s, r.label, Strength::sigma);
    if (app) out.push_back(r.label);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int cmd_explain(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Theory t = load(o, in, err);
  const Literal q = parse_literal(o.literal);
  if (!mentions(t, q)) throw CliError{user_error, "literal " + o.literal + " does not occur in the theory"};

  const auto exts = enumerate_extensions(t, {o.workers, false}).extensions;
  const DerivationState det = derive_deterministic_state(t);
  const std::size_t n = exts.size();

  struct Row {
    Tag tag;
    std::size_t count;
    std::vector<std::string> blocked_by;  // σ-applicable attackers behind a -∂
    std::string failure;                  // why the deterministic branch lacks the tag
  };
  std::vector<Row> rows;
  for (Tag tag : {Tag::plus_delta, Tag::minus_delta, Tag::plus_partial, Tag::minus_partial, Tag::plus_sigma}) {
    Row row{tag, static_cast<std::size_t>(std::count_if(exts.begin(), exts.end(),
                                                        [&](const Extension& e) { return e.has(q, tag); })),
            {}, {}};
    if (det.has(q, tag)) {
      if (tag == Tag::minus_partial) row.blocked_by = sigma_attackers(det, q);
    } else {
      StepResult r = [&]() -> StepResult {
        switch (tag) {
          case Tag::plus_delta: return step_strict(det, q);
          case Tag::minus_delta: return refute_strict(det, q);
          case Tag::plus_partial: return step_defeasible(det, q);
          case Tag::minus_partial: return refute_defeasible(det, q);
          case Tag::plus_sigma: return support(det, q);
        }
        return rsdl::Failure{FailureReason::no_consumable_rule, ""};
      }();
      if (!r.ok()) row.failure = r.failure().message;
    }
    rows.push_back(std::move(row));
  }

  if (o.format == "json") {
    Json tags = Json::array();
    for (const auto& r : rows) {
      Json j{{"tag", json_name(r.tag)}, {"extensions", r.count}};
      if (!r.blocked_by.empty()) j["blocked_by"] = r.blocked_by;
      if (!r.failure.empty()) j["deterministic_failure"] = r.failure;
      tags.push_back(std::move(j));
    }
    Json doc{{"theory", theory_name(o.input)}, {"config", config_json(t.config)}, {"literal", to_string(q)},
             {"extensions", n}, {"tags", std::move(tags)}};
    out << doc.dump(2) << "\n";
  } else {
    out << "explain " << to_string(q) << " (" << n << (n == 1 ? " extension)\n" : " extensions)\n");
    for (const auto& r : rows) {
      out << symbol(r.tag) << " in " << r.count << "/" << n << " extensions";
      if (!r.blocked_by.empty()) {
        out << "; blocked by σ-applicable";
        for (std::size_t i = 0; i < r.blocked_by.size(); ++i) out << (i ? ", " : " ") << r.blocked_by[i];
      }
      if (!r.failure.empty()) out << "; deterministic branch: " << r.failure;
      out << "\n";
    }
  }
  return any_inconsistent(exts) ? strict_inconsistency : ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resource-sensitive defeasible logic reasoner", "rsdl"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool reasoning, const char* default_format) {
    sub->add_option("theory", o.input, "Theory file (.rsdl); '-' or omitted reads standard input");
    if (!reasoning) return;
    sub->add_option("--head-variant", o.head_variant, "Multiset-head variant")
        ->check(CLI::IsMember({"whole", "per-literal"}));
    sub->add_option("--max-steps", o.max_steps, "Bound on proven instances (default 1000, or RSDL_MAX_STEPS)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tie-break", o.tie_break, "Rule order at choice points")
        ->check(CLI::IsMember({"lexicographic", "declaration"}));
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->callback([&o, default_format] {
      if (o.format.empty()) o.format = default_format;
    });
  };

  auto* check = app.add_subcommand("check", "Parse and validate a theory");
  common(check, false, "text");
  auto* derive = app.add_subcommand("derive", "Single deterministic derivation with its trace");
  common(derive, true, "text");
  auto* enumerate = app.add_subcommand("enumerate", "Every distinct extension");
  common(enumerate, true, "json");
  enumerate->add_flag("--trace", o.trace, "Include one representative trace per extension");
  enumerate->add_option("--workers", o.workers, "Parallel enumeration workers")->check(CLI::PositiveNumber);
  auto* rank = app.add_subcommand("rank", "Extensions ordered by consumed cost");
  common(rank, true, "json");
  rank->add_option("costs", o.costs, "Cost file: '<literal> <weight>' per line; unlisted literals weigh 1");
  rank->add_flag("--trace", o.trace, "Include one representative trace per extension");
  rank->add_option("--goal", o.goal, "Keep only extensions that defeasibly prove this literal");
  rank->add_option("--workers", o.workers, "Parallel enumeration workers")->check(CLI::PositiveNumber);
  auto* explain = app.add_subcommand("explain", "Which tags a literal gets, and why not");
  common(explain, true, "text");
  explain->add_option("literal", o.literal, "Literal to explain, e.g. cola or ~cola")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : user_error;
  }

  try {
    if (*check) return cmd_check(o, in, out, err);
    if (*derive) return cmd_derive(o, in, out, err);
    if (*enumerate) return cmd_enumerate(o, in, out, err);
    if (*rank) return cmd_rank(o, in, out, err);
    if (*explain) return cmd_explain(o, in, out, err);
  } catch (const CliError& f) {
    if (!f.message.empty()) err << "rsdl: " << f.message << "\n";
    return f.code;
  } catch (const InvalidTheory& e) {
    err << "rsdl: " << e.what() << "\n";
    return user_error;
  }
  return user_error;
}

}  // namespace rsdl::cli
