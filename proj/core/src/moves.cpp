#include <set>

#include "compiled_theory.hpp"

namespace rsdl {

using detail::Context;
using detail::LitId;
using detail::StateAccess;

std::string_view to_string(MoveKind k) {
  switch (k) {
    case MoveKind::strict_step: return "strict-step";
    case MoveKind::defeasible_step: return "defeasible-step";
    case MoveKind::refute_strict: return "refute-strict";
    case MoveKind::refute_defeasible: return "refute-defeasible";
    case MoveKind::support_step: return "support";
  }
  return "?";
}

std::string to_string(const Move& m) {
  std::string out;
  switch (m.kind) {
    case MoveKind::strict_step: out = "+Δ "; break;
    case MoveKind::defeasible_step: out = "+∂ "; break;
    case MoveKind::refute_strict: out = "-Δ "; break;
    case MoveKind::refute_defeasible: out = "-∂ "; break;
    case MoveKind::support_step: out = "+σ "; break;
  }
  if (m.emits.empty()) {
    out += to_string(m.target);
  } else {
    for (std::size_t i = 0; i < m.emits.size(); ++i) out += (i ? ", " : "") + to_string(m.emits[i]);
  }
  if (m.via) out += " via " + *m.via;
  else if (m.kind == MoveKind::defeasible_step) out += " via strict shortcut";
  if (!m.consumption_plan.empty()) {
    out += " consuming [";
    for (std::size_t i = 0; i < m.consumption_plan.size(); ++i)
      out += (i ? ", " : "") + std::to_string(m.consumption_plan[i]);
    out += "]";
  }
  return out;
}

namespace detail {

namespace {

std::vector<std::size_t> to_indices(const std::vector<std::uint32_t>& plan) {
  std::vector<std::size_t> out;
  out.reserve(plan.size());
  for (auto p : plan) out.push_back(p + 1);
  return out;
}

void strict_firings(Context& cx, std::uint32_t ri, bool every, std::vector<Move>& out) {
  const auto& ct = cx.ct();
  const auto& r = ct.rules[ri];
  if (r.kind != RuleKind::strict || !cx.consumable(ri, Strength::delta)) return;
  auto pos = strict_positions(cx, r);
  if (pos.empty()) return;
  std::vector<Literal> emits;
  for (auto p : pos) emits.push_back(ct.literal(r.head[p]));
  for (const auto& plan : cx.plans({ri}, Strength::delta, every)) {
    Move m;
    m.kind = MoveKind::strict_step;
    m.target = emits.front();
    m.via = r.label;
    m.consumption_plan = to_indices(plan);
    m.emits = emits;
    out.push_back(std::move(m));
  }
}

void defeasible_firings(Context& cx, std::uint32_t ri, bool every, std::vector<Move>& out) {
  const auto& ct = cx.ct();
  const auto& r = ct.rules[ri];
  if (r.kind == RuleKind::defeater || !cx.consumable(ri, Strength::partial)) return;
  std::vector<MemberStatus> status;
  status.reserve(r.head.size());
  for (LitId h : r.head) status.push_back(evaluate_member(cx, h));
  auto pos = emitted_positions(r, status, ct.theory.config.head_variant);
  if (pos.empty()) return;

  std::vector<Literal> emits, autos;
  std::vector<const Fight*> fights;
  std::set<LitId> auto_seen;
  for (auto p : pos) {
    emits.push_back(ct.literal(r.head[p]));
    if (status[p].needs_auto && auto_seen.insert(comp(r.head[p])).second)
      autos.push_back(ct.literal(comp(r.head[p])));
    for (const auto& f : status[p].fights) fights.push_back(&f);
  }

  // Every way of picking one winner per live fight; the distinct winners pay.
  std::set<std::vector<std::uint32_t>> teams;
  std::vector<std::size_t> pick(fights.size(), 0);
  for (;;) {
    std::set<std::uint32_t> t;
    for (std::size_t i = 0; i < fights.size(); ++i) t.insert(fights[i]->candidates[pick[i]]);
    teams.emplace(t.begin(), t.end());
    std::size_t i = 0;
    for (; i < fights.size(); ++i) {
      if (++pick[i] < fights[i]->candidates.size()) break;
      pick[i] = 0;
    }
    if (i == fights.size()) break;
  }

  for (const auto& team : teams) {
    std::vector<std::uint32_t> payers = team.empty() ? std::vector<std::uint32_t>{ri} : team;
    for (const auto& plan : cx.plans(payers, Strength::partial, every)) {
      Move m;
      m.kind = MoveKind::defeasible_step;
      m.target = emits.front();
      m.via = r.label;
      m.consumption_plan = to_indices(plan);
      m.emits = emits;
      m.auto_refuted = autos;
      for (auto t : team) m.team.push_back(ct.rules[t].label);
      out.push_back(std::move(m));
    }
  }
}

}  // namespace

std::vector<Move> generate_moves(const DerivationState& s, bool ignore_budget, bool productions_only,
                                 bool every_plan) {
  std::vector<Move> out;
  Context cx(s);
  const auto& ct = cx.ct();
  // Strict inconsistency stops rule firings; refutations and support continue.
  if (!s.inconsistent() && (ignore_budget || s.productions() < ct.theory.config.max_steps)) {
    for (std::uint32_t ri = 0; ri < ct.rules.size(); ++ri) {
      strict_firings(cx, ri, every_plan, out);
      defeasible_firings(cx, ri, every_plan, out);
    }
  }
  if (productions_only) return out;

  auto simple = [&](MoveKind k, LitId x) {
    Move m;
    m.kind = k;
    m.target = ct.literal(x);
    out.push_back(std::move(m));
  };
  for (LitId x : ct.signature)
    if (!cx.refuted(x, Strength::delta) && cx.strict_refutable(x)) simple(MoveKind::refute_strict, x);
  for (LitId x : ct.signature)
    if (cx.defeasible_refutable(x)) simple(MoveKind::refute_defeasible, x);
  for (LitId x : ct.signature)
    if (cx.supportable(x)) simple(MoveKind::support_step, x);
  for (LitId x : ct.signature)
    if (StateAccess::proven_delta(s, x) > StateAccess::mirrors(s, x)) simple(MoveKind::defeasible_step, x);
  return out;
}

}  // namespace detail

std::vector<Move> enabled_moves(const DerivationState& s) { return detail::generate_moves(s, false, false, true); }

bool has_pending_production(const DerivationState& s) { return !detail::generate_moves(s, true, true).empty(); }

DerivationState apply(const DerivationState& s, const Move& m) {
  if (s.inconsistent() && m.via) throw EngineError("no rule fires in an inconsistent state");
  DerivationState n = s;
  const auto& ct = StateAccess::ct(n);
  const auto move_id = static_cast<std::uint32_t>(n.size() + 1);
  auto lit = [&](const Literal& q) {
    auto x = ct.find(q);
    if (!x) throw EngineError("unknown literal " + to_string(q));
    return *x;
  };
  auto record = [&](LitId x, Tag t, JustificationKind j) {
    StateAccess::Record r;
    r.lit = x;
    r.tag = t;
    r.just = j;
    r.move = move_id;
    return r;
  };

  switch (m.kind) {
    case MoveKind::strict_step:
    case MoveKind::defeasible_step: {
      if (!m.via) {
        if (m.kind != MoveKind::defeasible_step) throw EngineError("strict step without a rule");
        const LitId x = lit(m.target);
        if (StateAccess::proven_delta(n, x) <= StateAccess::mirrors(n, x))
          throw EngineError("no +Δ " + to_string(m.target) + " instance left to mirror");
        StateAccess::append(n, record(x, Tag::plus_partial, JustificationKind::strict_shortcut));
        break;
      }
      auto ri = ct.rule_index(*m.via);
      if (!ri) throw EngineError("unknown rule " + *m.via);
      if (m.emits.empty()) throw EngineError("rule firing emits nothing");
      const bool strict = m.kind == MoveKind::strict_step;
      for (const auto& a : m.auto_refuted)
        StateAccess::append(n, record(lit(a), Tag::minus_delta, JustificationKind::refutation));
      const auto first = static_cast<std::uint32_t>(n.size() + 1);
      for (auto idx : m.consumption_plan) StateAccess::mark_consumed(n, static_cast<std::uint32_t>(idx), first);
      for (std::size_t k = 0; k < m.emits.size(); ++k) {
        auto r = record(lit(m.emits[k]), strict ? Tag::plus_delta : Tag::plus_partial, JustificationKind::rule);
        r.rule = static_cast<std::int32_t>(*ri);
        if (k == 0)
          for (auto idx : m.consumption_plan) r.consumed_from.push_back(static_cast<std::uint32_t>(idx));
        StateAccess::append(n, std::move(r));
      }
      StateAccess::add_productions(n, m.emits.size());
      if (strict)
        for (const auto& e : m.emits)
          if (StateAccess::proven_delta(n, detail::comp(lit(e)))) StateAccess::set_inconsistent(n);
      break;
    }
    case MoveKind::refute_strict:
      StateAccess::append(n, record(lit(m.target), Tag::minus_delta, JustificationKind::refutation));
      break;
    case MoveKind::refute_defeasible:
      StateAccess::append(n, record(lit(m.target), Tag::minus_partial, JustificationKind::refutation));
      break;
    case MoveKind::support_step:
      StateAccess::append(n, record(lit(m.target), Tag::plus_sigma, JustificationKind::support));
      break;
  }
  return n;
}

bool is_inert(const DerivationState& s, const Move& m) {
  const auto& ct = StateAccess::ct(s);
  switch (m.kind) {
    case MoveKind::support_step: return true;
    case MoveKind::defeasible_step: return !m.via.has_value();
    case MoveKind::strict_step: return false;
    case MoveKind::refute_strict: {
      auto x = ct.find(m.target);
      if (!x) return false;
      Context cx(s);
      for (auto r : ct.heads[*x])
        if (ct.rules[r].kind == RuleKind::strict && !cx.discarded(r, Strength::delta)) return false;
      return true;
    }
    case MoveKind::refute_defeasible: {
      auto x = ct.find(m.target);
      return x && !ct.in_body[*x];
    }
  }
  return false;
}

}  // namespace rsdl
