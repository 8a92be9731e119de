#include <algorithm>
#include <functional>
#include <set>

#include "compiled_theory.hpp"

namespace rsdl::detail {

Context::Context(const DerivationState& s) : s_(s), ct_(StateAccess::ct(s)) {
  for (int i = 0; i < 2; ++i) {
    applicable_[i].assign(ct_.rules.size(), unknown);
    consumable_[i].assign(ct_.rules.size(), unknown);
    discarded_[i].assign(ct_.rules.size(), unknown);
  }
}

std::uint32_t Context::proven(LitId x, Strength st) const {
  std::uint32_t n = StateAccess::proven_delta(s_, x);
  return st == Strength::delta ? n : n + StateAccess::proven_partial(s_, x);
}

std::uint32_t Context::unused(LitId x, Strength st) const {
  std::uint32_t n = StateAccess::unused_delta(s_, x);
  return st == Strength::delta ? n : n + StateAccess::unused_partial(s_, x);
}

bool Context::refuted(LitId x, Strength st) const {
  return StateAccess::flags(s_, x) & (st == Strength::delta ? kRefutedDelta : kRefutedPartial);
}

bool Context::seq_embeds(const CompiledRule& r, Strength st, bool unused_only) const {
  std::size_t j = 0;
  for (const auto& rec : StateAccess::log(s_)) {
    if (j == r.body.size()) break;
    if (rec.lit == r.body[j] && counts_as(rec, st) && (!unused_only || !rec.consumed_at)) ++j;
  }
  return j == r.body.size();
}

const std::vector<bool>& Context::producible(Strength st) {
  auto& cache = producible_[slot(st)];
  if (cache) return *cache;
  std::vector<bool> prod(ct_.literal_count(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : ct_.rules) {
      if (st == Strength::delta ? r.kind != RuleKind::strict : r.kind == RuleKind::defeater) continue;
      bool ok = std::none_of(r.body.begin(), r.body.end(), [&](LitId y) { return refuted(y, st); });
      for (const auto& [y, m] : r.body_counts)
        if (ok && unused(y, st) < m && !prod[y]) ok = false;
      if (!ok) continue;
      for (LitId h : r.head)
        if (!prod[h] && !refuted(h, st)) prod[h] = changed = true;
    }
  }
  cache = std::move(prod);
  return *cache;
}

bool Context::seq_discarded(const CompiledRule& r, Strength st) {
  if (std::any_of(r.body.begin(), r.body.end(), [&](LitId y) { return refuted(y, st); })) return true;
  std::size_t j = 0;
  for (const auto& rec : StateAccess::log(s_)) {
    if (j == r.body.size()) break;
    if (rec.lit == r.body[j] && counts_as(rec, st)) ++j;
  }
  const auto& prod = producible(st);
  for (; j < r.body.size(); ++j)
    if (!prod[r.body[j]]) return true;
  return false;
}

bool Context::applicable(std::uint32_t ri, Strength st) {
  auto& c = applicable_[slot(st)][ri];
  if (c == unknown) {
    const auto& r = ct_.rules[ri];
    bool v;
    if (r.body_kind == BodyKind::sequence) {
      v = seq_embeds(r, st, false);
    } else {
      v = std::all_of(r.body_counts.begin(), r.body_counts.end(),
                      [&](const auto& p) { return proven(p.first, st) >= p.second; });
    }
    c = v ? yes : no;
  }
  return c == yes;
}

bool Context::consumable(std::uint32_t ri, Strength st) {
  auto& c = consumable_[slot(st)][ri];
  if (c == unknown) {
    const auto& r = ct_.rules[ri];
    bool v;
    if (r.body_kind == BodyKind::sequence) {
      v = seq_embeds(r, st, true);
    } else {
      v = std::all_of(r.body_counts.begin(), r.body_counts.end(),
                      [&](const auto& p) { return unused(p.first, st) >= p.second; });
    }
    c = v ? yes : no;
  }
  return c == yes;
}

bool Context::discarded(std::uint32_t ri, Strength st) {
  auto& c = discarded_[slot(st)][ri];
  if (c == unknown) {
    const auto& r = ct_.rules[ri];
    bool v;
    if (r.body_kind == BodyKind::sequence) {
      v = seq_discarded(r, st);
    } else {
      v = std::any_of(r.body.begin(), r.body.end(), [&](LitId y) { return refuted(y, st); });
    }
    c = v ? yes : no;
  }
  return c == yes;
}

bool Context::strict_refutable(LitId x) {
  if (ct_.is_fact[x] || StateAccess::proven_delta(s_, x)) return false;
  for (std::uint32_t r : ct_.heads[x]) {
    if (ct_.rules[r].kind != RuleKind::strict) continue;
    if (!discarded(r, Strength::delta) && applicable(r, Strength::delta)) return false;
  }
  return true;
}

bool Context::defeasible_refutable(LitId x) {
  if (!refuted(x, Strength::delta) || refuted(x, Strength::partial)) return false;
  if (StateAccess::proven_delta(s_, x) || StateAccess::proven_partial(s_, x) || StateAccess::mirrors(s_, x))
    return false;
  const LitId c = comp(x);
  if (StateAccess::proven_delta(s_, c)) return true;
  for (std::uint32_t r : ct_.heads[x]) {
    if (ct_.rules[r].kind == RuleKind::defeater) continue;
    if (discarded(r, Strength::partial)) continue;
    bool blocked = false;
    for (std::uint32_t s : ct_.heads[c]) {
      if (!applicable(s, Strength::sigma)) continue;
      bool unbeaten = std::all_of(ct_.heads[x].begin(), ct_.heads[x].end(), [&](std::uint32_t t) {
        return discarded(t, Strength::partial) || !ct_.beats(t, s);
      });
      if (unbeaten) {
        blocked = true;
        break;
      }
    }
    if (!blocked) return false;
  }
  return true;
}

bool Context::supportable(LitId x) {
  if (StateAccess::flags(s_, x) & kSupported) return false;
  if (StateAccess::proven_delta(s_, x)) return true;
  const LitId c = comp(x);
  for (std::uint32_t r : ct_.heads[x]) {
    if (ct_.rules[r].kind == RuleKind::defeater || !applicable(r, Strength::sigma)) continue;
    bool ok = std::all_of(ct_.heads[c].begin(), ct_.heads[c].end(),
                          [&](std::uint32_t s) { return discarded(s, Strength::partial) || !ct_.beats(s, r); });
    if (ok) return true;
  }
  return false;
}

const std::vector<bool>& Context::ordered_literals() {
  if (ordered_) return *ordered_;
  std::vector<bool> ordered(ct_.literal_count(), false);
  for (std::uint32_t ri = 0; ri < ct_.rules.size(); ++ri) {
    const auto& r = ct_.rules[ri];
    if (r.body_kind != BodyKind::sequence) continue;
    if (discarded(ri, Strength::delta) && discarded(ri, Strength::partial)) continue;
    for (LitId y : r.body) ordered[y] = true;
  }
  ordered_ = std::move(ordered);
  return *ordered_;
}

namespace {

// Unused instances of one literal, oldest first, split by class.
struct Pools {
  std::vector<std::vector<std::uint32_t>> delta, partial;
};

Pools collect_pools(const DerivationState& s, const CompiledTheory& ct, Strength st) {
  Pools p;
  p.delta.assign(ct.literal_count(), {});
  p.partial.assign(ct.literal_count(), {});
  const auto& log = StateAccess::log(s);
  for (std::uint32_t i = 0; i < log.size(); ++i) {
    const auto& r = log[i];
    if (r.consumed_at || !counts_as(r, st)) continue;
    (r.tag == Tag::plus_delta ? p.delta : p.partial)[r.lit].push_back(i);
  }
  return p;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> Context::plans(const std::vector<std::uint32_t>& payers, Strength st,
                                                       bool every) {
  std::vector<std::vector<std::uint32_t>> out;
  const auto& ordered = ordered_literals();
  bool any_ordered = every;
  for (std::uint32_t r : payers)
    for (LitId y : ct_.rules[r].body) any_ordered = any_ordered || ordered[y];
  if (!any_ordered) {
    // Instances of one literal and class are interchangeable here: only
    // choose how many of each class to take, oldest first.
    std::vector<std::uint32_t> need(ct_.literal_count(), 0);
    for (std::uint32_t r : payers)
      for (const auto& [y, m] : ct_.rules[r].body_counts) need[y] += m;
    Pools pools = collect_pools(s_, ct_, st);
    std::vector<LitId> lits;
    for (LitId y = 0; y < need.size(); ++y)
      if (need[y]) lits.push_back(y);
    std::vector<std::uint32_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == lits.size()) {
        auto plan = cur;
        std::sort(plan.begin(), plan.end());
        out.push_back(std::move(plan));
        return;
      }
      const LitId y = lits[i];
      const auto& d = pools.delta[y];
      const auto& p = pools.partial[y];
      const std::uint32_t m = need[y];
      for (std::uint32_t k = std::min<std::uint32_t>(m, d.size()) + 1; k-- > 0;) {
        if (m - k > p.size()) break;
        const std::size_t mark = cur.size();
        cur.insert(cur.end(), d.begin(), d.begin() + k);
        cur.insert(cur.end(), p.begin(), p.begin() + (m - k));
        rec(i + 1);
        cur.resize(mark);
      }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Instance identity matters for ordered literals: enumerate them all.
  // Other literals are still taken oldest first within their class.
  const auto& log = StateAccess::log(s_);
  std::vector<std::uint32_t> usable;
  std::vector<std::int64_t> older(log.size(), -1);  // previous usable instance of the same literal and class
  {
    std::vector<std::int64_t> last(ct_.literal_count() * 2, -1);
    for (std::uint32_t i = 0; i < log.size(); ++i) {
      if (log[i].consumed_at || !counts_as(log[i], st)) continue;
      usable.push_back(i);
      if (every || ordered[log[i].lit]) continue;
      auto& l = last[log[i].lit * 2 + (log[i].tag == Tag::plus_delta ? 1 : 0)];
      older[i] = l;
      l = i;
    }
  }
  std::vector<bool> taken(log.size(), false);
  auto allowed = [&](std::uint32_t i) { return !taken[i] && (older[i] < 0 || taken[older[i]]); };
  std::set<std::vector<std::uint32_t>> found;
  std::vector<std::uint32_t> cur;

  std::function<void(std::size_t)> payer;
  std::function<void(std::size_t, std::size_t, std::size_t)> seq;
  std::function<void(std::size_t, std::size_t, std::size_t, std::size_t)> ms;

  payer = [&](std::size_t pi) {
    if (pi == payers.size()) {
      auto plan = cur;
      std::sort(plan.begin(), plan.end());
      found.insert(std::move(plan));
      return;
    }
    const auto& r = ct_.rules[payers[pi]];
    if (r.body_kind == BodyKind::sequence) seq(pi, 0, 0);
    else ms(pi, 0, 0, 0);
  };
  // Sequence: body position j placed at a usable index >= from.
  seq = [&](std::size_t pi, std::size_t j, std::size_t from) {
    const auto& r = ct_.rules[payers[pi]];
    if (j == r.body.size()) return payer(pi + 1);
    for (std::size_t u = from; u < usable.size(); ++u) {
      const auto i = usable[u];
      if (!allowed(i) || log[i].lit != r.body[j]) continue;
      taken[i] = true;
      cur.push_back(i);
      seq(pi, j + 1, u + 1);
      cur.pop_back();
      taken[i] = false;
    }
  };
  // Multiset: for body_counts[c], choose `left` more instances at usable index >= from.
  ms = [&](std::size_t pi, std::size_t c, std::size_t from, std::size_t chosen) {
    const auto& r = ct_.rules[payers[pi]];
    if (c == r.body_counts.size()) return payer(pi + 1);
    const auto [y, m] = r.body_counts[c];
    if (chosen == m) return ms(pi, c + 1, 0, 0);
    for (std::size_t u = from; u < usable.size(); ++u) {
      const auto i = usable[u];
      if (!allowed(i) || log[i].lit != y) continue;
      taken[i] = true;
      cur.push_back(i);
      ms(pi, c, u + 1, chosen + 1);
      cur.pop_back();
      taken[i] = false;
    }
  };
  payer(0);
  out.assign(found.begin(), found.end());
  return out;
}

MemberStatus evaluate_member(Context& cx, LitId h) {
  const auto& ct = cx.ct();
  MemberStatus ms;
  const std::string name = to_string(ct.literal(h));
  if (cx.refuted(h, Strength::partial)) {
    ms.reason = FailureReason::coherence;
    ms.detail = "-∂ " + name + " already established";
    return ms;
  }
  const LitId c = comp(h);
  if (!cx.refuted(c, Strength::delta)) {
    if (cx.strict_refutable(c)) {
      ms.needs_auto = true;
    } else {
      ms.reason = FailureReason::strict_opposite;
      ms.detail = "-Δ " + to_string(ct.literal(c)) + " cannot be established";
      return ms;
    }
  }
  for (std::uint32_t s : ct.heads[c]) {
    if (cx.discarded(s, Strength::partial)) continue;
    Fight f{s, {}};
    for (std::uint32_t t : ct.heads[h])
      if (ct.beats(t, s) && cx.consumable(t, Strength::partial)) f.candidates.push_back(t);
    if (f.candidates.empty()) {
      ms.reason = FailureReason::undefeated_attacker;
      ms.detail = "attacker " + ct.rules[s].label + " not discarded and no consumable t ≻ " + ct.rules[s].label;
      ms.fights.clear();
      return ms;
    }
    if (cx.applicable(s, Strength::partial)) ms.fights.push_back(std::move(f));
  }
  ms.pass = true;
  return ms;
}

std::vector<std::size_t> emitted_positions(const CompiledRule& r, const std::vector<MemberStatus>& st,
                                           HeadVariant variant) {
  std::vector<std::size_t> out;
  switch (r.head_kind) {
    case HeadKind::single:
      if (st[0].pass) out.push_back(0);
      break;
    case HeadKind::multiset:
      for (std::size_t i = 0; i < st.size(); ++i) {
        if (st[i].pass) out.push_back(i);
        else if (variant == HeadVariant::whole_head) return {};
      }
      break;
    case HeadKind::sequence:
      for (std::size_t i = 0; i < st.size() && st[i].pass; ++i) out.push_back(i);
      break;
  }
  return out;
}

std::vector<std::size_t> strict_positions(const Context& cx, const CompiledRule& r) {
  std::vector<MemberStatus> st(r.head.size());
  for (std::size_t i = 0; i < r.head.size(); ++i) st[i].pass = !cx.refuted(r.head[i], Strength::delta);
  return emitted_positions(r, st, cx.ct().theory.config.head_variant);
}

}  // namespace rsdl::detail
