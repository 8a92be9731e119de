// Reference semantics written directly against the model types. Shares no
// code with the engine: states are plain vectors and bitmasks, and every
// move order and every concrete consumption plan is explored. The only
// shortcut is a memo of fully identical states (same pool in the same
// order with the same consumption marks, same tags), whose futures are
// necessarily identical.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "rsdl/extension.hpp"
#include "rsdl/literal.hpp"
#include "rsdl/oracle.hpp"
#include "rsdl/rule.hpp"
#include "rsdl/theory.hpp"

namespace rsdl::oracle {

namespace {

enum class Level { strict, defeasible };

using Lit = std::uint8_t;  // index into the sorted signature
using Mask = std::uint32_t;

struct ORule {
  std::string label;
  RuleKind kind;
  bool sequence_body = false;
  HeadKind head_kind;
  std::vector<Lit> body, head;
};

struct Instance {
  Lit lit = 0;
  bool strict = false;   // +Δ rather than +∂
  std::uint16_t step = 0;     // 0-based log position of the producing step
  std::uint16_t used_at = 0;  // 1-based index of the consuming step, 0 while unused
};

// Everything that decides the future. The log itself lives on the search path.
struct World {
  std::vector<Instance> pool;
  Mask minus_strict = 0, minus_defeasible = 0, supported = 0;
  std::array<std::uint8_t, 32> mirrored{};  // +∂ steps taken over from +Δ, per literal
  std::size_t logged = 0;
  std::size_t produced = 0;
  bool inconsistent = false;
};

// Log entry without strings; expanded into a DerivationStep at the leaves.
struct OStep {
  Lit lit = 0;
  Tag tag = Tag::plus_delta;
  JustificationKind justification = JustificationKind::fact;
  std::int16_t rule = -1;
  std::uint16_t move = 0;
  std::vector<std::uint16_t> consumed_from;
};

struct Child {
  World w;
  std::vector<OStep> steps;
};

struct Member {
  bool ok = false;
  bool needs_auto = false;
  std::vector<std::vector<std::size_t>> fights;  // winners available per live attacker
};

class Oracle {
 public:
  explicit Oracle(const Theory& t) : t_(t) {
    std::vector<Literal> sig;
    auto note = [&](const Literal& q) {
      if (std::find(sig.begin(), sig.end(), q) == sig.end()) sig.push_back(q);
    };
    for (const auto& r : t.rules) {
      for (const auto& q : r.body.items) note(q);
      for (const auto& q : r.head.items) note(q);
    }
    for (const auto& f : t.facts) note(f);
    // Ids also cover complements, which auto −Δ steps may tag.
    names_ = sig;
    for (const auto& q : sig) {
      Literal o = q;
      o.polarity = q.negative() ? Polarity::positive : Polarity::negative;
      if (std::find(names_.begin(), names_.end(), o) == names_.end()) names_.push_back(o);
    }
    std::sort(names_.begin(), names_.end());
    if (names_.size() > 32) throw BoundsExceeded("too many literals for the oracle");
    auto id = [&](const Literal& q) {
      return static_cast<Lit>(std::find(names_.begin(), names_.end(), q) - names_.begin());
    };
    for (const auto& q : names_) {
      Literal o = q;
      o.polarity = q.negative() ? Polarity::positive : Polarity::negative;
      opposite_.push_back(id(o));
    }
    for (const auto& q : sig) signature_ |= bit(id(q));
    for (const auto& r : t.rules) {
      ORule o{r.label, r.kind, r.body.kind == BodyKind::sequence, r.head.kind, {}, {}};
      for (const auto& q : r.body.items) o.body.push_back(id(q));
      for (const auto& q : r.head.items) o.head.push_back(id(q));
      // Multisets are order-free; ids follow literal order, so sorting ids sorts literals.
      if (!o.sequence_body) std::sort(o.body.begin(), o.body.end());
      if (o.head_kind == HeadKind::multiset) std::sort(o.head.begin(), o.head.end());
      rules_.push_back(std::move(o));
    }
    is_fact_.assign(names_.size(), false);
    for (const auto& f : t.facts) is_fact_[id(f)] = true;
    concluding_.resize(names_.size());
    for (std::size_t i = 0; i < rules_.size(); ++i)
      for (Lit h : rules_[i].head)
        if (std::find(concluding_[h].begin(), concluding_[h].end(), i) == concluding_[h].end())
          concluding_[h].push_back(i);
    beats_.assign(rules_.size(), std::vector<bool>(rules_.size(), false));
    for (const auto& s : t.superiority)
      for (std::size_t a = 0; a < rules_.size(); ++a)
        for (std::size_t b = 0; b < rules_.size(); ++b)
          if (rules_[a].label == s.stronger && rules_[b].label == s.weaker) beats_[a][b] = true;
  }

  std::vector<Extension> run() {
    World w;
    // Facts form a multiset; their instances are laid out in literal order.
    std::vector<Literal> facts = t_.facts;
    std::sort(facts.begin(), facts.end());
    for (const auto& f : facts) {
      Lit x = static_cast<Lit>(std::find(names_.begin(), names_.end(), f) - names_.begin());
      w.pool.push_back({x, true, static_cast<std::uint16_t>(path_.size()), 0});
      path_.push_back(step(path_.size(), x, Tag::plus_delta, JustificationKind::fact));
      ++w.produced;
    }
    w.logged = path_.size();
    seen_.insert(key(w));
    explore(w);
    std::vector<Extension> out;
    for (auto& [e, trace] : found_) {
      Extension x = e;
      x.trace = trace;
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  static bool has(const std::vector<Lit>& v, Lit x) { return std::find(v.begin(), v.end(), x) != v.end(); }
  static Mask bit(Lit x) { return Mask{1} << x; }

  static OStep step(std::size_t at, Lit x, Tag tag, JustificationKind j, std::int16_t rule = -1,
                    std::size_t move = 0) {
    return {x, tag, j, rule, static_cast<std::uint16_t>(move ? move : at + 1), {}};
  }

  DerivationStep expand(const OStep& o, std::size_t index) const {
    DerivationStep d;
    d.index = index;
    d.tag = o.tag;
    d.literal = names_[o.lit];
    d.justification = o.justification;
    if (o.rule >= 0) d.rule = rules_[o.rule].label;
    d.move = o.move;
    d.consumed_from.assign(o.consumed_from.begin(), o.consumed_from.end());
    return d;
  }

  // Instances visible at a level: +Δ always, +∂ only above the strict level.
  static bool visible(const Instance& i, Level lv) { return i.strict || lv == Level::defeasible; }

  static std::size_t count(const World& w, Lit x, Level lv, bool unused_only) {
    std::size_t n = 0;
    for (const auto& i : w.pool)
      if (i.lit == x && visible(i, lv) && (!unused_only || !i.used_at)) ++n;
    return n;
  }

  static bool refuted(const World& w, Lit x, Level lv) {
    return ((lv == Level::strict ? w.minus_strict : w.minus_defeasible) & bit(x)) != 0;
  }

  static bool embeds(const World& w, const std::vector<Lit>& body, Level lv, bool unused_only) {
    std::size_t j = 0;
    for (const auto& i : w.pool)
      if (j < body.size() && i.lit == body[j] && visible(i, lv) && (!unused_only || !i.used_at)) ++j;
    return j == body.size();
  }

  // body is sorted, so equal literals are adjacent.
  static bool covers(const World& w, const std::vector<Lit>& body, Level lv, bool unused_only) {
    for (std::size_t j = 0; j < body.size();) {
      std::size_t k = j;
      while (k < body.size() && body[k] == body[j]) ++k;
      if (count(w, body[j], lv, unused_only) < k - j) return false;
      j = k;
    }
    return true;
  }

  bool applicable(const World& w, const ORule& r, Level lv) const {
    return r.sequence_body ? embeds(w, r.body, lv, false) : covers(w, r.body, lv, false);
  }

  bool consumable(const World& w, const ORule& r, Level lv) const {
    return r.sequence_body ? embeds(w, r.body, lv, true) : covers(w, r.body, lv, true);
  }

  // Literals some rule could still produce at this level, given what is
  // unused now plus what is itself producible.
  Mask producible(const World& w, Level lv) const {
    Mask prod = 0;
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& r : rules_) {
        if (lv == Level::strict && r.kind != RuleKind::strict) continue;
        if (lv == Level::defeasible && r.kind == RuleKind::defeater) continue;
        bool ok = true;
        std::vector<Lit> body = r.body;
        std::sort(body.begin(), body.end());
        for (std::size_t j = 0; ok && j < body.size();) {
          std::size_t k = j;
          while (k < body.size() && body[k] == body[j]) ++k;
          if (refuted(w, body[j], lv)) ok = false;
          if (count(w, body[j], lv, true) < k - j && !(prod & bit(body[j]))) ok = false;
          j = k;
        }
        if (!ok) continue;
        for (Lit h : r.head)
          if (!refuted(w, h, lv) && !(prod & bit(h))) {
            prod |= bit(h);
            grew = true;
          }
      }
    }
    return prod;
  }

  bool discarded(const World& w, const ORule& r, Level lv) const {
    for (Lit y : r.body)
      if (refuted(w, y, lv)) return true;
    if (!r.sequence_body) return false;
    // The sequence still has a chance if what is missing after the best
    // embedding into proven instances can be produced later.
    std::size_t j = 0;
    for (const auto& i : w.pool)
      if (j < r.body.size() && i.lit == r.body[j] && visible(i, lv)) ++j;
    if (j == r.body.size()) return false;
    const Mask prod = producible(w, lv);
    for (; j < r.body.size(); ++j)
      if (!(prod & bit(r.body[j]))) return true;
    return false;
  }

  const std::vector<std::size_t>& concluding(Lit x) const { return concluding_[x]; }

  bool strict_refutable(const World& w, Lit x) const {
    if (is_fact_[x] || count(w, x, Level::strict, false)) return false;
    for (auto i : concluding(x)) {
      const auto& r = rules_[i];
      if (r.kind == RuleKind::strict && applicable(w, r, Level::strict) && !discarded(w, r, Level::strict))
        return false;
    }
    return true;
  }

  bool defeasible_refutable(const World& w, Lit x) const {
    if (!refuted(w, x, Level::strict) || refuted(w, x, Level::defeasible)) return false;
    if (count(w, x, Level::defeasible, false) || w.mirrored[x]) return false;
    const Lit y = opposite_[x];
    if (count(w, y, Level::strict, false)) return true;
    for (auto ri : concluding(x)) {
      if (rules_[ri].kind == RuleKind::defeater || discarded(w, rules_[ri], Level::defeasible)) continue;
      bool blocked = false;
      for (auto si : concluding(y)) {
        if (!applicable(w, rules_[si], Level::defeasible)) continue;
        bool beaten = false;
        for (auto ti : concluding(x))
          if (beats_[ti][si] && !discarded(w, rules_[ti], Level::defeasible)) beaten = true;
        if (!beaten) blocked = true;
      }
      if (!blocked) return false;
    }
    return true;
  }

  bool supportable(const World& w, Lit x) const {
    if (w.supported & bit(x)) return false;
    if (count(w, x, Level::strict, false)) return true;
    for (auto ri : concluding(x)) {
      if (rules_[ri].kind == RuleKind::defeater || !applicable(w, rules_[ri], Level::defeasible)) continue;
      bool overruled = false;
      for (auto si : concluding(opposite_[x]))
        if (beats_[si][ri] && !discarded(w, rules_[si], Level::defeasible)) overruled = true;
      if (!overruled) return true;
    }
    return false;
  }

  Member member(const World& w, Lit h) const {
    Member m;
    if (refuted(w, h, Level::defeasible)) return m;
    const Lit y = opposite_[h];
    if (!refuted(w, y, Level::strict)) {
      if (!strict_refutable(w, y)) return m;
      m.needs_auto = true;
    }
    for (auto si : concluding(y)) {
      if (discarded(w, rules_[si], Level::defeasible)) continue;
      std::vector<std::size_t> winners;
      for (auto ti : concluding(h))
        if (beats_[ti][si] && consumable(w, rules_[ti], Level::defeasible)) winners.push_back(ti);
      if (winners.empty()) return m;
      if (applicable(w, rules_[si], Level::defeasible)) m.fights.push_back(winners);
    }
    m.ok = true;
    return m;
  }

  std::vector<std::size_t> emission(const ORule& r, const std::vector<bool>& ok) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ok.size(); ++i) {
      if (ok[i]) {
        out.push_back(i);
      } else if (r.head_kind == HeadKind::sequence) {
        break;
      } else if (r.head_kind == HeadKind::multiset && t_.config.head_variant == HeadVariant::whole_head) {
        return {};
      }
    }
    return out;
  }

  // Every set of pool positions that pays all bodies at once.
  std::set<std::vector<std::size_t>> plans(const World& w, const std::vector<std::size_t>& payers, Level lv) const {
    std::set<std::vector<std::size_t>> out;
    std::vector<bool> taken(w.pool.size(), false);
    std::function<void(std::size_t, std::size_t, std::size_t)> go = [&](std::size_t p, std::size_t j, std::size_t from) {
      if (p == payers.size()) {
        std::vector<std::size_t> plan;
        for (std::size_t i = 0; i < taken.size(); ++i)
          if (taken[i]) plan.push_back(i);
        out.insert(plan);
        return;
      }
      const auto& body = rules_[payers[p]].body;
      if (j == body.size()) return go(p + 1, 0, 0);
      // Sequences need increasing positions; sorted multisets may use the
      // same rule for repeated literals, so restart only on a new literal.
      std::size_t start = 0;
      if (rules_[payers[p]].sequence_body) start = from;
      else if (j > 0 && body[j] == body[j - 1]) start = from;
      for (std::size_t i = start; i < w.pool.size(); ++i) {
        const auto& inst = w.pool[i];
        if (taken[i] || inst.used_at || inst.lit != body[j] || !visible(inst, lv)) continue;
        taken[i] = true;
        go(p, j + 1, i + 1);
        taken[i] = false;
      }
    };
    go(0, 0, 0);
    return out;
  }

  Child fire(const World& w, std::size_t ri, const std::vector<std::size_t>& emit, const std::vector<Lit>& autos,
             const std::vector<std::size_t>& plan, bool strict) const {
    const auto& r = rules_[ri];
    Child c{w, {}};
    World& n = c.w;
    const std::size_t move = n.logged + 1;
    for (Lit a : autos) {
      n.minus_strict |= bit(a);
      c.steps.push_back(step(n.logged++, a, Tag::minus_delta, JustificationKind::refutation, -1, move));
    }
    const auto at = static_cast<std::uint16_t>(n.logged + 1);
    for (auto p : plan) n.pool[p].used_at = at;
    for (std::size_t k = 0; k < emit.size(); ++k) {
      const Lit h = r.head[emit[k]];
      n.pool.push_back({h, strict, static_cast<std::uint16_t>(n.logged), 0});
      c.steps.push_back(step(n.logged++, h, strict ? Tag::plus_delta : Tag::plus_partial, JustificationKind::rule,
                             static_cast<std::int16_t>(ri), move));
      if (k == 0)
        for (auto p : plan) c.steps.back().consumed_from.push_back(static_cast<std::uint16_t>(n.pool[p].step + 1));
    }
    n.produced += emit.size();
    if (strict)
      for (auto e : emit) {
        if (count(n, opposite_[r.head[e]], Level::strict, false)) n.inconsistent = true;
      }
    return c;
  }

  Child tag(const World& w, Lit x, Tag t, JustificationKind j) const {
    Child c{w, {}};
    c.steps.push_back(step(c.w.logged++, x, t, j));
    return c;
  }

  std::vector<Child> successors(const World& w, bool ignore_budget, bool firings_only) const {
    std::vector<Child> out;
    if (!w.inconsistent && (ignore_budget || w.produced < t_.config.max_steps)) {
      for (std::size_t ri = 0; ri < rules_.size(); ++ri) {
        const auto& r = rules_[ri];
        if (r.kind == RuleKind::strict && consumable(w, r, Level::strict)) {
          std::vector<bool> ok;
          for (Lit h : r.head) ok.push_back(!refuted(w, h, Level::strict));
          auto emit = emission(r, ok);
          if (!emit.empty())
            for (const auto& plan : plans(w, {ri}, Level::strict)) out.push_back(fire(w, ri, emit, {}, plan, true));
        }
        if (r.kind != RuleKind::defeater && consumable(w, r, Level::defeasible)) {
          std::vector<Member> members;
          std::vector<bool> ok;
          for (Lit h : r.head) {
            members.push_back(member(w, h));
            ok.push_back(members.back().ok);
          }
          auto emit = emission(r, ok);
          if (emit.empty()) continue;
          std::vector<Lit> autos;
          std::vector<std::vector<std::size_t>> fights;
          for (auto e : emit) {
            const Lit y = opposite_[r.head[e]];
            if (members[e].needs_auto && !has(autos, y)) autos.push_back(y);
            for (const auto& f : members[e].fights) fights.push_back(f);
          }
          std::set<std::vector<std::size_t>> teams;
          std::vector<std::size_t> team;
          std::function<void(std::size_t)> pick = [&](std::size_t i) {
            if (i == fights.size()) {
              std::set<std::size_t> s(team.begin(), team.end());
              teams.emplace(s.begin(), s.end());
              return;
            }
            for (auto tix : fights[i]) {
              team.push_back(tix);
              pick(i + 1);
              team.pop_back();
            }
          };
          pick(0);
          for (const auto& tm : teams) {
            std::vector<std::size_t> payers = tm.empty() ? std::vector<std::size_t>{ri} : tm;
            for (const auto& plan : plans(w, payers, Level::defeasible))
              out.push_back(fire(w, ri, emit, autos, plan, false));
          }
        }
      }
    }
    if (firings_only) return out;
    for (Lit x = 0; x < names_.size(); ++x) {
      if (!(signature_ & bit(x))) continue;
      if (!refuted(w, x, Level::strict) && strict_refutable(w, x)) {
        out.push_back(tag(w, x, Tag::minus_delta, JustificationKind::refutation));
        out.back().w.minus_strict |= bit(x);
      }
      if (defeasible_refutable(w, x)) {
        out.push_back(tag(w, x, Tag::minus_partial, JustificationKind::refutation));
        out.back().w.minus_defeasible |= bit(x);
      }
      if (supportable(w, x)) {
        out.push_back(tag(w, x, Tag::plus_sigma, JustificationKind::support));
        out.back().w.supported |= bit(x);
      }
      // +∂ x from +Δ x, once per +Δ instance; the instance itself stays the resource.
      if (count(w, x, Level::strict, false) > w.mirrored[x]) {
        out.push_back(tag(w, x, Tag::plus_partial, JustificationKind::strict_shortcut));
        ++out.back().w.mirrored[x];
      }
    }
    return out;
  }

  std::string key(const World& w) const {
    std::string k;
    k.reserve(w.pool.size() + 16 + names_.size());
    for (const auto& i : w.pool) k += static_cast<char>(i.lit * 4 + (i.strict ? 2 : 0) + (i.used_at ? 1 : 0));
    k += '\xff';
    for (Mask m : {w.minus_strict, w.minus_defeasible, w.supported})
      k.append(reinterpret_cast<const char*>(&m), sizeof m);
    k.append(w.mirrored.begin(), w.mirrored.begin() + names_.size());
    k += w.inconsistent ? '!' : '.';
    return k;
  }

  void leaf(const World& w) {
    const bool cyclic = !w.inconsistent && !successors(w, true, true).empty();
    std::vector<DerivationStep> log;
    log.reserve(path_.size());
    for (const auto& o : path_) log.push_back(expand(o, log.size() + 1));
    for (const auto& i : w.pool)
      if (i.used_at) log[i.step].consumed_at = i.used_at;
    Extension e = summarize(log, cyclic, w.inconsistent, false);
    found_.emplace(std::move(e), std::move(log));
  }

  void explore(const World& w) {
    auto next = successors(w, false, false);
    if (next.empty()) return leaf(w);
    for (auto& c : next) {
      if (!seen_.insert(key(c.w)).second) continue;
      const std::size_t mark = path_.size();
      path_.insert(path_.end(), c.steps.begin(), c.steps.end());
      explore(c.w);
      path_.resize(mark);
    }
  }

  const Theory& t_;
  std::vector<Literal> names_;
  std::vector<Lit> opposite_;
  Mask signature_ = 0;
  std::vector<bool> is_fact_;
  std::vector<ORule> rules_;
  std::vector<std::vector<std::size_t>> concluding_;
  std::vector<std::vector<bool>> beats_;
  std::vector<OStep> path_;
  std::unordered_set<std::string> seen_;
  std::map<Extension, std::vector<DerivationStep>> found_;
};

}  // namespace

bool within(const Theory& t, const OracleBounds& b) {
  std::set<std::string> atoms;
  for (const auto& f : t.facts) atoms.insert(f.atom);
  for (const auto& r : t.rules) {
    for (const auto& q : r.body.items) atoms.insert(q.atom);
    for (const auto& q : r.head.items) atoms.insert(q.atom);
  }
  return t.rules.size() <= b.max_rules && t.facts.size() <= b.max_facts && atoms.size() <= b.max_atoms &&
         t.config.max_steps <= b.max_steps;
}

std::vector<Extension> oracle_extensions(const Theory& t, const OracleBounds& b) {
  if (!within(t, b)) throw BoundsExceeded("theory exceeds the oracle bounds");
  auto report = validate_theory(t);
  if (!report.valid()) throw InvalidTheory(std::move(report));
  if (t.config.enumeration == EnumerationMode::deterministic)
    throw std::invalid_argument("the oracle only enumerates; deterministic mode has no reference");
  return Oracle(t).run();
}

}  // namespace rsdl::oracle
