#include "rsdl/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include "compiled_theory.hpp"

namespace rsdl {

using detail::LitId;
using detail::StateAccess;

Extension canonicalize(const DerivationState& s) {
  const bool cyclic = !s.inconsistent() && has_pending_production(s);
  auto steps = s.steps();
  return summarize(steps, cyclic, s.inconsistent(), true);
}

namespace {

struct Saturated {
  DerivationState state;
  std::vector<Move> moves;  // enabled, none inert
};

Saturated saturated(DerivationState s) {
  for (;;) {
    auto moves = detail::generate_moves(s, false, false);
    bool changed = false;
    for (const auto& m : moves) {
      if (!is_inert(s, m)) continue;
      // Inert moves stay enabled once enabled, so the whole batch applies.
      s = apply(s, m);
      changed = true;
    }
    if (!changed) return {std::move(s), std::move(moves)};
  }
}

// Two states with equal keys have the same future and the same extension.
std::string state_key(const DerivationState& s) {
  const auto& ct = StateAccess::ct(s);
  std::string key;
  auto put = [&](std::uint32_t v) { key.append(reinterpret_cast<const char*>(&v), sizeof v); };
  if (ct.sequence_bodies) {
    // Instance order of literals a live sequence body can still observe.
    detail::Context cx(s);
    const auto& ordered = cx.ordered_literals();
    for (const auto& r : StateAccess::log(s)) {
      if (!ordered[r.lit] || !detail::counts_as(r, Strength::partial)) continue;
      put(r.lit << 2 | (r.tag == Tag::plus_delta ? 2u : 0u) | (r.consumed_at ? 1u : 0u));
    }
    put(0xffffffffu);
  }
  for (LitId x = 0; x < ct.literal_count(); ++x) {
    put(StateAccess::proven_delta(s, x));
    put(StateAccess::proven_partial(s, x));
    put(StateAccess::unused_delta(s, x));
    put(StateAccess::unused_partial(s, x));
    put(StateAccess::mirrors(s, x));
    key.push_back(static_cast<char>(StateAccess::flags(s, x)));
  }
  key.push_back(s.inconsistent() ? 1 : 0);
  return key;
}

struct Search {
  bool keep_traces = true;
  std::unordered_set<std::string> seen;
  std::vector<Extension>* sink = nullptr;
  std::set<Extension> sink_index;
  EnumerationStats stats;

  void leaf(const DerivationState& s) {
    ++stats.leaves;
    Extension e = canonicalize(s);
    if (!keep_traces) e.trace.clear();
    if (sink_index.insert(e).second) sink->push_back(std::move(e));
  }

  void visit(const Saturated& node) {
    if (!seen.insert(state_key(node.state)).second) return;
    ++stats.states;
    if (node.moves.empty()) return leaf(node.state);
    for (const auto& m : node.moves) visit(saturated(apply(node.state, m)));
  }
};

}  // namespace

DerivationState saturate(DerivationState s) { return saturated(std::move(s)).state; }

DerivationState derive_deterministic_state(const Theory& t) {
  auto node = saturated(init_state(t));
  while (!node.moves.empty()) node = saturated(apply(node.state, node.moves.front()));
  return std::move(node.state);
}

Extension derive_deterministic(const Theory& t) { return canonicalize(derive_deterministic_state(t)); }

EnumerationResult enumerate_extensions(const Theory& t, EnumerationOptions opts) {
  EnumerationResult result;
  if (t.config.enumeration == EnumerationMode::deterministic) {
    Extension e = derive_deterministic(t);
    if (!opts.keep_traces) e.trace.clear();
    result.extensions.push_back(std::move(e));
    result.stats = {1, 1};
    return result;
  }

  const Saturated root = saturated(init_state(t));
  if (root.moves.empty()) {
    Search search;
    search.keep_traces = opts.keep_traces;
    search.sink = &result.extensions;
    search.visit(root);
    result.stats = search.stats;
    return result;
  }

  const std::size_t branches = root.moves.size();
  std::vector<std::vector<Extension>> found(branches);
  const std::size_t workers = std::clamp<std::size_t>(opts.workers, 1, branches);
  std::vector<Search> searches(workers);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto work = [&](Search& search) {
    search.keep_traces = opts.keep_traces;
    try {
      for (;;) {
        const std::size_t b = next.fetch_add(1);
        if (b >= branches) break;
        search.sink = &found[b];
        search.sink_index.clear();
        search.visit(saturated(apply(root.state, root.moves[b])));
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = branches;
    }
  };

  if (workers == 1) {
    work(searches[0]);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, std::ref(searches[w]));
  }
  if (error) std::rethrow_exception(error);

  // Merge in branch order so the kept trace does not depend on scheduling.
  std::set<Extension> index;
  for (auto& branch : found)
    for (auto& e : branch)
      if (index.insert(e).second) result.extensions.push_back(std::move(e));
  std::stable_sort(result.extensions.begin(), result.extensions.end());
  result.stats.states = 1;
  for (const auto& s : searches) {
    result.stats.states += s.stats.states;
    result.stats.leaves += s.stats.leaves;
  }
  return result;
}

namespace {

bool same_step(const DerivationStep& a, const DerivationStep& b) {
  return a.index == b.index && a.tag == b.tag && a.literal == b.literal && a.justification == b.justification &&
         a.rule == b.rule && a.consumed_from == b.consumed_from;
}

}  // namespace

ReplayResult replay(const Theory& t, const std::vector<DerivationStep>& trace) {
  ReplayResult out;
  DerivationState s = init_state(t);
  auto fail = [&](std::size_t at, std::string msg) {
    out.ok = false;
    out.failed_at = at;
    out.message = std::move(msg);
    return out;
  };
  const auto initial = s.steps();
  if (trace.size() < initial.size()) return fail(trace.size() + 1, "trace is missing fact steps");
  for (std::size_t i = 0; i < initial.size(); ++i)
    if (!same_step(initial[i], trace[i])) return fail(i + 1, "fact steps differ");

  std::size_t i = initial.size();
  while (i < trace.size()) {
    std::size_t j = i;
    while (j < trace.size() && trace[j].move == trace[i].move) ++j;
    bool matched = false;
    for (const auto& m : enabled_moves(s)) {
      DerivationState n = apply(s, m);
      if (n.size() != j) continue;
      bool same = true;
      for (std::size_t k = i; k < j && same; ++k) same = same_step(n.step(k + 1), trace[k]);
      if (same) {
        s = std::move(n);
        matched = true;
        break;
      }
    }
    if (!matched) return fail(trace[i].index, "no enabled move reproduces step " + std::to_string(trace[i].index));
    i = j;
  }
  const auto final_steps = s.steps();
  for (std::size_t k = 0; k < trace.size(); ++k)
    if (final_steps[k].consumed_at != trace[k].consumed_at)
      return fail(trace[k].index, "consumption of step " + std::to_string(trace[k].index) + " differs");
  out.ok = true;
  out.state = std::move(s);
  return out;
}

}  // namespace rsdl
