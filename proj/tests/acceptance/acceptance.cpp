// Acceptance gate: one PASS/FAIL line per criterion, each under a 10 s
// wall-clock limit. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "invariants.hpp"
#include "rsdl/engine.hpp"
#include "rsdl/enumerate.hpp"
#include "rsdl/generator.hpp"
#include "rsdl/oracle.hpp"
#include "rsdl/parser.hpp"
#include "rsdl/rank.hpp"

using namespace rsdl;

namespace {

constexpr double kTimeLimitSeconds = 10.0;

struct Failed {
  std::string why;
};

void expect(bool ok, const std::string& why) {
  if (!ok) throw Failed{why};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  expect(bool(in), "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string corpus_path(const std::string& name) { return std::string(RSDL_CORPUS_DIR) + "/" + name; }

Theory parse(const std::string& text, ReasonerConfig cfg = {}) {
  auto r = parse_theory(text, cfg);
  expect(r.ok(), r.ok() ? "" : "parse failed: " + to_string(r.diagnostics.front()));
  return r.theory;
}

Theory corpus(const std::string& name, ReasonerConfig cfg = {}) { return parse(slurp(corpus_path(name)), cfg); }

std::vector<Extension> enumerate(const Theory& t) { return enumerate_extensions(t).extensions; }

Literal lit(const std::string& s) { return s[0] == '~' ? neg(s.substr(1)) : pos(s); }

bool proves(const Extension& e, const std::string& q) { return e.has(lit(q), Tag::plus_partial); }
bool refutes(const Extension& e, const std::string& q) { return e.has(lit(q), Tag::minus_partial); }

std::set<Literal> consumed_set(const Extension& e) {
  std::set<Literal> out;
  for (const auto& p : e.proven)
    if (p.consumed_count > 0) out.insert(p.literal);
  return out;
}

DerivationState must(const StepResult& r) {
  expect(r.ok(), r.ok() ? "" : "step failed: " + r.failure().message);
  return r.state();
}

// Order in which the trace produces +∂ instances of the given atoms.
std::string production_order(const Extension& e, const std::set<std::string>& atoms) {
  std::string order;
  for (const auto& s : e.trace)
    if (s.tag == Tag::plus_partial && !s.literal.negative() && atoms.count(s.literal.atom)) order += s.literal.atom;
  return order;
}

void vending_machine() {
  auto on = enumerate(corpus("vending.rsdl"));
  expect(on.size() == 1, "vending: expected 1 extension, got " + std::to_string(on.size()));
  expect(proves(on[0], "cola"), "vending: +∂ cola missing");
  expect(on[0].consumed(lit("dollar")) == 1, "vending: dollar not consumed");
  expect(refutes(on[0], "outOfOrder") && refutes(on[0], "off"), "vending: -∂ outOfOrder / -∂ off missing");

  for (const auto& t : {parse(slurp(corpus_path("vending.rsdl")) + "\nfact off.\n"), corpus("vending_off.rsdl")}) {
    auto off = enumerate(t);
    expect(off.size() == 1, "switched off: expected 1 extension, got " + std::to_string(off.size()));
    expect(refutes(off[0], "cola") && refutes(off[0], "~cola"), "switched off: -∂ cola and -∂ ~cola expected");
    expect(off[0].consumed(lit("dollar")) == 0, "switched off: dollar was consumed");
  }
}

void team_defeater() {
  auto exts = enumerate(corpus("team_defeater.rsdl"));
  int matching = 0;
  for (const auto& e : exts) {
    if (!proves(e, "d") || !proves(e, "e")) continue;
    ++matching;
    expect(consumed_set(e) == std::set<Literal>{lit("a"), lit("b")}, "consumed set is not {a, b}: " + to_string(e));
    expect(e.consumed(lit("c")) == 0, "c was consumed");
  }
  expect(matching == 1, "expected one extension with +∂ d and +∂ e, got " + std::to_string(matching));
}

void sequence_ordering() {
  const auto text = slurp(corpus_path("sequence_order.rsdl"));
  auto produce = [&](std::initializer_list<const char*> order) {
    auto s = init_state(parse(text));
    for (const char* x : order) s = must(step_defeasible(s, lit(x)));
    return s;
  };
  auto aba = produce({"a", "b", "a"});
  expect(is_sequence_applicable(aba, "r0", Strength::partial), "r0 not applicable after a, b, a");
  expect(!is_sequence_discarded(aba, "r0", Strength::partial), "r0 discarded after a, b, a");
  expect(must(step_defeasible(aba, lit("c"))).has(lit("c"), Tag::plus_partial), "r0 did not fire after a, b, a");
  for (auto order : {std::initializer_list<const char*>{"a", "a", "b"}, {"b", "a", "a"}}) {
    auto s = produce(order);
    expect(is_sequence_discarded(s, "r0", Strength::partial), "r0 not discarded on a bad order");
    expect(!step_defeasible(s, lit("c")).ok(), "c derived on a bad order");
  }

  // Enumeration: c appears exactly in the extension whose producers ran a, b, a.
  auto exts = enumerate(parse(text));
  int with_c = 0;
  for (const auto& e : exts) {
    auto order = production_order(e, {"a", "b"});
    expect(proves(e, "c") == (order == "aba"), "production order " + order + " disagrees with +∂ c");
    with_c += proves(e, "c");
  }
  expect(with_c == 1 && exts.size() >= 2, "expected both a firing and a discarded branch");
}

void multiset_heads() {
  ReasonerConfig whole;
  whole.head_variant = HeadVariant::whole_head;
  auto per = enumerate(corpus("multiset_head.rsdl"));
  auto all = enumerate(corpus("multiset_head.rsdl", whole));
  expect(per.size() == 1 && all.size() == 1, "expected one extension per variant");
  expect(proves(per[0], "b") && proves(per[0], "d") && !proves(per[0], "c"), "per-literal: want +∂ b, +∂ d only");
  for (const char* q : {"b", "c", "d"})
    expect(!proves(all[0], q) && !all[0].has(lit(q), Tag::plus_delta), std::string("whole head concluded ") + q);
}

void concurrent_production() {
  auto exts = enumerate(parse("fact a. fact b. r: a => c. s: b => c."));
  expect(exts.size() == 1, "expected 1 extension, got " + std::to_string(exts.size()));
  expect(exts[0].count(lit("c"), Tag::plus_partial) == 2, "+∂ c count is not 2");
}

void oracle_equivalence() {
  oracle::TheoryGenerator gen(oracle::kCorpusSeed);
  bool seq_body = false, ms_body = false, single = false, ms_head = false, seq_head = false, defeater = false,
       chain = false, whole = false, per_literal = false;
  constexpr int kTheories = 500;
  for (int i = 0; i < kTheories; ++i) {
    Theory t = gen.next();
    expect(oracle::within(t), "generated theory outside oracle bounds");
    auto d = oracle::compare(enumerate(t), oracle::oracle_extensions(t));
    expect(d.empty(), "theory " + std::to_string(i) + " differs:\n" + serialize_theory(t) + oracle::to_string(d));
    (t.config.head_variant == HeadVariant::whole_head ? whole : per_literal) = true;
    for (const auto& r : t.rules) {
      (r.body.kind == BodyKind::sequence ? seq_body : ms_body) = true;
      single |= r.head.kind == HeadKind::single;
      ms_head |= r.head.kind == HeadKind::multiset;
      seq_head |= r.head.kind == HeadKind::sequence;
      defeater |= r.kind == RuleKind::defeater;
    }
    for (const auto& a : t.superiority)
      for (const auto& b : t.superiority) chain |= a.weaker == b.stronger;
  }
  expect(seq_body && ms_body && single && ms_head && seq_head && defeater && chain && whole && per_literal,
         "generated corpus misses a construct");
}

void invariant_suite() {
  oracle::TheoryGenerator gen(oracle::kCorpusSeed + 1);
  std::mt19937_64 rng(42);
  constexpr int kTheories = 10000;
  for (int i = 0; i < kTheories; ++i) {
    Theory t = gen.next();
    auto exts = enumerate(t);
    expect(!exts.empty(), "no extension");
    for (const auto& e : exts) {
      auto err = test::check_extension(t, e);
      expect(err.empty(), "theory " + std::to_string(i) + ": " + err + "\n" + serialize_theory(t));
    }
    auto w = test::random_walk(t, rng);
    expect(w.error.empty(), "theory " + std::to_string(i) + ": " + w.error + "\n" + serialize_theory(t));
    if (i % 20 == 0) {
      auto a = enumerate_extensions(t, {1, false}).extensions;
      auto b = enumerate_extensions(t, {3, false}).extensions;
      expect(a == b, "worker count changed the result\n" + serialize_theory(t));
    }
  }
}

void loop_safety() {
  auto t = corpus("login_retry.rsdl");
  expect(t.config.max_steps > 0, "no budget");
  auto exts = enumerate(t);
  expect(!exts.empty(), "no extensions");
  bool cyclic = false;
  for (const auto& e : exts) cyclic |= e.cyclic;
  expect(cyclic, "no extension flagged cyclic");
}

void parser_checks() {
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(RSDL_CORPUS_DIR)) {
    if (entry.path().extension() != ".rsdl" || entry.path().stem() == "mixed_nesting") continue;
    ++files;
    auto t = parse(slurp(entry.path().string()));
    auto again = parse(serialize_theory(t));
    expect(same_structure(t, again), "round trip changed " + entry.path().string());
  }
  expect(files >= 10, "corpus too small");

  oracle::TheoryGenerator gen(oracle::kCorpusSeed + 9);
  for (int i = 0; i < 2000; ++i) {
    Theory t = gen.next();
    auto r = parse_theory(serialize_theory(t), t.config);
    expect(r.ok() && same_structure(t, r.theory), "generated round trip failed:\n" + serialize_theory(t));
  }

  std::mt19937_64 rng(0xf022);
  std::string junk(1 << 20, '\0');
  for (auto& c : junk) c = static_cast<char>(rng() & 0xff);
  auto fuzz = parse_theory(junk);
  expect(!fuzz.ok(), "random bytes parsed");

  static const char* tokens[] = {"fact", " ", "a", "~b", ".", ":", ";", ",", "=>", "->", "~>", ">", "%", "\n", "r1"};
  std::string soup;
  while (soup.size() < (1u << 20)) soup += tokens[rng() % std::size(tokens)];
  (void)parse_theory(soup);

  auto mixed = parse_theory(slurp(corpus_path("mixed_nesting.rsdl")));
  expect(!mixed.ok() && mixed.diagnostics.front().message == "mixed nesting unsupported",
         "mixed nesting was not rejected");
}

void rank_stability() {
  auto costs = CostMap::parse(slurp(corpus_path("energy.costs")));
  auto exts = enumerate(corpus("energy.rsdl"));
  expect(exts.size() >= 2, "energy has fewer than 2 extensions");
  auto a = rank_extensions(exts, costs);
  auto b = rank_extensions(exts, costs.scaled(7));
  expect(a.size() == b.size(), "size changed");
  for (std::size_t i = 0; i < a.size(); ++i) expect(a[i].extension == b[i].extension, "order changed at " + std::to_string(i));
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void()>>> criteria = {
      {"vending-machine", vending_machine},
      {"team-defeater-accounting", team_defeater},
      {"sequence-ordering", sequence_ordering},
      {"multiset-head-variants", multiset_heads},
      {"concurrent-production", concurrent_production},
      {"oracle-equivalence", oracle_equivalence},
      {"invariant-suite", invariant_suite},
      {"loop-safety", loop_safety},
      {"parser", parser_checks},
      {"rank-stability", rank_stability},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string why;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second();
    } catch (const Failed& f) {
      why = f.why;
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (why.empty() && secs > kTimeLimitSeconds) why = "over the time limit";
    std::printf("%s %zu %s (%.2f s)\n", why.empty() ? "PASS" : "FAIL", i + 1, criteria[i].first, secs);
    if (!why.empty()) {
      std::printf("  %s\n", why.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
