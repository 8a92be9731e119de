#include "support.hpp"

#include "rsdl/generator.hpp"
#include "rsdl/theory.hpp"

using namespace rsdl;
using rsdl::test::lit;

namespace {

std::vector<std::string> labels(const std::vector<const Rule*>& rules) {
  std::vector<std::string> out;
  for (const auto* r : rules) out.push_back(r->label);
  return out;
}

bool has_violation(const ValidationReport& rep, ViolationKind k) {
  return std::any_of(rep.violations.begin(), rep.violations.end(), [&](const Violation& v) { return v.kind == k; });
}

Theory vending() {
  Theory t;
  t.facts = {pos("dollar")};
  t.rules = {make_rule("r1", multiset_body({pos("dollar")}), RuleKind::defeasible, single_head(pos("cola"))),
             make_rule("r2", multiset_body({pos("outOfOrder")}), RuleKind::defeasible, single_head(neg("cola"))),
             make_rule("r3", multiset_body({pos("off")}), RuleKind::defeasible, single_head(neg("cola")))};
  return t;
}

}  // namespace

TEST_CASE("complement flips polarity and keeps the atom") {
  CHECK(complement(pos("cola")) == neg("cola"));
  CHECK(complement(neg("cola")) == pos("cola"));
  CHECK(complement(complement(pos("p"))) == pos("p"));
  CHECK(to_string(neg("cola")) == "~cola");
}

TEST_CASE("literal order puts the positive literal of an atom first") {
  CHECK(pos("a") < neg("a"));
  CHECK(neg("a") < pos("b"));
}

TEST_CASE("identifiers") {
  CHECK(is_identifier("dollar"));
  CHECK(is_identifier("_x9"));
  CHECK_FALSE(is_identifier("1$"));
  CHECK_FALSE(is_identifier(""));
  CHECK_FALSE(is_identifier("a-b"));
}

TEST_CASE("validate: vending theory is valid") {
  CHECK(validate_theory(vending()).valid());
}

TEST_CASE("validate: r > r is reported as irreflexive superiority") {
  Theory t = vending();
  t.superiority = {{"r1", "r1"}};
  auto rep = validate_theory(t);
  REQUIRE_FALSE(rep.valid());
  CHECK(has_violation(rep, ViolationKind::irreflexive_superiority));
  CHECK(rep.violations.front().message.find("irreflexive superiority") != std::string::npos);
}

TEST_CASE("validate: r > s and s > r is a superiority cycle") {
  Theory t = vending();
  t.superiority = {{"r1", "r2"}, {"r2", "r1"}};
  auto rep = validate_theory(t);
  REQUIRE(has_violation(rep, ViolationKind::superiority_cycle));
  CHECK(rep.violations.front().message.find("superiority cycle") != std::string::npos);
}

TEST_CASE("validate: longer cycles are found too") {
  Theory t = vending();
  t.superiority = {{"r1", "r2"}, {"r2", "r3"}, {"r3", "r1"}};
  CHECK(has_violation(validate_theory(t), ViolationKind::superiority_cycle));
  t.superiority = {{"r1", "r2"}, {"r2", "r3"}, {"r1", "r3"}};
  CHECK(validate_theory(t).valid());
}

TEST_CASE("validate: structural violations") {
  SUBCASE("duplicate label") {
    Theory t = vending();
    t.rules[1].label = "r1";
    CHECK(has_violation(validate_theory(t), ViolationKind::duplicate_label));
  }
  SUBCASE("dangling superiority") {
    Theory t = vending();
    t.superiority = {{"r1", "nope"}};
    CHECK(has_violation(validate_theory(t), ViolationKind::dangling_superiority));
  }
  SUBCASE("empty head") {
    Theory t = vending();
    t.rules[0].head = multiset_head({});
    CHECK(has_violation(validate_theory(t), ViolationKind::empty_head));
  }
  SUBCASE("complementary facts with a strict rule") {
    Theory t;
    t.facts = {pos("a"), neg("a")};
    t.rules = {make_rule("s", multiset_body({pos("b")}), RuleKind::strict, single_head(pos("a")))};
    CHECK(has_violation(validate_theory(t), ViolationKind::complementary_facts));
  }
  SUBCASE("budget below the fact count") {
    Theory t = vending();
    t.facts = {pos("a"), pos("a")};
    t.config.max_steps = 1;
    CHECK(has_violation(validate_theory(t), ViolationKind::invalid_config));
  }
}

TEST_CASE("validate is deterministic") {
  Theory t = vending();
  t.superiority = {{"r1", "r2"}, {"r2", "r1"}, {"r3", "r3"}, {"r1", "zz"}};
  auto a = validate_theory(t);
  auto b = validate_theory(t);
  REQUIRE(a.violations.size() == b.violations.size());
  for (std::size_t i = 0; i < a.violations.size(); ++i) CHECK(a.violations[i].message == b.violations[i].message);
}

TEST_CASE("rules_for on the vending theory") {
  Theory t = vending();
  CHECK(labels(rules_for(t, neg("cola"), RuleSelector::any())) == std::vector<std::string>{"r2", "r3"});
  CHECK(rules_for(t, pos("cola"), RuleSelector::strict()).empty());
  CHECK(labels(rules_for(t, pos("cola"), RuleSelector::strict_or_defeasible())) == std::vector<std::string>{"r1"});
}

TEST_CASE("rules_for with sequence head positions") {
  Theory t;
  t.facts = {pos("a")};
  t.rules = {make_rule("r", multiset_body({pos("a")}), RuleKind::strict, sequence_head({pos("b"), pos("c")}))};
  CHECK(labels(rules_for(t, pos("b"), RuleSelector::at_sequence_index(1))) == std::vector<std::string>{"r"});
  CHECK(rules_for(t, pos("b"), RuleSelector::at_sequence_index(2)).empty());
  CHECK(labels(rules_for(t, pos("c"), RuleSelector::at_sequence_index(2))) == std::vector<std::string>{"r"});
  CHECK(rules_for(t, pos("b"), RuleSelector::at_sequence_index(0)).empty());
  CHECK(rules_for(t, pos("b"), RuleSelector::at_sequence_index(7)).empty());
  CHECK(rules_for(t, pos("b"), RuleSelector::in_multiset_head()).empty());
}

TEST_CASE("rules_for selectors are nested on generated theories") {
  oracle::TheoryGenerator gen(11);
  for (int i = 0; i < 200; ++i) {
    Theory t = gen.next();
    for (const auto& q : t.signature()) {
      auto s = rules_for(t, q, RuleSelector::strict());
      auto sd = rules_for(t, q, RuleSelector::strict_or_defeasible());
      auto any = rules_for(t, q, RuleSelector::any());
      for (const auto* r : s) CHECK(std::find(sd.begin(), sd.end(), r) != sd.end());
      for (const auto* r : sd) CHECK(std::find(any.begin(), any.end(), r) != any.end());
    }
  }
}

TEST_CASE("defeaters are excluded from strict-or-defeasible") {
  Theory t;
  t.rules = {make_rule("d", multiset_body({pos("a")}), RuleKind::defeater, single_head(pos("p"))),
             make_rule("r", multiset_body({pos("b")}), RuleKind::defeasible, single_head(pos("p")))};
  CHECK(labels(rules_for(t, pos("p"), RuleSelector::any())) == std::vector<std::string>{"d", "r"});
  CHECK(labels(rules_for(t, pos("p"), RuleSelector::strict_or_defeasible())) == std::vector<std::string>{"r"});
}

TEST_CASE("same_structure ignores multiset order and rule order but not sequence order") {
  Theory a, b;
  a.rules = {make_rule("r", multiset_body({pos("a"), pos("b")}), RuleKind::defeasible, single_head(pos("c"))),
             make_rule("s", sequence_body({pos("a"), pos("b")}), RuleKind::defeasible, single_head(pos("d")))};
  b.rules = {make_rule("s", sequence_body({pos("a"), pos("b")}), RuleKind::defeasible, single_head(pos("d"))),
             make_rule("r", multiset_body({pos("b"), pos("a")}), RuleKind::defeasible, single_head(pos("c")))};
  CHECK(same_structure(a, b));
  b.rules[0].body = sequence_body({pos("b"), pos("a")});
  CHECK_FALSE(same_structure(a, b));
}

TEST_CASE("signature lists every literal once, sorted") {
  Theory t = vending();
  auto sig = t.signature();
  CHECK(sig == std::vector<Literal>{pos("cola"), neg("cola"), pos("dollar"), pos("off"), pos("outOfOrder")});
}

TEST_CASE("stronger follows the declared pairs only") {
  Theory t = vending();
  t.superiority = {{"r1", "r2"}, {"r2", "r3"}};
  CHECK(t.stronger("r1", "r2"));
  CHECK_FALSE(t.stronger("r2", "r1"));
  CHECK_FALSE(t.stronger("r1", "r3"));
  CHECK(lit("~x") == neg("x"));
}
