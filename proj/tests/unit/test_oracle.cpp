#include "support.hpp"

#include <filesystem>
#include <regex>
#include <set>

#include "rsdl/generator.hpp"
#include "rsdl/oracle.hpp"

using namespace rsdl;
using rsdl::test::parse;

TEST_CASE("oracle on the vending machine") {
  auto t = test::corpus("vending.rsdl");
  t.config.max_steps = 30;
  auto o = oracle::oracle_extensions(t);
  REQUIRE(o.size() == 1);
  CHECK(o[0].count(pos("cola"), Tag::plus_partial) == 1);
  CHECK(o[0].consumed(pos("dollar")) == 1);
  CHECK(oracle::compare(enumerate_extensions(t).extensions, o).empty());
}

TEST_CASE("oracle finds both sides of a competition") {
  auto t = parse("fact a. fact b. r1: b => c. r2: b => d.");
  t.config.max_steps = 30;
  CHECK(oracle::oracle_extensions(t).size() == 2);
}

TEST_CASE("oracle on the empty theory") {
  Theory t;
  t.config.max_steps = 10;
  auto o = oracle::oracle_extensions(t);
  REQUIRE(o.size() == 1);
  CHECK(o[0].proven.empty());
  CHECK(o[0].refuted.empty());
  CHECK(o[0].supported.empty());
}

TEST_CASE("oracle bounds") {
  Theory t = parse("fact a.");
  t.config.max_steps = 31;
  CHECK_THROWS_AS(oracle::oracle_extensions(t), oracle::BoundsExceeded);
  t.config.max_steps = 30;
  CHECK_NOTHROW(oracle::oracle_extensions(t));

  Theory many;
  many.config.max_steps = 30;
  for (int i = 0; i < 9; ++i)
    many.rules.push_back(make_rule("r" + std::to_string(i), multiset_body({pos("a")}), RuleKind::defeasible,
                                   single_head(pos("b"))));
  CHECK_FALSE(oracle::within(many));
  CHECK_THROWS_AS(oracle::oracle_extensions(many), oracle::BoundsExceeded);

  Theory atoms;
  atoms.config.max_steps = 30;
  for (const char* x : {"a", "b", "c", "d", "e", "f", "g"}) atoms.facts.push_back(pos(x));
  CHECK_FALSE(oracle::within(atoms));

  t.config.enumeration = EnumerationMode::deterministic;
  CHECK_THROWS_AS(oracle::oracle_extensions(t), std::invalid_argument);
}

TEST_CASE("compare reports the symmetric difference") {
  auto t = parse("fact a. fact b. r1: b => c. r2: b => d.");
  t.config.max_steps = 30;
  auto engine = enumerate_extensions(t).extensions;
  auto ref = oracle::oracle_extensions(t);
  REQUIRE(engine.size() == 2);

  CHECK(oracle::compare(engine, ref).empty());

  auto missing = oracle::compare({engine[0]}, ref);
  REQUIRE(missing.entries.size() == 1);
  CHECK(missing.entries[0].kind == oracle::DiffEntry::Kind::missing_from_engine);

  Extension spurious = engine[0];
  spurious.supported.push_back(pos("zzz"));
  auto extra = oracle::compare({engine[0], engine[1], spurious}, ref);
  REQUIRE(extra.entries.size() == 1);
  CHECK(extra.entries[0].kind == oracle::DiffEntry::Kind::extra_in_engine);
  CHECK_FALSE(extra.entries[0].extension.trace.empty());
  CHECK(oracle::to_string(extra).find("extra") != std::string::npos);
}

TEST_CASE("the oracle sources include no engine header") {
  const std::regex include(R"(#include\s*[<"]([^>"]+)[>"])");
  const std::set<std::string> allowed = {"rsdl/extension.hpp", "rsdl/literal.hpp", "rsdl/rule.hpp",
                                         "rsdl/theory.hpp",    "rsdl/oracle.hpp",  "rsdl/generator.hpp",
                                         "rsdl/parser.hpp"};
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(std::string(RSDL_SOURCE_DIR) + "/core/src/oracle")) {
    ++files;
    auto text = test::slurp(entry.path().string());
    for (std::sregex_iterator it(text.begin(), text.end(), include), end; it != end; ++it) {
      const std::string h = (*it)[1];
      CAPTURE(entry.path().filename().string());
      CAPTURE(h);
      if (h.find('/') == std::string::npos && h.find('.') == std::string::npos) continue;  // standard library
      CHECK(allowed.count(h) == 1);
    }
  }
  CHECK(files >= 3);
  for (const char* h : {"rsdl/oracle.hpp", "rsdl/generator.hpp"}) {
    auto text = test::slurp(std::string(RSDL_SOURCE_DIR) + "/core/include/" + h);
    CHECK(text.find("engine.hpp") == std::string::npos);
    CHECK(text.find("enumerate.hpp") == std::string::npos);
  }
}

TEST_CASE("the generator covers every construct within bounds") {
  oracle::TheoryGenerator gen;
  bool seq_body = false, ms_body = false, single = false, ms_head = false, seq_head = false, defeater = false,
       strict = false, chain = false, whole = false, per_literal = false;
  for (int i = 0; i < 500; ++i) {
    Theory t = gen.next();
    CHECK(oracle::within(t));
    CHECK(validate_theory(t).valid());
    (t.config.head_variant == HeadVariant::whole_head ? whole : per_literal) = true;
    for (const auto& r : t.rules) {
      (r.body.kind == BodyKind::sequence ? seq_body : ms_body) = true;
      if (r.head.kind == HeadKind::single) single = true;
      if (r.head.kind == HeadKind::multiset) ms_head = true;
      if (r.head.kind == HeadKind::sequence) seq_head = true;
      if (r.kind == RuleKind::defeater) defeater = true;
      if (r.kind == RuleKind::strict) strict = true;
    }
    for (const auto& a : t.superiority)
      for (const auto& b : t.superiority)
        if (a.weaker == b.stronger) chain = true;
  }
  CHECK(seq_body);
  CHECK(ms_body);
  CHECK(single);
  CHECK(ms_head);
  CHECK(seq_head);
  CHECK(defeater);
  CHECK(strict);
  CHECK(chain);
  CHECK(whole);
  CHECK(per_literal);
}

TEST_CASE("the generator is reproducible") {
  oracle::TheoryGenerator a, b;
  for (int i = 0; i < 50; ++i) CHECK(serialize_theory(a.next()) == serialize_theory(b.next()));
}

TEST_CASE("engine and oracle agree on a generated sample") {
  oracle::TheoryGenerator gen(oracle::kCorpusSeed + 7);
  for (int i = 0; i < 100; ++i) {
    Theory t = gen.next();
    auto d = oracle::compare(enumerate_extensions(t).extensions, oracle::oracle_extensions(t));
    CHECK_MESSAGE(d.empty(), serialize_theory(t) << oracle::to_string(d));
  }
}
