#include "support.hpp"

#include <random>

#include "invariants.hpp"
#include "rsdl/generator.hpp"

using namespace rsdl;

namespace {

constexpr int kTheories = 10000;

// Reverses every multiset body: same theory to the logic.
Theory permuted(Theory t) {
  for (auto& r : t.rules)
    if (r.body.kind == BodyKind::multiset) std::reverse(r.body.items.begin(), r.body.items.end());
  return t;
}

std::vector<Extension> bare(std::vector<Extension> v) {
  for (auto& e : v) e.trace.clear();
  return v;
}

}  // namespace

TEST_CASE("invariants hold on generated theories") {
  oracle::TheoryGenerator gen(oracle::kCorpusSeed + 1);
  std::mt19937_64 rng(42);
  std::size_t extensions = 0, walked = 0;
  for (int i = 0; i < kTheories; ++i) {
    Theory t = gen.next();
    auto r = enumerate_extensions(t);
    REQUIRE(!r.extensions.empty());
    for (const auto& e : r.extensions) {
      ++extensions;
      auto err = test::check_extension(t, e);
      if (!err.empty()) FAIL("theory " << i << ": " << err << "\n" << serialize_theory(t) << to_string(e));
    }
    auto w = test::random_walk(t, rng);
    if (!w.error.empty()) FAIL("theory " << i << ": " << w.error << "\n" << serialize_theory(t));
    walked += w.states;
  }
  CHECK(extensions >= kTheories);
  MESSAGE(extensions << " extensions, " << walked << " walked states");
}

TEST_CASE("enumeration does not depend on the worker count") {
  oracle::TheoryGenerator gen(oracle::kCorpusSeed + 2);
  for (int i = 0; i < 1000; ++i) {
    Theory t = gen.next();
    auto one = bare(enumerate_extensions(t, {1, false}).extensions);
    auto three = bare(enumerate_extensions(t, {3, false}).extensions);
    REQUIRE_MESSAGE(one == three, serialize_theory(t));
  }
}

TEST_CASE("multiset body order does not matter") {
  oracle::TheoryGenerator gen(oracle::kCorpusSeed + 3);
  for (int i = 0; i < 1000; ++i) {
    Theory t = gen.next();
    auto a = bare(enumerate_extensions(t).extensions);
    auto b = bare(enumerate_extensions(permuted(t)).extensions);
    REQUIRE_MESSAGE(a == b, serialize_theory(t));
  }
}

TEST_CASE("enumeration is repeatable") {
  oracle::TheoryGenerator gen(oracle::kCorpusSeed + 4);
  for (int i = 0; i < 200; ++i) {
    Theory t = gen.next();
    auto a = enumerate_extensions(t).extensions;
    auto b = enumerate_extensions(t).extensions;
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].trace == b[k].trace);
  }
}
