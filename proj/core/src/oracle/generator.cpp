#include "rsdl/generator.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rsdl::oracle {

Theory TheoryGenerator::next() {
  const auto& p = params_;
  auto uniform = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  };
  auto chance = [&](double q) { return std::bernoulli_distribution(q)(rng_); };

  for (;;) {
    const std::size_t atoms = uniform(p.min_atoms, p.max_atoms);
    auto literal = [&] {
      std::string a(1, static_cast<char>('a' + uniform(0, atoms - 1)));
      return chance(0.7) ? pos(a) : neg(a);
    };

    Theory t;
    t.config.max_steps = p.max_steps;
    t.config.head_variant = chance(p.whole_head) ? HeadVariant::whole_head : HeadVariant::per_literal;
    const std::size_t facts = uniform(0, p.max_facts);
    for (std::size_t i = 0; i < facts; ++i) t.facts.push_back(literal());

    const std::size_t rules = uniform(p.min_rules, p.max_rules);
    for (std::size_t i = 0; i < rules; ++i) {
      Rule r;
      r.label = "r" + std::to_string(i + 1);
      const double k = std::uniform_real_distribution<double>(0, 1)(rng_);
      r.kind = k < p.strict ? RuleKind::strict : k < p.strict + p.defeater ? RuleKind::defeater : RuleKind::defeasible;

      const std::size_t body = chance(p.empty_body) ? 0 : uniform(1, p.max_body);
      r.body.kind = body >= 2 && chance(p.sequence_body) ? BodyKind::sequence : BodyKind::multiset;
      for (std::size_t j = 0; j < body; ++j) r.body.items.push_back(literal());

      r.head.kind = HeadKind::single;
      if (r.kind != RuleKind::defeater && p.max_head >= 2) {
        if (chance(p.multiset_head)) r.head.kind = HeadKind::multiset;
        else if (chance(p.sequence_head)) r.head.kind = HeadKind::sequence;
      }
      const std::size_t head = r.head.kind == HeadKind::single ? 1 : uniform(2, p.max_head);
      for (std::size_t j = 0; j < head; ++j) r.head.items.push_back(literal());
      normalize(r);
      t.rules.push_back(std::move(r));
    }

    // Superiority only along a random total order, so it is acyclic.
    std::vector<std::size_t> order(t.rules.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng_);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        const Rule& a = t.rules[order[i]];
        const Rule& b = t.rules[order[j]];
        bool conflict = std::any_of(a.head.items.begin(), a.head.items.end(),
                                    [&](const Literal& q) { return b.has_in_head(complement(q)); });
        if (conflict && chance(p.superiority)) t.superiority.push_back({a.label, b.label});
      }

    if (validate_theory(t).valid()) return t;
  }
}

}  // namespace rsdl::oracle
