#pragma once

#include <cstdint>
#include <random>

#include "rsdl/theory.hpp"

namespace rsdl::oracle {

/// Parameters of the seeded random theory generator. Defaults stay well
/// inside OracleBounds.
struct GeneratorParams {
  std::size_t min_atoms = 2, max_atoms = 4;
  std::size_t min_rules = 1, max_rules = 5;
  std::size_t max_facts = 4;
  std::size_t max_body = 3;
  std::size_t max_head = 3;
  double sequence_body = 0.3;
  double multiset_head = 0.2;
  double sequence_head = 0.2;
  double strict = 0.15;
  double defeater = 0.15;
  double empty_body = 0.03;
  double superiority = 0.3;
  double whole_head = 0.3;
  std::size_t max_steps = 8;
};

inline constexpr std::uint64_t kCorpusSeed = 0x5eed'2018'0001ULL;

class TheoryGenerator {
 public:
  explicit TheoryGenerator(std::uint64_t seed = kCorpusSeed, GeneratorParams p = {})
      : rng_(seed), params_(p) {}

  /// Always returns a theory that passes validate_theory.
  Theory next();

 private:
  std::mt19937_64 rng_;
  GeneratorParams params_;
};

}  // namespace rsdl::oracle
