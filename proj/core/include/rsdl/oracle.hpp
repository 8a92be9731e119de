#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsdl/extension.hpp"
#include "rsdl/theory.hpp"

namespace rsdl::oracle {

struct OracleBounds {
  std::size_t max_rules = 8;
  std::size_t max_facts = 6;
  std::size_t max_atoms = 6;
  std::size_t max_steps = 30;
};

struct BoundsExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool within(const Theory& t, const OracleBounds& b = {});

/// Brute-force reference: exhaustive search over every move order and every
/// consumption plan. Throws BoundsExceeded or InvalidTheory.
std::vector<Extension> oracle_extensions(const Theory& t, const OracleBounds& b = {});

struct DiffEntry {
  enum class Kind { missing_from_engine, extra_in_engine };
  Kind kind;
  Extension extension;  // carries its trace
};

struct DiffReport {
  std::vector<DiffEntry> entries;
  bool empty() const { return entries.empty(); }
};

DiffReport compare(const std::vector<Extension>& engine, const std::vector<Extension>& oracle);

std::string to_string(const DiffReport& d);

}  // namespace rsdl::oracle
