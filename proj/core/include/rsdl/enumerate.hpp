#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rsdl/engine.hpp"
#include "rsdl/extension.hpp"
#include "rsdl/theory.hpp"

namespace rsdl {

/// Canonical extension of a (terminal or bounded) state, with its log as trace.
Extension canonicalize(const DerivationState& s);

/// Applies inert moves until none is enabled.
DerivationState saturate(DerivationState s);

struct EnumerationOptions {
  std::size_t workers = 1;
  bool keep_traces = true;
};

struct EnumerationStats {
  std::size_t states = 0;
  std::size_t leaves = 0;
};

struct EnumerationResult {
  std::vector<Extension> extensions;  // canonical order, no duplicates
  EnumerationStats stats;
};

/// Every distinct extension reachable by some order of rule applications.
/// Honors theory.config.enumeration (deterministic yields one extension).
EnumerationResult enumerate_extensions(const Theory& t, EnumerationOptions opts = {});

/// The single branch picked by the tie-break order at every choice point.
Extension derive_deterministic(const Theory& t);

/// Final state of the deterministic branch (useful for explanations).
DerivationState derive_deterministic_state(const Theory& t);

struct ReplayResult {
  bool ok = false;
  std::size_t failed_at = 0;  // index of the first step that could not be reproduced
  std::string message;
  std::optional<DerivationState> state;
};

/// Re-executes a trace move by move through the engine.
ReplayResult replay(const Theory& t, const std::vector<DerivationStep>& trace);

}  // namespace rsdl
