#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rsdl/theory.hpp"

namespace rsdl {

struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 0;

  bool operator==(const SourceSpan&) const = default;
};

struct Diagnostic {
  SourceSpan span;
  std::string message;
};

std::string to_string(const Diagnostic& d);

/// Either a validated theory or at least one diagnostic.
struct ParseResult {
  Theory theory;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

/// Parses the `.rsdl` theory language. Total: never throws on any input.
ParseResult parse_theory(std::string_view text, ReasonerConfig config = {});

/// Canonical text: facts (sorted), rules by label, superiority pairs last.
std::string serialize_theory(const Theory& t);

}  // namespace rsdl
