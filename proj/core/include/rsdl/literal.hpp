#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace rsdl {

enum class Polarity : bool { positive = false, negative = true };

/// A signed propositional atom. In this logic every literal is also one
/// unit of a consumable resource.
struct Literal {
  std::string atom;
  Polarity polarity = Polarity::positive;

  Literal() = default;
  Literal(std::string a, Polarity p = Polarity::positive)
      : atom(std::move(a)), polarity(p) {}

  bool negative() const { return polarity == Polarity::negative; }

  auto operator<=>(const Literal&) const = default;
  bool operator==(const Literal&) const = default;
};

inline Literal pos(std::string atom) { return Literal{std::move(atom), Polarity::positive}; }
inline Literal neg(std::string atom) { return Literal{std::move(atom), Polarity::negative}; }

Literal complement(const Literal& q);

/// `~atom` for negative literals, `atom` otherwise.
std::string to_string(const Literal& q);

/// Atoms are `[A-Za-z_][A-Za-z0-9_]*`.
bool is_identifier(std::string_view s);

struct LiteralHash {
  std::size_t operator()(const Literal& q) const noexcept {
    return std::hash<std::string>{}(q.atom) * 2 + static_cast<std::size_t>(q.negative());
  }
};

}  // namespace rsdl
