#include "rsdl/literal.hpp"

namespace rsdl {

Literal complement(const Literal& q) {
  return Literal{q.atom, q.negative() ? Polarity::positive : Polarity::negative};
}

std::string to_string(const Literal& q) {
  return q.negative() ? "~" + q.atom : q.atom;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s.front())) return false;
  for (char c : s)
    if (!alpha(c) && !digit(c)) return false;
  return true;
}

}  // namespace rsdl
