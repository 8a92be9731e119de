#pragma once

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "rsdl/enumerate.hpp"
#include "rsdl/parser.hpp"

namespace rsdl::test {

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in, "cannot open " << path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string corpus_path(const std::string& name) { return std::string(RSDL_CORPUS_DIR) + "/" + name; }

inline Theory parse(std::string_view text, ReasonerConfig cfg = {}) {
  auto r = parse_theory(text, cfg);
  if (!r.ok()) FAIL("parse failed: " << to_string(r.diagnostics.front()));
  return r.theory;
}

inline Theory corpus(const std::string& name, ReasonerConfig cfg = {}) {
  return parse(slurp(corpus_path(name)), cfg);
}

inline std::size_t proven(const Extension& e, const char* lit, Tag t = Tag::plus_partial) {
  std::string s = lit;
  return e.count(s.front() == '~' ? neg(s.substr(1)) : pos(s), t);
}

inline std::size_t consumed(const Extension& e, const char* lit) {
  std::string s = lit;
  return e.consumed(s.front() == '~' ? neg(s.substr(1)) : pos(s));
}

inline bool refuted(const Extension& e, const char* lit, Tag t = Tag::minus_partial) {
  std::string s = lit;
  return e.has(s.front() == '~' ? neg(s.substr(1)) : pos(s), t);
}

inline Literal lit(const char* s) { return s[0] == '~' ? neg(s + 1) : pos(s); }

}  // namespace rsdl::test
