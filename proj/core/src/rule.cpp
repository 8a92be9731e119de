#include "rsdl/rule.hpp"

#include <algorithm>

namespace rsdl {

bool Rule::has_in_head(const Literal& q) const {
  return std::find(head.items.begin(), head.items.end(), q) != head.items.end();
}

bool Rule::has_in_body(const Literal& q) const {
  return std::find(body.items.begin(), body.items.end(), q) != body.items.end();
}

RuleBody multiset_body(std::vector<Literal> items) {
  return RuleBody{BodyKind::multiset, std::move(items)};
}

RuleBody sequence_body(std::vector<Literal> items) {
  return RuleBody{BodyKind::sequence, std::move(items)};
}

RuleHead single_head(Literal q) { return RuleHead{HeadKind::single, {std::move(q)}}; }

RuleHead multiset_head(std::vector<Literal> items) {
  return RuleHead{HeadKind::multiset, std::move(items)};
}

RuleHead sequence_head(std::vector<Literal> items) {
  return RuleHead{HeadKind::sequence, std::move(items)};
}

Rule make_rule(std::string label, RuleBody body, RuleKind kind, RuleHead head) {
  Rule r{std::move(label), std::move(body), kind, std::move(head)};
  normalize(r);
  return r;
}

void normalize(Rule& r) {
  if (r.body.kind == BodyKind::multiset) std::sort(r.body.items.begin(), r.body.items.end());
  if (r.head.kind == HeadKind::multiset) std::sort(r.head.items.begin(), r.head.items.end());
}

std::string_view arrow(RuleKind k) {
  switch (k) {
    case RuleKind::strict: return "->";
    case RuleKind::defeasible: return "=>";
    case RuleKind::defeater: return "~>";
  }
  return "=>";
}

std::string_view to_string(RuleKind k) {
  switch (k) {
    case RuleKind::strict: return "strict";
    case RuleKind::defeasible: return "defeasible";
    case RuleKind::defeater: return "defeater";
  }
  return "?";
}

namespace {

std::string join(const std::vector<Literal>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += to_string(items[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const Rule& r) {
  std::string out = r.label + ":";
  if (!r.body.items.empty())
    out += " " + join(r.body.items, r.body.kind == BodyKind::sequence ? "; " : ", ");
  out += " ";
  out += arrow(r.kind);
  out += " " + join(r.head.items, r.head.kind == HeadKind::sequence ? "; " : ", ");
  return out;
}

}  // namespace rsdl
