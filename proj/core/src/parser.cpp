#include "rsdl/parser.hpp"

#include <map>
#include <optional>

namespace rsdl {

std::string to_string(const Diagnostic& d) {
  return std::to_string(d.span.line) + ":" + std::to_string(d.span.column) + ": " + d.message;
}

namespace {

enum class Tok { ident, tilde, comma, semi, dot, colon, gt, lparen, rparen, arrow, end, bad };

struct Token {
  Tok kind = Tok::end;
  std::string_view text;
  SourceSpan span;
  RuleKind arrow = RuleKind::defeasible;
};

constexpr std::size_t kMaxDiagnostics = 100;

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_blank();
    Token t;
    t.span = {line_, col_, 0};
    if (pos_ >= src_.size()) return t;
    const std::size_t start = pos_;
    char c = src_[pos_];
    auto single = [&](Tok k) {
      advance();
      t.kind = k;
    };
    auto ident_start = [](char ch) {
      return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || ch == '_';
    };
    auto ident_char = [&](char ch) { return ident_start(ch) || (ch >= '0' && ch <= '9'); };

    if (ident_start(c)) {
      while (pos_ < src_.size() && ident_char(src_[pos_])) advance();
      t.kind = Tok::ident;
    } else if (c == '~') {
      advance();
      if (pos_ < src_.size() && src_[pos_] == '>') {
        advance();
        t.kind = Tok::arrow;
        t.arrow = RuleKind::defeater;
      } else {
        t.kind = Tok::tilde;
      }
    } else if ((c == '-' || c == '=') && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      advance();
      advance();
      t.kind = Tok::arrow;
      t.arrow = c == '-' ? RuleKind::strict : RuleKind::defeasible;
    } else if (c == ',') {
      single(Tok::comma);
    } else if (c == ';') {
      single(Tok::semi);
    } else if (c == '.') {
      single(Tok::dot);
    } else if (c == ':') {
      single(Tok::colon);
    } else if (c == '>') {
      single(Tok::gt);
    } else if (c == '(') {
      single(Tok::lparen);
    } else if (c == ')') {
      single(Tok::rparen);
    } else {
      // Coalesce a run of unrecognised bytes into one token.
      while (pos_ < src_.size() && !recognised(src_[pos_])) advance();
      if (pos_ == start) advance();
      t.kind = Tok::bad;
    }
    t.text = src_.substr(start, pos_ - start);
    t.span.length = pos_ - start;
    return t;
  }

 private:
  static bool recognised(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '~' || c == '-' ||
           c == '=' || c == ',' || c == ';' || c == '.' || c == ':' || c == '>' || c == '(' ||
           c == ')' || c == '%' || c == ' ' || c == '\t' || c == '\r' || c == '\n';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

struct SyntaxError {
  SourceSpan span;
  std::string message;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { tok_ = lex_.next(); }

  ParseResult run(ReasonerConfig config) {
    ParseResult out;
    Theory& t = out.theory;
    t.config = config;
    while (tok_.kind != Tok::end) {
      if (diags_.size() >= kMaxDiagnostics) {
        diags_.push_back({tok_.span, "too many errors; giving up"});
        break;
      }
      if (auto err = statement(t)) {
        diags_.push_back({err->span, err->message});
        recover();
      }
    }
    out.diagnostics = std::move(diags_);
    if (!out.diagnostics.empty()) return out;

    normalize(t);
    auto report = validate_theory(t);
    for (const auto& v : report.violations) {
      SourceSpan span{1, 1, 0};
      for (const auto& l : v.labels) {
        if (auto it = rule_spans_.find(l); it != rule_spans_.end()) {
          span = it->second;
          break;
        }
        if (auto it = sup_spans_.find(l); it != sup_spans_.end()) {
          span = it->second;
          break;
        }
      }
      out.diagnostics.push_back({span, v.message});
    }
    return out;
  }

 private:
  void bump() { tok_ = lex_.next(); }

  void recover() {
    while (tok_.kind != Tok::end && tok_.kind != Tok::dot) bump();
    if (tok_.kind == Tok::dot) bump();
  }

  static SyntaxError unexpected(const Token& t, std::string_view wanted) {
    if (t.kind == Tok::bad)
      return {t.span, "unexpected character '" + std::string(t.text.substr(0, 16)) + "'"};
    if (t.kind == Tok::end) return {t.span, "unexpected end of input, expected " + std::string(wanted)};
    return {t.span, "unexpected '" + std::string(t.text) + "', expected " + std::string(wanted)};
  }

  std::optional<SyntaxError> expect(Tok k, std::string_view wanted) {
    if (tok_.kind != k) return unexpected(tok_, wanted);
    bump();
    return std::nullopt;
  }

  std::optional<SyntaxError> literal(Literal& out) {
    Polarity p = Polarity::positive;
    if (tok_.kind == Tok::tilde) {
      p = Polarity::negative;
      bump();
    }
    if (tok_.kind != Tok::ident) return unexpected(tok_, "a literal");
    out = Literal{std::string(tok_.text), p};
    bump();
    return std::nullopt;
  }

  // list := lit (sep lit)* | '(' list ')' ; separators may not be mixed
  std::optional<SyntaxError> group(std::vector<Literal>& items, Tok& sep) {
    sep = Tok::end;
    bool paren = false;
    if (tok_.kind == Tok::lparen) {
      paren = true;
      bump();
    }
    for (;;) {
      if (tok_.kind == Tok::lparen) return SyntaxError{tok_.span, "mixed nesting unsupported"};
      Literal q;
      if (auto e = literal(q)) return e;
      items.push_back(std::move(q));
      if (tok_.kind != Tok::comma && tok_.kind != Tok::semi) break;
      if (sep != Tok::end && sep != tok_.kind) return SyntaxError{tok_.span, "mixed nesting unsupported"};
      sep = tok_.kind;
      bump();
    }
    if (paren) {
      if (auto e = expect(Tok::rparen, "')'")) return e;
    }
    if (tok_.kind == Tok::comma || tok_.kind == Tok::semi || tok_.kind == Tok::lparen)
      return SyntaxError{tok_.span, "mixed nesting unsupported"};
    return std::nullopt;
  }

  std::optional<SyntaxError> statement(Theory& t) {
    if (tok_.kind != Tok::ident) return unexpected(tok_, "a statement");
    const Token head = tok_;
    bump();

    if (head.text == "fact" && (tok_.kind == Tok::ident || tok_.kind == Tok::tilde)) {
      Literal q;
      if (auto e = literal(q)) return e;
      if (auto e = expect(Tok::dot, "'.'")) return e;
      t.facts.push_back(std::move(q));
      return std::nullopt;
    }

    if (tok_.kind == Tok::gt) {
      bump();
      if (tok_.kind != Tok::ident) return unexpected(tok_, "a rule label");
      Superiority s{std::string(head.text), std::string(tok_.text)};
      SourceSpan span = head.span;
      bump();
      if (auto e = expect(Tok::dot, "'.'")) return e;
      sup_spans_.emplace(s.stronger, span);
      sup_spans_.emplace(s.weaker, span);
      t.superiority.push_back(std::move(s));
      return std::nullopt;
    }

    if (tok_.kind != Tok::colon) return unexpected(tok_, "':', '>' or a fact literal");
    bump();

    Rule r;
    r.label = std::string(head.text);
    if (tok_.kind != Tok::arrow) {
      Tok sep;
      if (auto e = group(r.body.items, sep)) return e;
      r.body.kind = sep == Tok::semi ? BodyKind::sequence : BodyKind::multiset;
    }
    if (tok_.kind != Tok::arrow) return unexpected(tok_, "'->', '=>' or '~>'");
    r.kind = tok_.arrow;
    bump();
    if (tok_.kind == Tok::dot) return SyntaxError{tok_.span, "empty head in rule " + r.label};
    Tok sep;
    if (auto e = group(r.head.items, sep)) return e;
    r.head.kind = sep == Tok::semi    ? HeadKind::sequence
                  : sep == Tok::comma ? HeadKind::multiset
                                      : HeadKind::single;
    if (auto e = expect(Tok::dot, "'.'")) return e;
    rule_spans_.emplace(r.label, head.span);
    t.rules.push_back(std::move(r));
    return std::nullopt;
  }

  Lexer lex_;
  Token tok_;
  std::vector<Diagnostic> diags_;
  std::map<std::string, SourceSpan> rule_spans_;
  std::map<std::string, SourceSpan> sup_spans_;
};

}  // namespace

ParseResult parse_theory(std::string_view text, ReasonerConfig config) {
  Parser p(text);
  return p.run(config);
}

}  // namespace rsdl
