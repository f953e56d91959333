// parser.cpp -- lexer and recursive-descent parser for the surface syntax
// SPDX-License-Identifier: MIT
#include "parser.h"

#include <cctype>
#include <cstdlib>

#include "check.h"

namespace actorlab {

std::string to_string(const Diagnostic &d) {
  return std::to_string(d.line) + ":" + std::to_string(d.col) + ": " +
         d.message;
}

namespace {

enum class Tok : uint8_t {
  End,
  Ident,   // also keywords, resolved by spelling
  Number,  // unsigned integer
  Actor,   // C#k (run-time mode only)
  At,      // @
  Bang,    // !
  Dot,     // .
  Comma,   // ,
  Equals,  // =
  Plus,    // +
  Arrow,   // <-
  LParen,
  RParen,
  LBrace,
  RBrace,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;      // Ident spelling
  uint64_t number = 0;   // Number value
  ActorName actor;       // Actor
  int line = 1, col = 1;
};

struct ParseError {
  Diagnostic diag;
};

[[noreturn]] void fail(const Token &at, std::string message) {
  throw ParseError{{at.line, at.col, std::move(message)}};
}

bool ident_start(char c) { return std::isalpha(uint8_t(c)) || c == '_'; }
bool ident_cont(char c) {
  return std::isalnum(uint8_t(c)) || c == '_' || c == '\'';
}

class Lexer {
 public:
  Lexer(std::string_view text, bool runtime) : text_(text), runtime_(runtime) {
    next();
  }

  const Token &peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    next();
    return t;
  }

 private:
  void next() {
    skip_space();
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= text_.size()) {
      tok_.kind = Tok::End;
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case '@': advance(); tok_.kind = Tok::At; return;
      case '!': advance(); tok_.kind = Tok::Bang; return;
      case '.': advance(); tok_.kind = Tok::Dot; return;
      case ',': advance(); tok_.kind = Tok::Comma; return;
      case '=': advance(); tok_.kind = Tok::Equals; return;
      case '+': advance(); tok_.kind = Tok::Plus; return;
      case '(': advance(); tok_.kind = Tok::LParen; return;
      case ')': advance(); tok_.kind = Tok::RParen; return;
      case '{': advance(); tok_.kind = Tok::LBrace; return;
      case '}': advance(); tok_.kind = Tok::RBrace; return;
      default: break;
    }
    if (c == '<' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
      advance();
      advance();
      tok_.kind = Tok::Arrow;
      return;
    }
    if (std::isdigit(uint8_t(c))) {
      tok_.kind = Tok::Number;
      tok_.number = lex_number();
      return;
    }
    if (c == '$') {
      if (!runtime_)
        throw ParseError{{line_, col_,
                          "run-time variable '$' is not valid in source"}};
      advance();
      if (pos_ >= text_.size() || !std::isdigit(uint8_t(text_[pos_])))
        throw ParseError{{line_, col_, "expected digits after '$'"}};
      uint64_t n = lex_number();
      tok_.kind = Tok::Ident;
      tok_.text = "$" + std::to_string(n);
      return;
    }
    if (ident_start(c)) {
      std::string name = lex_ident();
      if (pos_ < text_.size() && text_[pos_] == '#') {
        if (!runtime_)
          throw ParseError{{line_, col_,
                            "actor literal '#' is not valid in source"}};
        advance();
        if (pos_ >= text_.size() || !std::isdigit(uint8_t(text_[pos_])))
          throw ParseError{{line_, col_, "expected index after '#'"}};
        uint64_t n = lex_number();
        tok_.kind = Tok::Actor;
        tok_.actor = ActorName{intern(name), static_cast<uint32_t>(n)};
        return;
      }
      tok_.kind = Tok::Ident;
      tok_.text = std::move(name);
      return;
    }
    throw ParseError{{line_, col_, std::string("unexpected character '") + c +
                                       "'"}};
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(uint8_t(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  uint64_t lex_number() {
    uint64_t n = 0;
    while (pos_ < text_.size() && std::isdigit(uint8_t(text_[pos_]))) {
      n = n * 10 + uint64_t(text_[pos_] - '0');
      advance();
    }
    return n;
  }

  std::string lex_ident() {
    std::string s;
    while (pos_ < text_.size() && ident_cont(text_[pos_])) {
      s += text_[pos_];
      advance();
    }
    return s;
  }

  std::string_view text_;
  bool runtime_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

bool is_keyword(const std::string &s) {
  return s == "class" || s == "def" || s == "main" || s == "let" ||
         s == "in" || s == "if" || s == "then" || s == "else" ||
         s == "new" || s == "this";
}

class Parser {
 public:
  Parser(std::string_view text, bool runtime) : lex_(text, runtime) {}

  Program parse_program() {
    Program prog;
    while (at_ident("class")) prog.classes.push_back(parse_class());
    expect_ident("main");
    expect(Tok::LBrace, "'{'");
    prog.main = parse_process();
    expect(Tok::RBrace, "'}'");
    expect(Tok::End, "end of input");
    prog.rebuild_index();
    return prog;
  }

  ProcP parse_whole_process() {
    ProcP p = parse_process();
    expect(Tok::End, "end of input");
    return p;
  }

 private:
  bool at(Tok k) const { return lex_.peek().kind == k; }
  bool at_ident(std::string_view kw) const {
    return at(Tok::Ident) && lex_.peek().text == kw;
  }

  Token expect(Tok k, const char *what) {
    if (!at(k)) fail(lex_.peek(), std::string("expected ") + what);
    return lex_.take();
  }

  Token expect_ident(std::string_view kw) {
    if (!at_ident(kw))
      fail(lex_.peek(), "expected '" + std::string(kw) + "'");
    return lex_.take();
  }

  Sym expect_name(const char *what) {
    if (!at(Tok::Ident)) fail(lex_.peek(), std::string("expected ") + what);
    Token t = lex_.take();
    if (is_keyword(t.text)) fail(t, "'" + t.text + "' is a keyword");
    return intern(t.text);
  }

  ClassDef parse_class() {
    expect_ident("class");
    ClassDef cls;
    cls.name = expect_name("class name");
    expect(Tok::LParen, "'('");
    if (!at(Tok::RParen)) {
      cls.fields.push_back(expect_name("field name"));
      while (at(Tok::Comma)) {
        lex_.take();
        cls.fields.push_back(expect_name("field name"));
      }
    }
    expect(Tok::RParen, "')'");
    expect(Tok::LBrace, "'{'");
    while (at_ident("def")) {
      lex_.take();
      MethodDef m;
      m.name = expect_name("method name");
      expect(Tok::LParen, "'('");
      if (!at(Tok::RParen)) {
        m.params.push_back(expect_name("parameter"));
        while (at(Tok::Comma)) {
          lex_.take();
          m.params.push_back(expect_name("parameter"));
        }
      }
      expect(Tok::RParen, "')'");
      expect(Tok::Equals, "'='");
      m.body = parse_process();
      cls.methods.push_back(std::move(m));
    }
    expect(Tok::RBrace, "'}'");
    return cls;
  }

  // process := prefix ("+" prefix)*, left-associated.
  ProcP parse_process() {
    ProcP p = parse_prefix();
    while (at(Tok::Plus)) {
      lex_.take();
      p = mk_plus(std::move(p), parse_prefix());
    }
    return p;
  }

  ProcP parse_prefix() {
    const Token &t = lex_.peek();
    switch (t.kind) {
      case Tok::Number: {
        Token n = lex_.take();
        if (n.number != 0) fail(n, "expected process (did you mean '0'?)");
        return nil_proc();
      }
      case Tok::LParen: {
        lex_.take();
        ProcP p = parse_process();
        expect(Tok::RParen, "')'");
        return p;
      }
      case Tok::At: {
        // Field update or an invocation whose target is a field read.
        Token at_tok = lex_.take();
        (void)at_tok;
        Sym field = expect_name("field name");
        if (at(Tok::Arrow)) {
          lex_.take();
          ExprP value = parse_expr();
          expect(Tok::Dot, "'.' (updates require a continuation)");
          return mk_update(field, std::move(value), parse_prefix());
        }
        return parse_invoke_from(mk_field(field));
      }
      case Tok::Ident: {
        if (t.text == "let") {
          lex_.take();
          Sym var = expect_name("variable");
          expect(Tok::Equals, "'='");
          ExprP value = parse_expr();
          expect_ident("in");
          return mk_let(var, std::move(value), parse_prefix());
        }
        if (t.text == "if") {
          lex_.take();
          ExprP l = parse_expr();
          expect(Tok::Equals, "'='");
          ExprP r = parse_expr();
          expect_ident("then");
          ProcP then_p = parse_prefix();
          ProcP else_p = nil_proc();
          if (at_ident("else")) {
            lex_.take();
            else_p = parse_prefix();
          }
          return mk_match(std::move(l), std::move(r), std::move(then_p),
                          std::move(else_p));
        }
        return parse_invoke_from(parse_expr());
      }
      case Tok::Actor:
        return parse_invoke_from(parse_expr());
      default:
        fail(t, "expected process");
    }
  }

  ProcP parse_invoke_from(ExprP target) {
    expect(Tok::Bang, "'!'");
    Sym method = expect_name("method name");
    expect(Tok::LParen, "'('");
    std::vector<ExprP> args;
    if (!at(Tok::RParen)) {
      args.push_back(parse_expr());
      while (at(Tok::Comma)) {
        lex_.take();
        args.push_back(parse_expr());
      }
    }
    expect(Tok::RParen, "')'");
    ProcP cont = nil_proc();
    if (at(Tok::Dot)) {
      lex_.take();
      cont = parse_prefix();
    }
    return mk_invoke(std::move(target), method, std::move(args),
                     std::move(cont));
  }

  ExprP parse_expr() {
    const Token &t = lex_.peek();
    switch (t.kind) {
      case Tok::At: {
        lex_.take();
        return mk_field(expect_name("field name"));
      }
      case Tok::Actor: {
        Token a = lex_.take();
        return mk_actor(a.actor);
      }
      case Tok::Ident: {
        if (t.text == "this") {
          lex_.take();
          return mk_this();
        }
        if (t.text == "new") {
          lex_.take();
          Sym cls = expect_name("class name");
          expect(Tok::LParen, "'('");
          std::vector<ExprP> args;
          if (!at(Tok::RParen)) {
            args.push_back(parse_expr());
            while (at(Tok::Comma)) {
              lex_.take();
              args.push_back(parse_expr());
            }
          }
          expect(Tok::RParen, "')'");
          return mk_new(cls, std::move(args));
        }
        return mk_var(expect_name("expression"));
      }
      default:
        fail(t, "expected expression");
    }
  }

  Lexer lex_;
};

}  // namespace

ParseResult parse_program(std::string_view text) {
  ParseResult result;
  try {
    Parser parser(text, /*runtime=*/false);
    Program prog = parser.parse_program();
    for (ClassDef &c : prog.classes)
      for (MethodDef &m : c.methods) m.body = desugar_invoke_targets(m.body);
    prog.main = desugar_invoke_targets(prog.main);
    prog.rebuild_index();
    result.diagnostics = check_well_formed(prog);
    if (result.diagnostics.empty()) result.program = std::move(prog);
  } catch (const ParseError &e) {
    result.diagnostics.push_back(e.diag);
    result.syntax_error = true;
  }
  return result;
}

ProcResult parse_process_text(std::string_view text, bool runtime) {
  ProcResult result;
  try {
    Parser parser(text, runtime);
    result.proc = desugar_invoke_targets(parser.parse_whole_process());
  } catch (const ParseError &e) {
    result.diagnostics.push_back(e.diag);
  }
  return result;
}

std::optional<Value> parse_value_text(std::string_view text) {
  try {
    Lexer lex(text, /*runtime=*/true);
    Token t = lex.take();
    if (t.kind == Tok::Actor && lex.peek().kind == Tok::End)
      return Value::of_actor(t.actor);
    if (t.kind == Tok::Ident && lex.peek().kind == Tok::End &&
        !is_keyword(t.text))
      return Value::of_var(intern(t.text));
    return std::nullopt;
  } catch (const ParseError &) {
    return std::nullopt;
  }
}

}  // namespace actorlab
