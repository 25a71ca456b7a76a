#include "nutl/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <vector>

#include "nutl/normalize.hpp"

namespace nutl {

namespace {

enum class Tok { Ident, True, False, Mu, Nu, Not, NextOp, LParen, RParen, And, Or, Imp, Iff, Xor, Dot, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

struct Lexer {
  const std::string& src;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& s) : src(s) {}

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

  void advance(size_t n) {
    for (size_t i = 0; i < n && pos < src.size(); ++i, ++pos) {
      if (src[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  }

  bool starts(const char* s) const {
    size_t n = std::char_traits<char>::length(s);
    return src.compare(pos, n, s) == 0;
  }

  Token lex() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) advance(1);
    Token t{Tok::End, "", line, col};
    if (pos >= src.size()) return t;
    char c = src[pos];
    auto make = [&](Tok k, size_t n) {
      t.kind = k;
      t.text = src.substr(pos, n);
      advance(n);
      return t;
    };
    if (starts("()")) return make(Tok::NextOp, 2);
    if (starts("/\\")) return make(Tok::And, 2);
    if (starts("\\/")) return make(Tok::Or, 2);
    if (starts("<->")) return make(Tok::Iff, 3);
    if (starts("->")) return make(Tok::Imp, 2);
    if (c == '^') return make(Tok::Xor, 1);
    if (c == '!') return make(Tok::Not, 1);
    if (c == '(') return make(Tok::LParen, 1);
    if (c == ')') return make(Tok::RParen, 1);
    if (c == '.') return make(Tok::Dot, 1);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t n = 1;
      while (pos + n < src.size()) {
        char d = src[pos + n];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '\'')
          ++n;
        else
          break;
      }
      std::string w = src.substr(pos, n);
      Tok k = Tok::Ident;
      if (w == "true") k = Tok::True;
      else if (w == "false") k = Tok::False;
      else if (w == "mu") k = Tok::Mu;
      else if (w == "nu") k = Tok::Nu;
      return make(k, n);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

struct Parser {
  Lexer lx;
  Token cur;
  std::vector<std::string> scope;        // user-visible binder names
  std::vector<Token> loose_idents;       // idents seen outside any scope
  std::set<std::string> binder_idents;   // every binder name in the input
  bool strict;

  Parser(const std::string& s, bool strict_) : lx(s), strict(strict_) { cur = lx.lex(); }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, cur.line, cur.col); }

  void eat(Tok k, const char* what) {
    if (cur.kind != k) fail(std::string("expected ") + what);
    cur = lx.lex();
  }

  bool in_scope(const std::string& n) const {
    return std::find(scope.rbegin(), scope.rend(), n) != scope.rend();
  }

  // Binary levels, loosest first: ^ < <-> < -> < \/ < /\ .
  Ref parse(int level) {
    if (level == 5) return unary();
    Ref l = parse(level + 1);
    for (;;) {
      Tok want;
      switch (level) {
        case 0: want = Tok::Xor; break;
        case 1: want = Tok::Iff; break;
        case 2: want = Tok::Imp; break;
        case 3: want = Tok::Or; break;
        default: want = Tok::And; break;
      }
      if (cur.kind != want) return l;
      Token op = cur;
      cur = lx.lex();
      if (level == 2) {  // -> is right-associative
        Ref r = parse(level);
        return desugar(op, l, r);
      }
      Ref r = parse(level + 1);
      l = desugar(op, l, r);
    }
  }

  Ref desugar(const Token& op, const Ref& l, const Ref& r) {
    switch (op.kind) {
      case Tok::And: return f_and(l, r);
      case Tok::Or: return f_or(l, r);
      case Tok::Imp: return f_or(checked_negate(l, op), r);
      case Tok::Iff:
        return f_and(f_or(checked_negate(l, op), r), f_or(checked_negate(r, op), l));
      case Tok::Xor: return checked_negate(desugar({Tok::Iff, "<->", op.line, op.col}, l, r), op);
      default: fail("internal operator");
    }
  }

  Ref checked_negate(const Ref& f, const Token& at) {
    auto fv = free_vars(f);
    if (!fv.empty())
      throw ParseError("cannot negate a subformula with free variable '" + *fv.begin() + "'",
                       at.line, at.col);
    return negate(f);
  }

  Ref unary() {
    if (cur.kind == Tok::Not) {
      Token op = cur;
      cur = lx.lex();
      return checked_negate(unary(), op);
    }
    if (cur.kind == Tok::NextOp) {
      cur = lx.lex();
      return next(unary());
    }
    return primary();
  }

  Ref primary() {
    switch (cur.kind) {
      case Tok::True: cur = lx.lex(); return f_true();
      case Tok::False: cur = lx.lex(); return f_false();
      case Tok::LParen: {
        cur = lx.lex();
        Ref f = parse(0);
        eat(Tok::RParen, "')'");
        return f;
      }
      case Tok::Mu:
      case Tok::Nu: {
        Kind k = cur.kind == Tok::Mu ? Kind::Mu : Kind::Nu;
        cur = lx.lex();
        if (cur.kind != Tok::Ident) fail("expected a variable name after binder");
        std::string v = cur.text;
        cur = lx.lex();
        eat(Tok::Dot, "'.'");
        binder_idents.insert(v);
        scope.push_back(v);
        Ref body = parse(0);  // maximal right extent
        scope.pop_back();
        return binder(k, v, body);
      }
      case Tok::Ident: {
        Token t = cur;
        cur = lx.lex();
        if (in_scope(t.text)) return var(t.text);
        loose_idents.push_back(t);
        return lit(t.text);
      }
      default: fail("expected a formula");
    }
  }
};

}  // namespace

Ref parse_formula(const std::string& text, bool strict_closed) {
  Parser p(text, strict_closed);
  Ref f = p.parse(0);
  if (p.cur.kind != Tok::End) p.fail("trailing input after formula");
  if (strict_closed) {
    // An identifier is a variable iff the input binds it somewhere; seeing it
    // outside that binder's scope is an unbound-variable error.
    for (const auto& t : p.loose_idents)
      if (p.binder_idents.count(t.text))
        throw ParseError("variable '" + t.text + "' occurs outside its binder", t.line, t.col);
  }
  return rename_canonical(f);
}

}  // namespace nutl
