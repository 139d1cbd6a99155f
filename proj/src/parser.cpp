#include "typlab/parser.hpp"

#include <cctype>
#include <set>

#include "typlab/error.hpp"

namespace typlab {

namespace {

enum class Tok { Ident, Keyword, LParen, RParen, Comma, Eq, Neq, Not, And, Or, Imp, Iff, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    cur_.pos = i_;
    if (i_ >= text_.size()) {
      cur_ = {Tok::End, "", i_};
      return;
    }
    char c = text_[i_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
        ++j;
      std::string word = text_.substr(i_, j - i_);
      cur_ = {is_identifier(word) ? Tok::Ident : Tok::Keyword, word, i_};
      i_ = j;
      return;
    }
    auto two = [&](char a, char b) {
      return c == a && i_ + 1 < text_.size() && text_[i_ + 1] == b;
    };
    if (two('<', '-') && i_ + 2 < text_.size() && text_[i_ + 2] == '>') {
      cur_ = {Tok::Iff, "<->", i_};
      i_ += 3;
      return;
    }
    if (two('-', '>')) {
      cur_ = {Tok::Imp, "->", i_};
      i_ += 2;
      return;
    }
    if (two('!', '=')) {
      cur_ = {Tok::Neq, "!=", i_};
      i_ += 2;
      return;
    }
    switch (c) {
      case '(': cur_ = {Tok::LParen, "(", i_}; break;
      case ')': cur_ = {Tok::RParen, ")", i_}; break;
      case ',': cur_ = {Tok::Comma, ",", i_}; break;
      case '=': cur_ = {Tok::Eq, "=", i_}; break;
      case '!': cur_ = {Tok::Not, "!", i_}; break;
      case '&': cur_ = {Tok::And, "&", i_}; break;
      case '|': cur_ = {Tok::Or, "|", i_}; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i_);
    }
    ++i_;
  }

  const std::string& text_;
  std::size_t i_ = 0;
  Token cur_{Tok::End, "", 0};
};

class Parser {
 public:
  Parser(const std::string& text, const Signature& sig, const std::vector<std::string>& params)
      : lex_(text), sig_(sig), params_(params.begin(), params.end()) {}

  FormulaRef parse() {
    FormulaRef f = formula();
    if (lex_.peek().kind != Tok::End)
      throw ParseError("trailing input after formula", lex_.peek().pos);
    return f;
  }

 private:
  FormulaRef formula() { return iff(); }

  FormulaRef iff() {
    FormulaRef f = imp();
    while (lex_.peek().kind == Tok::Iff) {
      lex_.take();
      f = Formula::biconditional(f, imp());
    }
    return f;
  }

  FormulaRef imp() {
    FormulaRef f = disj();
    while (lex_.peek().kind == Tok::Imp) {
      lex_.take();
      f = Formula::implication(f, disj());
    }
    return f;
  }

  FormulaRef disj() {
    FormulaRef f = conj();
    while (lex_.peek().kind == Tok::Or) {
      lex_.take();
      f = Formula::disjunction(f, conj());
    }
    return f;
  }

  FormulaRef conj() {
    FormulaRef f = unary();
    while (lex_.peek().kind == Tok::And) {
      lex_.take();
      f = Formula::conjunction(f, unary());
    }
    return f;
  }

  FormulaRef unary() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Not:
        lex_.take();
        return Formula::negation(unary());
      case Tok::Keyword:
        return quantified();
      case Tok::LParen: {
        // Could be a parenthesized formula or an atom starting with "(".
        // The atom grammar never starts with "(", so this is a formula.
        lex_.take();
        FormulaRef f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Ident:
        return atom();
      default:
        throw ParseError("expected formula", t.pos);
    }
  }

  FormulaRef quantified() {
    Token kw = lex_.take();
    Formula::Kind k;
    if (kw.text == "forall") k = Formula::Kind::Forall;
    else if (kw.text == "exists") k = Formula::Kind::Exists;
    else if (kw.text == "Qmost") k = Formula::Kind::Qmost;
    else if (kw.text == "Qinf") k = Formula::Kind::Qinf;
    else throw ParseError("unknown keyword '" + kw.text + "'", kw.pos);
    Token var = lex_.take();
    if (var.kind != Tok::Ident)
      throw ParseError("expected bound variable after '" + kw.text + "'", var.pos);
    if (params_.count(var.text))
      throw ParseError("quantifier captures parameter '" + var.text + "'", var.pos);
    if (sig_.has_symbol(var.text))
      throw ParseError("quantifier binds signature symbol '" + var.text + "'", var.pos);
    bool fresh = bound_.insert(var.text).second;
    FormulaRef body = formula();
    if (fresh) bound_.erase(var.text);
    return Formula::quantifier(k, var.text, body);
  }

  FormulaRef atom() {
    Token head = lex_.peek();
    if (sig_.has_relation(head.text)) {
      lex_.take();
      expect(Tok::LParen, "'('");
      std::vector<Term> args = term_list();
      expect(Tok::RParen, "')'");
      int arity = sig_.relation_arity(head.text);
      if (static_cast<int>(args.size()) != arity)
        throw ParseError("relation '" + head.text + "' expects " + std::to_string(arity) +
                             " argument(s), got " + std::to_string(args.size()),
                         head.pos);
      return Formula::relation(head.text, std::move(args));
    }
    Term lhs = term();
    Token op = lex_.take();
    if (op.kind == Tok::Eq) return Formula::equal(std::move(lhs), term());
    if (op.kind == Tok::Neq)
      return Formula::negation(Formula::equal(std::move(lhs), term()));
    throw ParseError("expected '=' or '!=' after term", op.pos);
  }

  std::vector<Term> term_list() {
    std::vector<Term> out;
    out.push_back(term());
    while (lex_.peek().kind == Tok::Comma) {
      lex_.take();
      out.push_back(term());
    }
    return out;
  }

  Term term() {
    Token t = lex_.take();
    if (t.kind != Tok::Ident) throw ParseError("expected term", t.pos);
    if (lex_.peek().kind == Tok::LParen) {
      if (!sig_.has_function(t.text))
        throw ParseError("unknown function '" + t.text + "'", t.pos);
      lex_.take();
      std::vector<Term> args = term_list();
      expect(Tok::RParen, "')'");
      int arity = sig_.function_arity(t.text);
      if (static_cast<int>(args.size()) != arity)
        throw ParseError("function '" + t.text + "' expects " + std::to_string(arity) +
                             " argument(s), got " + std::to_string(args.size()),
                         t.pos);
      return Term::apply(t.text, std::move(args));
    }
    if (bound_.count(t.text)) return Term::variable(t.text);
    if (params_.count(t.text)) return Term::parameter(t.text);
    if (sig_.has_constant(t.text)) return Term::constant(t.text);
    if (sig_.has_function(t.text)) {
      if (sig_.function_arity(t.text) == 0) return Term::apply(t.text, {});
      throw ParseError("function '" + t.text + "' used without arguments", t.pos);
    }
    if (sig_.has_relation(t.text))
      throw ParseError("relation '" + t.text + "' used as a term", t.pos);
    return Term::variable(t.text);
  }

  void expect(Tok k, const char* what) {
    Token t = lex_.take();
    if (t.kind != k) throw ParseError(std::string("expected ") + what, t.pos);
  }

  Lexer lex_;
  const Signature& sig_;
  std::set<std::string> params_;
  std::set<std::string> bound_;
};

}  // namespace

FormulaRef parse_formula(const std::string& text, const Signature& sig,
                         const std::vector<std::string>& params) {
  for (const std::string& p : params) {
    if (!is_identifier(p)) throw Error("invalid parameter name '" + p + "'");
    if (sig.has_symbol(p)) throw Error("parameter '" + p + "' collides with signature symbol");
  }
  return Parser(text, sig, params).parse();
}

std::string render_term(const Term& t) {
  if (t.kind != Term::Kind::Apply) return t.name;
  std::string out = t.name;
  if (t.args.empty()) return out;
  out += "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) out += ", ";
    out += render_term(t.args[i]);
  }
  out += ")";
  return out;
}

std::string render_formula(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::Relation: {
      std::string out = f.symbol + "(";
      for (std::size_t i = 0; i < f.terms.size(); ++i) {
        if (i) out += ", ";
        out += render_term(f.terms[i]);
      }
      return out + ")";
    }
    case K::Equal:
      return "(" + render_term(f.terms[0]) + " = " + render_term(f.terms[1]) + ")";
    case K::Not:
      return "!" + render_formula(*f.left);
    case K::And:
      return "(" + render_formula(*f.left) + " & " + render_formula(*f.right) + ")";
    case K::Or:
      return "(" + render_formula(*f.left) + " | " + render_formula(*f.right) + ")";
    case K::Implies:
      return "(" + render_formula(*f.left) + " -> " + render_formula(*f.right) + ")";
    case K::Iff:
      return "(" + render_formula(*f.left) + " <-> " + render_formula(*f.right) + ")";
    case K::Forall:
      return "forall " + f.symbol + " " + render_formula(*f.left);
    case K::Exists:
      return "exists " + f.symbol + " " + render_formula(*f.left);
    case K::Qmost:
      return "Qmost " + f.symbol + " " + render_formula(*f.left);
    case K::Qinf:
      return "Qinf " + f.symbol + " " + render_formula(*f.left);
  }
  throw Error("render_formula: bad kind");
}

}  // namespace typlab
