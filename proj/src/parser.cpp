#include "genlogic/parser.hpp"

#include <cctype>
#include <vector>

namespace genlogic {

ParseError::ParseError(Code code, std::size_t position, const std::string& message)
    : std::runtime_error("at " + std::to_string(position) + ": " + message),
      code_(code),
      position_(position),
      detail_(message) {}

namespace {

enum class Tok { ident, tilde, amp, bar, arrow, biarrow, lparen, rparen, comma, dot, forall, exists, end };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string_view text;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::tilde: return "'~'";
    case Tok::amp: return "'&'";
    case Tok::bar: return "'|'";
    case Tok::arrow: return "'->'";
    case Tok::biarrow: return "'<->'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::comma: return "','";
    case Tok::dot: return "'.'";
    case Tok::forall: return "'forall'";
    case Tok::exists: return "'exists'";
    case Tok::end: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto syntax = [&](const std::string& msg) { return ParseError(ParseError::Code::syntax, i, msg); };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      std::string_view word = s.substr(i, j - i);
      Tok kind = word == "forall" ? Tok::forall : word == "exists" ? Tok::exists : Tok::ident;
      out.push_back({kind, i, word});
      i = j;
      continue;
    }
    auto single = [&](Tok t) {
      out.push_back({t, i, s.substr(i, 1)});
      ++i;
    };
    switch (c) {
      case '~': single(Tok::tilde); break;
      case '&': single(Tok::amp); break;
      case '|': single(Tok::bar); break;
      case '(': single(Tok::lparen); break;
      case ')': single(Tok::rparen); break;
      case ',': single(Tok::comma); break;
      case '.': single(Tok::dot); break;
      case '-':
        if (s.substr(i, 2) != "->") throw syntax("expected '->'");
        out.push_back({Tok::arrow, i, s.substr(i, 2)});
        i += 2;
        break;
      case '<':
        if (s.substr(i, 3) != "<->") throw syntax("expected '<->'");
        out.push_back({Tok::biarrow, i, s.substr(i, 3)});
        i += 3;
        break;
      default:
        throw syntax(std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::end, s.size(), {}});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : tokens_(tokenize(text)), sig_(sig) {}

  Formula parse() {
    Formula f = parse_iff();
    if (peek().kind != Tok::end)
      throw error(ParseError::Code::syntax, std::string("unexpected ") + describe(peek().kind));
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool accept(Tok t) {
    if (peek().kind != t) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok t) {
    if (peek().kind != t)
      throw error(ParseError::Code::syntax,
                  std::string("expected ") + describe(t) + ", found " + describe(peek().kind));
    return advance();
  }
  ParseError error(ParseError::Code code, const std::string& msg) const {
    return ParseError(code, peek().pos, msg);
  }

  Formula parse_iff() {
    Formula lhs = parse_imp();
    if (accept(Tok::biarrow)) return Formula::equivalence(std::move(lhs), parse_iff());
    return lhs;
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (accept(Tok::arrow)) return Formula::implication(std::move(lhs), parse_imp());
    return lhs;
  }

  Formula parse_or() {
    Formula acc = parse_and();
    while (accept(Tok::bar)) acc = Formula::disjunction(std::move(acc), parse_and());
    return acc;
  }

  Formula parse_and() {
    Formula acc = parse_neg();
    while (accept(Tok::amp)) acc = Formula::conjunction(std::move(acc), parse_neg());
    return acc;
  }

  Formula parse_neg() {
    if (accept(Tok::tilde)) return Formula::negation(parse_neg());
    return parse_atomterm();
  }

  Formula parse_atomterm() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::lparen: {
        advance();
        Formula inner = parse_iff();
        expect(Tok::rparen);
        return inner;
      }
      case Tok::forall:
      case Tok::exists: {
        advance();
        const Token& var = expect(Tok::ident);
        expect(Tok::dot);
        bound_.emplace_back(var.text);
        Formula body = parse_neg();
        bound_.pop_back();
        return t.kind == Tok::forall ? Formula::forall(std::string(var.text), std::move(body))
                                     : Formula::exists(std::string(var.text), std::move(body));
      }
      case Tok::ident:
        return parse_application();
      default:
        throw error(ParseError::Code::syntax, std::string("expected a formula, found ") + describe(t.kind));
    }
  }

  Formula parse_application() {
    const Token& name = advance();
    if (peek().kind != Tok::lparen) {
      if (auto prop = sig_.find_proposition(name.text)) return Formula::atom(sig_.proposition_atom(*prop));
      if (auto pred = sig_.find_predicate(name.text))
        throw ParseError(ParseError::Code::arity_mismatch, name.pos,
                         "predicate '" + std::string(name.text) + "' expects " +
                             std::to_string(sig_.predicates()[*pred].arity) + " argument(s)");
      throw ParseError(ParseError::Code::unknown_identifier, name.pos,
                       "unknown proposition '" + std::string(name.text) + "'");
    }
    auto pred = sig_.find_predicate(name.text);
    if (!pred) {
      if (sig_.find_proposition(name.text))
        throw ParseError(ParseError::Code::arity_mismatch, name.pos,
                         "proposition '" + std::string(name.text) + "' takes no arguments");
      throw ParseError(ParseError::Code::unknown_identifier, name.pos,
                       "unknown predicate '" + std::string(name.text) + "'");
    }
    advance();  // (
    std::vector<Term> args;
    bool has_variable = false;
    do {
      const Token& arg = peek();
      if (arg.kind != Tok::ident)
        throw error(ParseError::Code::syntax, std::string("expected a term, found ") + describe(arg.kind));
      advance();
      if (is_bound(arg.text)) {
        args.push_back(Term::variable(std::string(arg.text)));
        has_variable = true;
      } else if (auto c = sig_.find_constant(arg.text)) {
        args.push_back(Term::constant(*c));
      } else {
        throw ParseError(ParseError::Code::unbound_variable, arg.pos,
                         "'" + std::string(arg.text) + "' is neither a constant nor a bound variable");
      }
    } while (accept(Tok::comma));
    expect(Tok::rparen);
    const std::size_t arity = sig_.predicates()[*pred].arity;
    if (args.size() != arity)
      throw ParseError(ParseError::Code::arity_mismatch, name.pos,
                       "predicate '" + std::string(name.text) + "' expects " + std::to_string(arity) +
                           " argument(s), got " + std::to_string(args.size()));
    if (!has_variable) {
      std::vector<std::size_t> consts;
      for (const auto& a : args) consts.push_back(a.constant_index);
      return Formula::atom(sig_.predicate_atom(*pred, consts));
    }
    return Formula::predicate(*pred, std::move(args));
  }

  bool is_bound(std::string_view name) const {
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it)
      if (*it == name) return true;
    return false;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Signature& sig_;
  std::vector<std::string_view> bound_;
};

}  // namespace

Formula parse_formula(std::string_view text, const Signature& sig) { return Parser(text, sig).parse(); }

}  // namespace genlogic
