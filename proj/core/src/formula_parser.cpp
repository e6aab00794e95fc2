#include <cctype>
#include <optional>
#include <vector>

#include "qcw/formula.hpp"

namespace qcw {

namespace {

struct Token {
  enum class Type { Ident, LParen, RParen, Comma, Dot, Amp, Bar, End };
  Type type;
  std::string text;
  int line;
  int column;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '@';
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t{Token::Type::End, std::string(1, c), line, col};
    switch (c) {
      case '(': t.type = Token::Type::LParen; break;
      case ')': t.type = Token::Type::RParen; break;
      case ',': t.type = Token::Type::Comma; break;
      case '.': t.type = Token::Type::Dot; break;
      case '&': t.type = Token::Type::Amp; break;
      case '|': t.type = Token::Type::Bar; break;
      default:
        if (ident_char(c)) {
          std::size_t j = i;
          while (j < src.size() && ident_char(src[j])) ++j;
          t.type = Token::Type::Ident;
          t.text = std::string(src.substr(i, j - i));
          out.push_back(t);
          advance(j - i);
          continue;
        }
        throw FormulaError(FormulaError::Code::Syntax, line, col,
                           std::string("unexpected character '") + c + "'");
    }
    out.push_back(t);
    advance(1);
  }
  out.push_back(Token{Token::Type::End, "", line, col});
  return out;
}

std::optional<Quantifier> quantifier_for(std::string_view word) {
  if (word == "A") return Quantifier::ForallCountable;
  if (word == "E") return Quantifier::ExistsCountable;
  if (word == "Ec") return Quantifier::ExistsCompact;
  if (word == "Ep") return Quantifier::ExistsPolish;
  return std::nullopt;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s)
    if (c == '@') return false;
  return true;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse_all() {
    Formula f = formula();
    if (peek().type != Token::Type::End) fail(peek(), "unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    throw FormulaError(FormulaError::Code::Syntax, t.line, t.column, msg);
  }

  const Token& expect(Token::Type type, const char* what) {
    if (peek().type != type) {
      const std::string found = peek().type == Token::Type::End ? "end of input" : "'" + peek().text + "'";
      fail(peek(), std::string("expected ") + what + ", found " + found);
    }
    return take();
  }

  std::string identifier(const char* what) {
    const Token& t = expect(Token::Type::Ident, what);
    if (!is_identifier(t.text)) fail(t, std::string("'") + t.text + "' is not a valid " + what);
    return t.text;
  }

  Formula formula() {
    const Token& t = peek();
    if (t.type == Token::Type::Ident) {
      if (auto q = quantifier_for(t.text)) {
        take();
        const Token& var_tok = peek();
        std::string var = identifier("variable");
        for (const auto& b : scope_)
          if (b == var)
            throw FormulaError(FormulaError::Code::DuplicateBinder, var_tok.line, var_tok.column,
                               "variable '" + var + "' is already bound by an enclosing quantifier");
        expect(Token::Type::Dot, "'.'");
        scope_.push_back(var);
        Formula body = formula();
        scope_.pop_back();
        return Formula::quantified(*q, std::move(var), std::move(body));
      }
    }
    return disjunction();
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (peek().type == Token::Type::Bar) {
      take();
      f = Formula::disjunction(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = negation();
    while (peek().type == Token::Type::Amp) {
      take();
      f = Formula::conjunction(std::move(f), negation());
    }
    return f;
  }

  Formula negation() {
    const Token& t = peek();
    if (t.type == Token::Type::Ident && t.text == "not") {
      take();
      return Formula::negation(negation());
    }
    if (t.type == Token::Type::LParen) {
      take();
      Formula f = formula();
      expect(Token::Type::RParen, "')'");
      return f;
    }
    return atom();
  }

  Formula atom() {
    const Token& kind_tok = expect(Token::Type::Ident, "atom kind");
    Atom a;
    const std::string& k = kind_tok.text;
    if (k == "clopen") {
      a.kind = AtomKind::Clopen;
    } else if (k == "open") {
      a.kind = AtomKind::Open;
    } else if (k == "closed") {
      a.kind = AtomKind::Closed;
    } else if (k == "stex") {
      a.kind = AtomKind::StableExists;
    } else if (k.starts_with("borel@")) {
      auto cls = parse_pointclass(std::string_view(k).substr(6));
      if (!cls) fail(kind_tok, "unknown pointclass in '" + k + "'");
      a.kind = AtomKind::Opaque;
      a.opaque_class = *cls;
    } else if (quantifier_for(k)) {
      fail(kind_tok, "quantifier '" + k + "' must be parenthesised here");
    } else {
      fail(kind_tok, "unknown atom kind '" + k + "'");
    }
    expect(Token::Type::LParen, "'('");
    a.name = identifier("predicate name");
    while (peek().type == Token::Type::Comma) {
      take();
      const Token& var_tok = peek();
      std::string var = identifier("variable");
      bool bound = false;
      for (const auto& b : scope_) bound = bound || b == var;
      if (!bound)
        throw FormulaError(FormulaError::Code::UnboundVariable, var_tok.line, var_tok.column,
                           "variable '" + var + "' is not bound");
      a.variables.push_back(std::move(var));
    }
    expect(Token::Type::RParen, "')'");
    return Formula::make_atom(std::move(a));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

}  // namespace qcw
