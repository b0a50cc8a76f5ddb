#include "qes/parser.hpp"

#include "qes/errors.hpp"

#include <algorithm>
#include <cctype>

namespace qes {
namespace {

enum class Tok { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int column;
};

std::vector<Token> tokenize(std::string_view s, int line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), col});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Name, std::string(s.substr(i, j - i)), col});
      i = j;
    } else {
      Tok kind;
      switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '^': kind = Tok::Caret; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      }
      out.push_back({kind, std::string(1, c), col});
      ++i;
    }
  }
  out.push_back({Tok::End, "", static_cast<int>(s.size()) + 1});
  return out;
}

// Recursive descent producing XPoly values; MultiPoly parsing rejects x.
class Parser {
 public:
  Parser(std::string_view text, RegistryPtr registry, int line, bool allow_x)
      : tokens_(tokenize(text, line)), registry_(std::move(registry)), line_(line), allow_x_(allow_x) {}

  XPoly parse() {
    XPoly result = expression();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return result;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, peek().column); }

  XPoly expression() {
    XPoly acc = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = next().kind == Tok::Minus;
      XPoly rhs = term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  XPoly term() {
    XPoly acc = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const bool divide = peek().kind == Tok::Slash;
      const int column = next().column;
      XPoly rhs = unary();
      if (divide) {
        std::optional<Rational> c;
        if (rhs.is_zero()) {
          c = Rational(0);
        } else if (rhs.degree() == 0u) {
          c = rhs.coeff(0).constant_value();
        }
        if (!c) throw ParseError("divisor must be a rational constant", line_, column);
        if (*c == 0) throw ParseError("division by zero", line_, column);
        acc *= Rational(1 / *c);
      } else {
        acc *= rhs;
      }
    }
    return acc;
  }

  XPoly unary() {
    if (peek().kind == Tok::Minus) {
      next();
      return -unary();
    }
    if (peek().kind == Tok::Plus) {
      next();
      return unary();
    }
    return power();
  }

  XPoly power() {
    XPoly base = atom();
    if (peek().kind == Tok::Caret) {
      next();
      if (peek().kind != Tok::Number) fail("exponent must be a non-negative integer literal");
      const auto& tok = next();
      if (tok.text.size() > 4) throw ParseError("exponent too large", line_, tok.column);
      const int e = std::stoi(tok.text);
      XPoly result = XPoly::constant(MultiPoly::constant(registry_, 1));
      for (int k = 0; k < e; ++k) result *= base;
      return result;
    }
    return base;
  }

  XPoly atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Number: {
        next();
        return XPoly::constant(MultiPoly::constant(registry_, Rational(Integer(tok.text, 10))));
      }
      case Tok::Name: {
        next();
        if (tok.text == kSpatialVariable) {
          if (!allow_x_) throw ParseError("'x' is not allowed here", line_, tok.column);
          return XPoly::x(registry_);
        }
        auto index = registry_->find(tok.text);
        if (!index) throw ParseError("unknown name '" + tok.text + "'", line_, tok.column);
        return XPoly::constant(MultiPoly::variable(registry_, *index));
      }
      case Tok::LParen: {
        next();
        XPoly inner = expression();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        next();
        return inner;
      }
      case Tok::End: fail("unexpected end of expression");
      default: fail("unexpected '" + tok.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  RegistryPtr registry_;
  int line_;
  bool allow_x_;
};

}  // namespace

XPoly parse_xpoly(std::string_view text, const RegistryPtr& registry, int line) {
  return Parser(text, registry, line, true).parse();
}

MultiPoly parse_multipoly(std::string_view text, const RegistryPtr& registry, int line) {
  XPoly p = Parser(text, registry, line, false).parse();
  return p.is_zero() ? MultiPoly(registry) : p.coeff(0);
}

std::vector<std::string> collect_identifiers(std::string_view text, int line) {
  std::vector<std::string> out;
  for (const auto& tok : tokenize(text, line)) {
    if (tok.kind != Tok::Name || tok.text == kSpatialVariable) continue;
    if (std::find(out.begin(), out.end(), tok.text) == out.end()) out.push_back(tok.text);
  }
  return out;
}

}  // namespace qes
