#include "gamma_ideal/parser.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <optional>

#include "gamma_ideal/errors.hpp"

namespace gamma_ideal {

namespace {

enum class Tok { Number, ImagNumber, ImagUnit, ImagSuffix, S, G, LParen, RParen, Plus, Minus, Star, Slash, Caret, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto glued_i = [&](std::size_t at) {
    return at < src.size() && src[at] == 'i' && (at + 1 >= src.size() || !is_ident_char(src[at + 1]));
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      std::string digits(src.substr(start, i - start));
      if (glued_i(i)) {
        ++i;
        out.push_back({Tok::ImagNumber, std::move(digits), start});
      } else if (i < src.size() && is_ident_char(src[i])) {
        throw ParseError("unexpected character '" + std::string(1, src[i]) + "' after number", i);
      } else {
        out.push_back({Tok::Number, std::move(digits), start});
      }
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < src.size() && is_ident_char(src[i])) ++i;
      const std::string_view word = src.substr(start, i - start);
      if (word == "s") out.push_back({Tok::S, "s", start});
      else if (word == "G") out.push_back({Tok::G, "G", start});
      else if (word == "i") out.push_back({Tok::ImagUnit, "i", start});
      else throw ParseError("unknown identifier '" + std::string(word) + "'", start);
      continue;
    }
    ++i;
    switch (c) {
      case '(': out.push_back({Tok::LParen, "(", start}); break;
      case ')':
        out.push_back({Tok::RParen, ")", start});
        if (glued_i(i)) {
          out.push_back({Tok::ImagSuffix, "i", i});
          ++i;
        }
        break;
      case '+': out.push_back({Tok::Plus, "+", start}); break;
      case '-': out.push_back({Tok::Minus, "-", start}); break;
      case '*': out.push_back({Tok::Star, "*", start}); break;
      case '/': out.push_back({Tok::Slash, "/", start}); break;
      case '^': out.push_back({Tok::Caret, "^", start}); break;
      default: throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
    }
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

ExprAst leaf_literal(GaussianRational value, std::size_t pos) {
  ExprAst node;
  node.kind = ExprAst::Kind::Literal;
  node.literal = std::move(value);
  node.position = pos;
  return node;
}

ExprAst node_of(ExprAst::Kind kind, std::size_t pos, std::vector<ExprAst> children) {
  ExprAst node;
  node.kind = kind;
  node.position = pos;
  node.children = std::move(children);
  return node;
}

class Parser {
 public:
  Parser(std::string_view src, std::size_t arity) : tokens_(tokenize(src)), arity_(arity) {}

  ExprAst parse() {
    if (peek().kind == Tok::End) throw ParseError("empty expression", 0);
    ExprAst e = expr();
    if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return e;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  const Token& advance() { return tokens_[at_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++at_;
    return true;
  }
  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      throw ParseError(std::string("expected ") + what + (peek().kind == Tok::End ? " before end of input" : ", found '" + peek().text + "'"),
                       peek().pos);
    }
    return advance();
  }

  unsigned parse_uint(const Token& tok) {
    unsigned value = 0;
    const auto* first = tok.text.data();
    const auto* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) throw ParseError("integer '" + tok.text + "' out of range", tok.pos);
    return value;
  }

  ExprAst expr() {
    ExprAst lhs = term();
    for (;;) {
      const std::size_t pos = peek().pos;
      if (accept(Tok::Plus)) lhs = node_of(ExprAst::Kind::Add, pos, {std::move(lhs), term()});
      else if (accept(Tok::Minus)) lhs = node_of(ExprAst::Kind::Sub, pos, {std::move(lhs), term()});
      else return lhs;
    }
  }

  ExprAst term() {
    ExprAst lhs = unary();
    for (;;) {
      const std::size_t pos = peek().pos;
      if (accept(Tok::Star)) lhs = node_of(ExprAst::Kind::Mul, pos, {std::move(lhs), unary()});
      else if (accept(Tok::Slash)) lhs = node_of(ExprAst::Kind::Div, pos, {std::move(lhs), unary()});
      else return lhs;
    }
  }

  ExprAst unary() {
    const std::size_t pos = peek().pos;
    if (accept(Tok::Minus)) return node_of(ExprAst::Kind::Negate, pos, {unary()});
    if (accept(Tok::Plus)) return unary();
    return factor();
  }

  ExprAst factor() {
    ExprAst base = atom();
    const std::size_t pos = peek().pos;
    if (accept(Tok::Caret)) {
      const Token& tok = expect(Tok::Number, "non-negative integer exponent");
      ExprAst pow = node_of(ExprAst::Kind::Pow, pos, {std::move(base)});
      pow.exponent = parse_uint(tok);
      return pow;
    }
    return base;
  }

  ExprAst atom() {
    const Token& tok = advance();
    switch (tok.kind) {
      case Tok::Number: return leaf_literal(GaussianRational(mpq_class(mpz_class(tok.text))), tok.pos);
      case Tok::ImagNumber: return leaf_literal(GaussianRational(0, mpq_class(mpz_class(tok.text))), tok.pos);
      case Tok::ImagUnit: return leaf_literal(GaussianRational::imaginary_unit(), tok.pos);
      case Tok::S: {
        ExprAst node;
        node.kind = ExprAst::Kind::Variable;
        node.position = tok.pos;
        return node;
      }
      case Tok::G: {
        expect(Tok::LParen, "'(' after G");
        const Token& idx = expect(Tok::Number, "gamma index");
        const unsigned index = parse_uint(idx);
        if (index >= arity_) {
          throw ParseError("gamma index G(" + idx.text + ") out of range for " + std::to_string(arity_) + " shift(s)",
                           idx.pos);
        }
        expect(Tok::RParen, "')'");
        if (peek().kind == Tok::ImagSuffix) throw ParseError("unexpected 'i' after G(...)", peek().pos);
        ExprAst node;
        node.kind = ExprAst::Kind::Gamma;
        node.index = index;
        node.position = tok.pos;
        return node;
      }
      case Tok::LParen: {
        ExprAst inner = expr();
        expect(Tok::RParen, "')'");
        const std::size_t pos = peek().pos;
        if (accept(Tok::ImagSuffix)) {
          return node_of(ExprAst::Kind::Mul, pos, {std::move(inner), leaf_literal(GaussianRational::imaginary_unit(), pos)});
        }
        return inner;
      }
      case Tok::End: throw ParseError("unexpected end of input", tok.pos);
      default: throw ParseError("unexpected '" + tok.text + "'", tok.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
  std::size_t arity_;
};

}  // namespace

ExprAst parse_poly(std::string_view text, std::size_t arity) { return Parser(text, arity).parse(); }

GammaPoly lower(const ExprAst& ast, std::size_t arity) {
  using Kind = ExprAst::Kind;
  switch (ast.kind) {
    case Kind::Literal: return GammaPoly::constant(arity, ast.literal);
    case Kind::Variable: return GammaPoly::x(arity);
    case Kind::Gamma:
      if (ast.index >= arity) throw ParseError("gamma index out of range", ast.position);
      return GammaPoly::gamma(arity, ast.index);
    case Kind::Negate: return -lower(ast.children.at(0), arity);
    case Kind::Add: return lower(ast.children.at(0), arity) + lower(ast.children.at(1), arity);
    case Kind::Sub: return lower(ast.children.at(0), arity) - lower(ast.children.at(1), arity);
    case Kind::Mul: return lower(ast.children.at(0), arity) * lower(ast.children.at(1), arity);
    case Kind::Pow: return lower(ast.children.at(0), arity).pow(ast.exponent);
    case Kind::Div: {
      const GammaPoly den = lower(ast.children.at(1), arity);
      if (den.is_zero()) throw ParseError("division by zero", ast.position);
      const Monomial one(arity);
      if (den.size() != 1 || den.terms().begin()->first != one || den.terms().begin()->second.degree() != 0) {
        throw ParseError("division is only allowed by a nonzero constant", ast.position);
      }
      const GaussianRational inverse = GaussianRational(1) / den.terms().begin()->second.leading();
      return UniPoly(inverse) * lower(ast.children.at(0), arity);
    }
  }
  throw std::logic_error("unhandled expression kind");
}

GammaPoly parse_gamma_poly(std::string_view text, std::size_t arity) { return lower(parse_poly(text, arity), arity); }

std::string to_string(const ExprAst& ast) {
  using Kind = ExprAst::Kind;
  auto binary = [&](const char* op) {
    return "(" + to_string(ast.children.at(0)) + " " + op + " " + to_string(ast.children.at(1)) + ")";
  };
  switch (ast.kind) {
    case Kind::Literal: return ast.literal.to_string();
    case Kind::Variable: return "s";
    case Kind::Gamma: return "G(" + std::to_string(ast.index) + ")";
    case Kind::Negate: return "(-" + to_string(ast.children.at(0)) + ")";
    case Kind::Add: return binary("+");
    case Kind::Sub: return binary("-");
    case Kind::Mul: return binary("*");
    case Kind::Div: return binary("/");
    case Kind::Pow: return to_string(ast.children.at(0)) + "^" + std::to_string(ast.exponent);
  }
  return {};
}

GaussianRational parse_scalar(std::string_view text) {
  const GammaPoly p = parse_gamma_poly(text, 0);
  if (p.is_zero()) return {};
  const UniPoly& c = p.terms().begin()->second;
  if (c.degree() != 0) throw ParseError("constant expected, found an expression in s", 0);
  return c.leading();
}

std::vector<GaussianRational> parse_shift_list(std::string_view text) {
  std::vector<GaussianRational> out;
  std::size_t depth = 0;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    const std::string_view item = text.substr(start, end - start);
    if (item.find_first_not_of(" \t\r\n") == std::string_view::npos) {
      throw ParseError("empty shift entry", start);
    }
    try {
      out.push_back(parse_scalar(item));
    } catch (const ParseError& e) {
      throw ParseError("invalid shift '" + std::string(item) + "': " + e.what(), start + e.position());
    }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    else if (text[i] == ')' && depth > 0) --depth;
    else if (text[i] == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  flush(text.size());
  return out;
}

std::complex<double> parse_complex(std::string_view text) {
  const std::string src(text);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
  };
  // One signed real or imaginary component; returns {value, is_imaginary}.
  auto component = [&](bool first) -> std::optional<std::pair<double, bool>> {
    skip_ws();
    if (i >= src.size()) return std::nullopt;
    double sign = 1.0;
    if (src[i] == '+' || src[i] == '-') {
      sign = src[i] == '-' ? -1.0 : 1.0;
      ++i;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-' between complex components", i);
    }
    if (i < src.size() && src[i] == 'i') {
      ++i;
      return std::pair{sign, true};
    }
    const char* begin = src.c_str() + i;
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin) throw ParseError("expected a number", i);
    i += static_cast<std::size_t>(end - begin);
    if (i < src.size() && src[i] == 'i') {
      ++i;
      return std::pair{sign * value, true};
    }
    return std::pair{sign * value, false};
  };

  double re = 0.0, im = 0.0;
  bool seen_re = false, seen_im = false;
  for (bool first = true;; first = false) {
    auto part = component(first);
    if (!part) break;
    if (part->second) {
      if (seen_im) throw ParseError("duplicate imaginary component", i);
      im = part->first;
      seen_im = true;
    } else {
      if (seen_re) throw ParseError("duplicate real component", i);
      re = part->first;
      seen_re = true;
    }
  }
  if (!seen_re && !seen_im) throw ParseError("empty complex literal", 0);
  return {re, im};
}

}  // namespace gamma_ideal
