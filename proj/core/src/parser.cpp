#include "nhpoly/parser.hpp"

#include <cctype>
#include <vector>

#include "nhpoly/errors.hpp"

namespace nhpoly {

namespace {

struct Token {
  enum class Kind { Number, Var, Plus, Minus, Star, Caret, LParen, RParen, End };
  Kind kind;
  std::size_t pos;
  Rational value;  // Number
  int var = -2;    // Var: -1 = Z, otherwise 0-based X index
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    std::size_t pos = 0;
    while (pos < text_.size()) {
      const char c = text_[pos];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back(lex_number(pos));
        continue;
      }
      switch (c) {
        case '+': out.push_back({Token::Kind::Plus, pos}); ++pos; break;
        case '-': out.push_back({Token::Kind::Minus, pos}); ++pos; break;
        case '*': out.push_back({Token::Kind::Star, pos}); ++pos; break;
        case '^': out.push_back({Token::Kind::Caret, pos}); ++pos; break;
        case '(': out.push_back({Token::Kind::LParen, pos}); ++pos; break;
        case ')': out.push_back({Token::Kind::RParen, pos}); ++pos; break;
        case 'Z': case 'z':
          out.push_back({Token::Kind::Var, pos, {}, -1});
          ++pos;
          break;
        case 'Y': case 'y':
          out.push_back({Token::Kind::Var, pos, {}, 1});
          y_used_ = true;
          ++pos;
          break;
        case 'X': case 'x': {
          std::size_t start = pos++;
          std::size_t digits_start = pos;
          while (pos < text_.size() &&
                 std::isdigit(static_cast<unsigned char>(text_[pos]))) {
            ++pos;
          }
          int idx = 0;
          if (pos > digits_start) {
            const long v = std::stol(text_.substr(digits_start, pos - digits_start));
            if (v < 1) throw ParseError("variable index must be >= 1", digits_start);
            idx = static_cast<int>(v) - 1;
          }
          out.push_back({Token::Kind::Var, start, {}, idx});
          max_index_ = std::max(max_index_, idx);
          break;
        }
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", pos);
      }
    }
    out.push_back({Token::Kind::End, text_.size()});
    return out;
  }

  bool y_used() const { return y_used_; }
  int max_index() const { return max_index_; }

 private:
  Token lex_number(std::size_t& pos) {
    std::size_t start = pos;
    while (pos < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos]))) {
      ++pos;
    }
    BigInt num(text_.substr(start, pos - start));
    BigInt den = 1;
    // "p/q" with the slash directly followed by digits is a rational literal;
    // there is no division operator in the grammar.
    if (pos + 1 < text_.size() && text_[pos] == '/' &&
        std::isdigit(static_cast<unsigned char>(text_[pos + 1]))) {
      ++pos;
      std::size_t dstart = pos;
      while (pos < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos]))) {
        ++pos;
      }
      den = BigInt(text_.substr(dstart, pos - dstart));
      if (den == 0) throw ParseError("zero denominator in literal", dstart);
    } else if (pos < text_.size() && text_[pos] == '/') {
      throw ParseError("'/' is only valid inside a rational literal", pos);
    }
    return {Token::Kind::Number, start, Rational(num, den)};
  }

  const std::string& text_;
  bool y_used_ = false;
  int max_index_ = -1;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, int m, const FieldConfig& field)
      : tokens_(std::move(tokens)), m_(m), field_(field) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    expect(Token::Kind::End, "unexpected trailing input");
    return p;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  Token take() { return tokens_[at_++]; }

  void expect(Token::Kind k, const char* msg) {
    if (peek().kind != k) throw ParseError(msg, peek().pos);
    take();
  }

  bool starts_base(Token::Kind k) const {
    return k == Token::Kind::Number || k == Token::Kind::Var ||
           k == Token::Kind::LParen;
  }

  MultiPoly expr() {
    bool negate = false;
    if (peek().kind == Token::Kind::Plus) {
      take();
    } else if (peek().kind == Token::Kind::Minus) {
      negate = true;
      take();
    }
    MultiPoly acc = term();
    if (negate) acc = -acc;
    while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
      const bool minus = take().kind == Token::Kind::Minus;
      MultiPoly rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    for (;;) {
      if (peek().kind == Token::Kind::Star) {
        take();
        acc = acc * factor();
      } else if (starts_base(peek().kind)) {
        acc = acc * factor();  // implicit multiplication
      } else {
        return acc;
      }
    }
  }

  MultiPoly factor() {
    MultiPoly b = base();
    if (peek().kind == Token::Kind::Caret) {
      take();
      if (peek().kind != Token::Kind::Number) {
        throw ParseError("expected integer exponent after '^'", peek().pos);
      }
      const Token t = take();
      if (boost::multiprecision::denominator(t.value) != 1 || t.value < 0) {
        throw ParseError("exponent must be a nonnegative integer", t.pos);
      }
      BigInt e = boost::multiprecision::numerator(t.value);
      if (e > 4096) throw ParseError("exponent too large", t.pos);
      b = b.pow(e.convert_to<unsigned>());
    }
    return b;
  }

  MultiPoly base() {
    const Token t = peek();
    switch (t.kind) {
      case Token::Kind::Number:
        take();
        return MultiPoly::constant(m_, field_,
                                   FieldScalar::from_rational(field_, t.value));
      case Token::Kind::Var: {
        take();
        ExponentVector e;
        e.i.assign(m_, 0);
        if (t.var == -1) {
          e.k = 1;
        } else {
          if (t.var >= m_) {
            throw ParseError("variable index exceeds ambient dimension m=" +
                                 std::to_string(m_),
                             t.pos);
          }
          e.i[t.var] = 1;
        }
        return MultiPoly::monomial(m_, field_, e, FieldScalar::one(field_));
      }
      case Token::Kind::LParen: {
        take();
        MultiPoly p = expr();
        expect(Token::Kind::RParen, "expected ')'");
        return p;
      }
      default:
        throw ParseError("expected variable, number or '('", t.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
  int m_;
  FieldConfig field_;
};

}  // namespace

MultiPoly parse_polynomial(const std::string& text, const FieldConfig& field,
                           std::optional<int> m_override) {
  Lexer lexer(text);
  std::vector<Token> tokens = lexer.run();

  int inferred = lexer.max_index() + 1;
  if (lexer.y_used()) inferred = std::max(inferred, 2);
  if (inferred == 0) inferred = 1;

  int m = m_override.value_or(inferred);
  if (m < 1) throw ValidationError("ambient dimension m must be >= 1");
  if (inferred > m) {
    throw ParseError("equation uses " + std::to_string(inferred) +
                         " X-variables but m=" + std::to_string(m),
                     0);
  }
  if (lexer.y_used() && m > 2) {
    // Y is only an alias in the plane; with m >= 3 it is an unknown variable.
    throw ParseError("alias Y is only allowed when m <= 2", 0);
  }

  Parser parser(std::move(tokens), m, field);
  return parser.parse();
}

}  // namespace nhpoly
