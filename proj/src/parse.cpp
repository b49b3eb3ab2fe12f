#include "mpweyl/parse.hpp"

#include <cctype>
#include <map>
#include <stdexcept>
#include <utility>

#include "mpweyl/errors.hpp"
#include "mpweyl/uqrs.hpp"

namespace mpweyl {

namespace {

enum class Tok {
  Integer,
  Ident,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  End,
};

struct Token {
  Tok kind;
  SourcePos pos;
  std::string text;    // digits (Integer) or the full identifier (Ident)
  std::string alpha;   // identifier letters
  std::string digits;  // identifier digits
};

std::string at_pos(const SourcePos& pos) {
  return " (line " + std::to_string(pos.line) + ", column " +
         std::to_string(pos.column) + ")";
}

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      SourcePos pos{line_, column_};
      if (at_ >= text_.size()) {
        out.push_back({Tok::End, pos, "", "", ""});
        return out;
      }
      char c = text_[at_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits;
        while (at_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[at_]))) {
          digits += take();
        }
        out.push_back({Tok::Integer, pos, digits, "", ""});
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string alpha, digits;
        while (at_ < text_.size() &&
               std::isalpha(static_cast<unsigned char>(text_[at_]))) {
          alpha += take();
        }
        while (at_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[at_]))) {
          digits += take();
        }
        out.push_back({Tok::Ident, pos, alpha + digits, alpha, digits});
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
          default:
            throw SyntaxError(std::string("unexpected character '") + c + "'",
                              pos.line, pos.column);
        }
        take();
        out.push_back({kind, pos, std::string(1, c), "", ""});
      }
    }
  }

private:
  char take() {
    char c = text_[at_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space() {
    while (at_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[at_]))) {
      take();
    }
  }

  const std::string& text_;
  std::size_t at_ = 0;
  int line_ = 1;
  int column_ = 1;
};

bool contains_xy(const Expression& e) {
  if (e.kind == ExprKind::Generator &&
      (e.symbol == SymbolKind::X || e.symbol == SymbolKind::Y)) {
    return true;
  }
  for (const auto& c : e.children) {
    if (contains_xy(c)) return true;
  }
  return false;
}

class Parser {
public:
  Parser(std::vector<Token> tokens, int n)
      : tokens_(std::move(tokens)), n_(n) {}

  Expression run() {
    Expression e = expr();
    if (peek().kind != Tok::End) {
      throw SyntaxError("unexpected trailing input", peek().pos.line,
                        peek().pos.column);
    }
    return e;
  }

private:
  const Token& peek() const { return tokens_[at_]; }
  Token take() { return tokens_[at_++]; }

  Expression expr() {
    Expression left = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      Token op = take();
      Expression right = term();
      Expression node;
      node.kind = op.kind == Tok::Plus ? ExprKind::Add : ExprKind::Sub;
      node.pos = op.pos;
      node.children.push_back(std::move(left));
      node.children.push_back(std::move(right));
      left = std::move(node);
    }
    return left;
  }

  Expression term() {
    Expression left = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      Token op = take();
      Expression right = factor();
      if (op.kind == Tok::Slash &&
          (!is_scalar_expression(left) || !is_scalar_expression(right))) {
        throw SyntaxError("division requires scalar operands", op.pos.line,
                          op.pos.column);
      }
      Expression node;
      node.kind = op.kind == Tok::Star ? ExprKind::Mul : ExprKind::Div;
      node.pos = op.pos;
      node.children.push_back(std::move(left));
      node.children.push_back(std::move(right));
      left = std::move(node);
    }
    return left;
  }

  Expression factor() {
    Expression base = atom();
    if (peek().kind != Tok::Caret) return base;
    Token op = take();
    long e = exponent_literal();
    if (e < 0 && contains_xy(base)) {
      throw SyntaxError("x and y generators cannot carry negative exponents",
                        op.pos.line, op.pos.column);
    }
    Expression node;
    node.kind = ExprKind::Pow;
    node.pos = op.pos;
    node.exponent = e;
    node.children.push_back(std::move(base));
    return node;
  }

  long exponent_literal() {
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      take();
      negative = true;
    }
    if (peek().kind != Tok::Integer) {
      throw SyntaxError("expected an integer exponent", peek().pos.line,
                        peek().pos.column);
    }
    Token t = take();
    long v;
    try {
      v = std::stol(t.text);
    } catch (const std::out_of_range&) {
      throw SyntaxError("exponent out of range", t.pos.line, t.pos.column);
    }
    return negative ? -v : v;
  }

  Expression atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Integer: {
        Token tok = take();
        Expression node;
        node.kind = ExprKind::Integer;
        node.pos = tok.pos;
        node.value = mpz_class(tok.text);
        return node;
      }
      case Tok::Ident:
        return symbol_atom(take());
      case Tok::LParen: {
        take();
        Expression e = expr();
        if (peek().kind != Tok::RParen) {
          throw SyntaxError("expected ')'", peek().pos.line, peek().pos.column);
        }
        take();
        return e;
      }
      case Tok::Minus: {
        Token op = take();
        Expression child = atom();
        Expression node;
        node.kind = ExprKind::Neg;
        node.pos = op.pos;
        node.children.push_back(std::move(child));
        return node;
      }
      default:
        throw SyntaxError("expected a number, symbol, or '('", t.pos.line,
                          t.pos.column);
    }
  }

  Expression symbol_atom(Token t) {
    static const std::map<std::string, SymbolKind> table = {
        {"r", SymbolKind::ParamR},  {"s", SymbolKind::ParamS},
        {"rho", SymbolKind::Rho},   {"sigma", SymbolKind::Sigma},
        {"x", SymbolKind::X},       {"y", SymbolKind::Y},
        {"e", SymbolKind::E},       {"f", SymbolKind::F},
        {"w", SymbolKind::W},       {"wp", SymbolKind::Wp}};
    auto it = table.find(t.alpha);
    if (it == table.end()) {
      throw UnknownSymbol("unknown symbol '" + t.text + "'" + at_pos(t.pos));
    }
    if (t.digits.empty()) {
      throw UnknownSymbol("symbol '" + t.text + "' needs an index" +
                          at_pos(t.pos));
    }
    int idx;
    try {
      idx = std::stoi(t.digits);
    } catch (const std::out_of_range&) {
      idx = n_ + 1;  // any out-of-range value triggers the range error below
    }
    bool quantum = it->second == SymbolKind::E || it->second == SymbolKind::F ||
                   it->second == SymbolKind::W || it->second == SymbolKind::Wp;
    int top = quantum ? n_ - 1 : n_;
    if (idx < 1 || idx > top) {
      throw UnknownSymbol("'" + t.text + "' is out of range at rank " +
                          std::to_string(n_) + " (valid indices: 1.." +
                          std::to_string(top) + ")" + at_pos(t.pos));
    }
    Expression node;
    node.kind = (it->second == SymbolKind::ParamR ||
                 it->second == SymbolKind::ParamS)
                    ? ExprKind::Parameter
                    : ExprKind::Generator;
    node.pos = t.pos;
    node.symbol = it->second;
    node.index = idx;
    return node;
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
  int n_;
};

int precedence(const Expression& e) {
  switch (e.kind) {
    case ExprKind::Add:
    case ExprKind::Sub: return 1;
    case ExprKind::Mul:
    case ExprKind::Div: return 2;
    case ExprKind::Neg: return 3;
    case ExprKind::Pow: return 4;
    default: return 5;
  }
}

// Powers of a general element by square-and-multiply; k >= 1.
AlgebraElement element_power_positive(const AlgebraElement& base, long k) {
  AlgebraElement acc = AlgebraElement::one();
  AlgebraElement sq = base;
  long left = k;
  while (left > 0) {
    if (left & 1) acc = acc * sq;
    left >>= 1;
    if (left > 0) sq = sq * sq;
  }
  return acc;
}

AlgebraElement element_power(const AlgebraElement& base, long k) {
  if (k == 0) return AlgebraElement::one();
  if (k > 0) return element_power_positive(base, k);
  // Negative powers exist only for invertible elements: a single monomial
  // with no x/y part. Torus blocks commute, so exponents just scale.
  if (base.term_count() != 1) {
    throw ExpressionError("cannot raise a sum to a negative power");
  }
  const auto& [m, c] = *base.terms().begin();
  NormalMonomial inv;
  for (const auto& [i, blk] : m.blocks()) {
    if (blk.u != 0 || blk.v != 0) {
      throw ExpressionError(
          "cannot raise an element with x/y factors to a negative power");
    }
    inv.set_block(i, {blk.a * k, blk.b * k, 0, 0});
  }
  return AlgebraElement::monomial(inv, c.pow(k));
}

}  // namespace

bool Expression::operator==(const Expression& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case ExprKind::Integer:
      if (value != o.value) return false;
      break;
    case ExprKind::Parameter:
    case ExprKind::Generator:
      if (symbol != o.symbol || index != o.index) return false;
      break;
    case ExprKind::Pow:
      if (exponent != o.exponent) return false;
      break;
    default:
      break;
  }
  return children == o.children;
}

std::string symbol_name(SymbolKind kind, int index) {
  const char* base = nullptr;
  switch (kind) {
    case SymbolKind::ParamR: base = "r"; break;
    case SymbolKind::ParamS: base = "s"; break;
    case SymbolKind::Rho: base = "rho"; break;
    case SymbolKind::Sigma: base = "sigma"; break;
    case SymbolKind::X: base = "x"; break;
    case SymbolKind::Y: base = "y"; break;
    case SymbolKind::E: base = "e"; break;
    case SymbolKind::F: base = "f"; break;
    case SymbolKind::W: base = "w"; break;
    case SymbolKind::Wp: base = "wp"; break;
  }
  return std::string(base) + std::to_string(index);
}

Expression parse_expression(const std::string& text, int n) {
  if (n < 1) throw InvalidParameter("rank must be at least 1");
  return Parser(Lexer(text).run(), n).run();
}

std::string format_expression(const Expression& e) {
  auto wrap = [](const Expression& child, bool parens) {
    std::string s = format_expression(child);
    return parens ? "(" + s + ")" : s;
  };
  switch (e.kind) {
    case ExprKind::Integer:
      return e.value.get_str();
    case ExprKind::Parameter:
    case ExprKind::Generator:
      return symbol_name(e.symbol, e.index);
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::Div: {
      int p = precedence(e);
      const char* op = e.kind == ExprKind::Add   ? " + "
                       : e.kind == ExprKind::Sub ? " - "
                       : e.kind == ExprKind::Mul ? " * "
                                                 : " / ";
      return wrap(e.children[0], precedence(e.children[0]) < p) + op +
             wrap(e.children[1], precedence(e.children[1]) <= p);
    }
    case ExprKind::Neg:
      return "-" + wrap(e.children[0], precedence(e.children[0]) <= 4);
    case ExprKind::Pow:
      return wrap(e.children[0], precedence(e.children[0]) < 5) + "^" +
             std::to_string(e.exponent);
  }
  throw std::logic_error("unhandled expression kind");
}

bool is_scalar_expression(const Expression& e) {
  if (e.kind == ExprKind::Generator) return false;
  for (const auto& c : e.children) {
    if (!is_scalar_expression(c)) return false;
  }
  return true;
}

Scalar scalar_value(const Expression& e, int n) {
  switch (e.kind) {
    case ExprKind::Integer:
      return Scalar::monomial(Monomial(), mpq_class(e.value));
    case ExprKind::Parameter:
      return e.symbol == SymbolKind::ParamR ? Scalar::param_r(e.index)
                                            : Scalar::param_s(e.index);
    case ExprKind::Generator:
      throw ExpressionError("generator '" + symbol_name(e.symbol, e.index) +
                            "' used where a scalar is required");
    case ExprKind::Add:
      return scalar_value(e.children[0], n) + scalar_value(e.children[1], n);
    case ExprKind::Sub:
      return scalar_value(e.children[0], n) - scalar_value(e.children[1], n);
    case ExprKind::Mul:
      return scalar_value(e.children[0], n) * scalar_value(e.children[1], n);
    case ExprKind::Div:
      return scalar_value(e.children[0], n) / scalar_value(e.children[1], n);
    case ExprKind::Neg:
      return -scalar_value(e.children[0], n);
    case ExprKind::Pow:
      return scalar_value(e.children[0], n).pow(e.exponent);
  }
  throw std::logic_error("unhandled expression kind");
}

AlgebraElement element_value(const Expression& e, int n) {
  if (is_scalar_expression(e)) {
    return AlgebraElement::one() * scalar_value(e, n);
  }
  switch (e.kind) {
    case ExprKind::Generator:
      switch (e.symbol) {
        case SymbolKind::Rho:
          return AlgebraElement::generator(GenKind::Rho, e.index);
        case SymbolKind::Sigma:
          return AlgebraElement::generator(GenKind::Sigma, e.index);
        case SymbolKind::X:
          return AlgebraElement::generator(GenKind::X, e.index);
        case SymbolKind::Y:
          return AlgebraElement::generator(GenKind::Y, e.index);
        case SymbolKind::E:
          return u_image(ue(e.index), n);
        case SymbolKind::F:
          return u_image(uf(e.index), n);
        case SymbolKind::W:
          return u_image(uomega(e.index), n);
        case SymbolKind::Wp:
          return u_image(uomega_prime(e.index), n);
        default:
          throw std::logic_error("parameter reached generator evaluation");
      }
    case ExprKind::Add:
      return element_value(e.children[0], n) + element_value(e.children[1], n);
    case ExprKind::Sub:
      return element_value(e.children[0], n) - element_value(e.children[1], n);
    case ExprKind::Mul:
      return element_value(e.children[0], n) * element_value(e.children[1], n);
    case ExprKind::Neg:
      return -element_value(e.children[0], n);
    case ExprKind::Pow:
      return element_power(element_value(e.children[0], n), e.exponent);
    case ExprKind::Div:
      // Unreachable through the parser (its operands must be scalar), kept
      // for manually built trees.
      throw ExpressionError("division requires scalar operands");
    default:
      throw std::logic_error("scalar expression reached element evaluation");
  }
}

}  // namespace mpweyl
