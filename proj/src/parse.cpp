#include "poisson_ore/parse.hpp"

#include <cctype>

namespace poisson_ore {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  std::unique_ptr<ExprAst> parse() {
    skip_ws();
    if (pos_ == src_.size()) throw ParseError("empty expression", pos_);
    auto e = expr();
    skip_ws();
    if (pos_ != src_.size()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static std::unique_ptr<ExprAst> node(ExprAst::Kind kind) {
    auto n = std::make_unique<ExprAst>();
    n->kind = kind;
    return n;
  }

  static std::unique_ptr<ExprAst> binary(ExprAst::Kind kind, std::unique_ptr<ExprAst> a, std::unique_ptr<ExprAst> b) {
    auto n = node(kind);
    n->children.push_back(std::move(a));
    n->children.push_back(std::move(b));
    return n;
  }

  std::unique_ptr<ExprAst> expr() {
    auto lhs = term();
    while (true) {
      if (accept('+'))
        lhs = binary(ExprAst::Kind::add, std::move(lhs), term());
      else if (accept('-'))
        lhs = binary(ExprAst::Kind::sub, std::move(lhs), term());
      else
        return lhs;
    }
  }

  std::unique_ptr<ExprAst> term() {
    auto lhs = unary();
    while (accept('*')) lhs = binary(ExprAst::Kind::mul, std::move(lhs), unary());
    return lhs;
  }

  std::unique_ptr<ExprAst> unary() {
    if (accept('-')) {
      auto n = node(ExprAst::Kind::neg);
      n->children.push_back(unary());
      return n;
    }
    if (accept('+')) return unary();
    return power();
  }

  std::unique_ptr<ExprAst> power() {
    auto base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      std::string digits = integer();
      if (digits.empty()) throw ParseError("exponent must be a non-negative integer literal", start);
      if (digits.size() > 4) throw ParseError("exponent too large", start);
      auto n = node(ExprAst::Kind::pow);
      n->exponent = static_cast<unsigned>(std::stoul(digits));
      n->children.push_back(std::move(base));
      return n;
    }
    return base;
  }

  std::string integer() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  std::unique_ptr<ExprAst> atom() {
    skip_ws();
    if (pos_ == src_.size()) throw ParseError("unexpected end of input", pos_);
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(integer());
      mpz_class den = 1;
      if (accept('/')) {
        skip_ws();
        std::size_t at = pos_;
        std::string d = integer();
        if (d.empty()) throw ParseError("expected integer denominator", at);
        den = mpz_class(d);
        if (den == 0) throw ParseError("zero denominator", at);
      }
      auto n = node(ExprAst::Kind::number);
      n->value = GaussRat(mpq_class(num, den));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
      std::string name(src_.substr(start, pos_ - start));
      if (name == "i") return node(ExprAst::Kind::imaginary_unit);
      auto n = node(ExprAst::Kind::variable);
      n->name = std::move(name);
      n->position = start;
      return n;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<ExprAst> parse_expr(std::string_view src) { return Parser(src).parse(); }

Poly lower(const ExprAst& ast, const Ring& ring) {
  switch (ast.kind) {
    case ExprAst::Kind::number:
      return Poly::constant(ring, ast.value);
    case ExprAst::Kind::imaginary_unit:
      return Poly::constant(ring, GaussRat::i());
    case ExprAst::Kind::variable:
      if (!ring.contains(ast.name))
        throw UnknownVariable("unknown variable '" + ast.name + "' at position " + std::to_string(ast.position));
      return Poly::variable(ring, ast.name);
    case ExprAst::Kind::add:
      return lower(*ast.children[0], ring) + lower(*ast.children[1], ring);
    case ExprAst::Kind::sub:
      return lower(*ast.children[0], ring) - lower(*ast.children[1], ring);
    case ExprAst::Kind::mul:
      return lower(*ast.children[0], ring) * lower(*ast.children[1], ring);
    case ExprAst::Kind::neg:
      return -lower(*ast.children[0], ring);
    case ExprAst::Kind::pow:
      return lower(*ast.children[0], ring).pow(ast.exponent);
  }
  throw InternalAssertion("unhandled expression node");
}

Poly parse_poly(std::string_view src, const Ring& ring) {
  auto ast = parse_expr(src);
  return lower(*ast, ring);
}

std::vector<Poly> parse_poly_list(std::string_view src, const Ring& ring) {
  std::vector<Poly> out;
  std::size_t start = 0;
  bool blank = true;
  for (char c : src)
    if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
  if (blank) return out;
  while (true) {
    std::size_t comma = src.find(',', start);
    std::string_view piece = src.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      out.push_back(parse_poly(piece, ring));
    } catch (const ParseError& e) {
      throw ParseError(std::string("in list item ") + std::to_string(out.size() + 1) + ": " + e.message(), start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace poisson_ore
