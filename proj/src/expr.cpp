#include "spmet/expr.hpp"

#include <cctype>
#include <memory>
#include <variant>

namespace spmet {

Sort sort_from_name(const std::string& name) {
  if (name == "lie") return Sort::lie;
  if (name == "weyl") return Sort::weyl;
  if (name == "poly") return Sort::poly;
  if (name == "laurent") return Sort::laurent;
  throw std::invalid_argument("unknown sort: " + name);
}

std::string sort_name(Sort s) {
  switch (s) {
    case Sort::lie: return "lie";
    case Sort::weyl: return "weyl";
    case Sort::poly: return "poly";
    case Sort::laurent: return "laurent";
  }
  return "?";
}

namespace {

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Node {
  enum Type { Num, PrimeP, AtomABC, Var, Neg, Add, Sub, Mul, Pow, Bracket };
  Type type;
  std::size_t pos = 0;
  Rational num;
  Family fam = Family::A;
  int i = 0, j = 0;   // AtomABC indices
  char vkind = 0;     // 'x', 'd' or 'X'
  int vindex = 0;
  long expo = 0;      // Pow
  NodePtr a, b;
};

struct Token {
  enum Kind {
    Plus, Minus, Star, Caret, Slash, LParen, RParen, LBrack, RBrack, Comma,
    IntLit, Abc, Var, PrimeP, End
  } kind;
  std::size_t pos = 0;
  Int value;      // IntLit
  Family fam = Family::A;
  int i = 0, j = 0;  // Abc
  char vkind = 0;
  int vindex = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    skip_ws();
    Token t;
    t.pos = pos_;
    if (pos_ >= src_.size()) {
      t.kind = Token::End;
      return t;
    }
    const char c = src_[pos_];
    switch (c) {
      case '+': ++pos_; t.kind = Token::Plus; return t;
      case '-': ++pos_; t.kind = Token::Minus; return t;
      case '*': ++pos_; t.kind = Token::Star; return t;
      case '^': ++pos_; t.kind = Token::Caret; return t;
      case '/': ++pos_; t.kind = Token::Slash; return t;
      case '(': ++pos_; t.kind = Token::LParen; return t;
      case ')': ++pos_; t.kind = Token::RParen; return t;
      case '[': ++pos_; t.kind = Token::LBrack; return t;
      case ']': ++pos_; t.kind = Token::RBrack; return t;
      case ',': ++pos_; t.kind = Token::Comma; return t;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::IntLit;
      t.value = lex_int();
      return t;
    }
    if (c == 'p' && !next_is_digit()) {
      ++pos_;
      t.kind = Token::PrimeP;
      return t;
    }
    if (c == 'a' || c == 'b' || c == 'c') {
      ++pos_;
      t.kind = Token::Abc;
      t.fam = c == 'a' ? Family::A : (c == 'b' ? Family::B : Family::C);
      expect_char('(');
      t.i = lex_small_int();
      expect_char(',');
      t.j = lex_small_int();
      expect_char(')');
      return t;
    }
    if (c == 'x' || c == 'd' || c == 'X') {
      ++pos_;
      if (pos_ >= src_.size() ||
          !std::isdigit(static_cast<unsigned char>(src_[pos_])))
        throw ParseError(std::string("expected index digits after '") + c + "'",
                         pos_);
      t.kind = Token::Var;
      t.vkind = c;
      t.vindex = lex_small_int();
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }
  bool next_is_digit() const {
    return pos_ + 1 < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]));
  }
  Int lex_int() {
    std::string digits;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_])))
      digits += src_[pos_++];
    return Int(digits);
  }
  int lex_small_int() {
    skip_ws();
    if (pos_ >= src_.size() ||
        !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      throw ParseError("expected integer", pos_);
    Int v = lex_int();
    if (!v.fits_sint_p()) throw ParseError("index too large", pos_);
    return static_cast<int>(v.get_si());
  }
  void expect_char(char c) {
    skip_ws();
    if (pos_ >= src_.size() || src_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) { advance(); }

  NodePtr parse() {
    if (cur_.kind == Token::End) throw ParseError("empty expression", 0);
    NodePtr e = expr();
    if (cur_.kind != Token::End)
      throw ParseError("trailing input", cur_.pos);
    return e;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  NodePtr expr() {
    NodePtr lhs = term();
    while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
      auto type = cur_.kind == Token::Plus ? Node::Add : Node::Sub;
      std::size_t pos = cur_.pos;
      advance();
      NodePtr rhs = term();
      NodePtr parent = std::make_unique<Node>();
      parent->type = type;
      parent->pos = pos;
      parent->a = std::move(lhs);
      parent->b = std::move(rhs);
      lhs = std::move(parent);
    }
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = factor();
    while (cur_.kind == Token::Star) {
      std::size_t pos = cur_.pos;
      advance();
      NodePtr rhs = factor();
      NodePtr parent = std::make_unique<Node>();
      parent->type = Node::Mul;
      parent->pos = pos;
      parent->a = std::move(lhs);
      parent->b = std::move(rhs);
      lhs = std::move(parent);
    }
    return lhs;
  }

  NodePtr factor() {
    const std::size_t pos = cur_.pos;
    if (cur_.kind == Token::Minus) {
      advance();
      NodePtr inner = factor();
      NodePtr node = std::make_unique<Node>();
      node->type = Node::Neg;
      node->pos = pos;
      node->a = std::move(inner);
      return node;
    }
    if (cur_.kind == Token::LParen) {
      advance();
      NodePtr e = expr();
      if (cur_.kind != Token::RParen) throw ParseError("expected ')'", cur_.pos);
      advance();
      return e;
    }
    if (cur_.kind == Token::LBrack) {
      advance();
      NodePtr lhs = expr();
      if (cur_.kind != Token::Comma) throw ParseError("expected ','", cur_.pos);
      advance();
      NodePtr rhs = expr();
      if (cur_.kind != Token::RBrack) throw ParseError("expected ']'", cur_.pos);
      advance();
      NodePtr node = std::make_unique<Node>();
      node->type = Node::Bracket;
      node->pos = pos;
      node->a = std::move(lhs);
      node->b = std::move(rhs);
      return node;
    }
    NodePtr base = atom();
    if (cur_.kind == Token::Caret) {
      advance();
      bool negative = false;
      if (cur_.kind == Token::Minus) {
        negative = true;
        advance();
      }
      if (cur_.kind != Token::IntLit)
        throw ParseError("expected integer exponent", cur_.pos);
      if (!cur_.value.fits_slong_p())
        throw ParseError("exponent too large", cur_.pos);
      long e = cur_.value.get_si();
      advance();
      NodePtr node = std::make_unique<Node>();
      node->type = Node::Pow;
      node->pos = pos;
      node->expo = negative ? -e : e;
      node->a = std::move(base);
      return node;
    }
    return base;
  }

  NodePtr atom() {
    NodePtr node = std::make_unique<Node>();
    node->pos = cur_.pos;
    switch (cur_.kind) {
      case Token::IntLit: {
        node->type = Node::Num;
        Int num = cur_.value;
        advance();
        if (cur_.kind == Token::Slash) {
          advance();
          if (cur_.kind != Token::IntLit)
            throw ParseError("expected denominator", cur_.pos);
          if (cur_.value == 0) throw ParseError("zero denominator", cur_.pos);
          node->num = Rational(num, cur_.value);
          node->num.canonicalize();
          advance();
        } else {
          node->num = Rational(num);
        }
        return node;
      }
      case Token::PrimeP:
        node->type = Node::PrimeP;
        advance();
        return node;
      case Token::Abc:
        node->type = Node::AtomABC;
        node->fam = cur_.fam;
        node->i = cur_.i;
        node->j = cur_.j;
        advance();
        return node;
      case Token::Var:
        node->type = Node::Var;
        node->vkind = cur_.vkind;
        node->vindex = cur_.vindex;
        advance();
        return node;
      default:
        throw ParseError("expected atom", cur_.pos);
    }
  }

  Lexer lex_;
  Token cur_;
};

[[noreturn]] void sort_error(const std::string& what, std::size_t pos) {
  throw ParseError("sort error: " + what, pos);
}

void check_index(int idx, const PrimeContext& ctx, std::size_t pos) {
  if (idx < 1 || idx > ctx.n)
    throw ParseError("index " + std::to_string(idx) + " out of range 1.." +
                         std::to_string(ctx.n),
                     pos);
}

// ---- lie sort: values are scalars or sp elements -------------------------

using LieValue = std::variant<Rational, SpElement>;

LieValue eval_lie(const Node& e, const PrimeContext& ctx) {
  switch (e.type) {
    case Node::Num: return e.num;
    case Node::PrimeP: return Rational(ctx.p);
    case Node::AtomABC:
      check_index(e.i, ctx, e.pos);
      check_index(e.j, ctx, e.pos);
      return SpElement::basis(BasisIndex(e.fam, e.i, e.j));
    case Node::Var:
      sort_error(std::string("atom '") + e.vkind +
                     std::to_string(e.vindex) + "' not allowed in lie sort",
                 e.pos);
    case Node::Neg: {
      LieValue v = eval_lie(*e.a, ctx);
      if (auto* s = std::get_if<Rational>(&v)) return Rational(-*s);
      return -std::get<SpElement>(v);
    }
    case Node::Add:
    case Node::Sub: {
      LieValue l = eval_lie(*e.a, ctx), r = eval_lie(*e.b, ctx);
      const Rational sign(e.type == Node::Add ? 1 : -1);
      if (std::holds_alternative<Rational>(l) &&
          std::holds_alternative<Rational>(r))
        return Rational(std::get<Rational>(l) + sign * std::get<Rational>(r));
      if (std::holds_alternative<SpElement>(l) &&
          std::holds_alternative<SpElement>(r))
        return std::get<SpElement>(l) + std::get<SpElement>(r) * sign;
      sort_error("cannot add a scalar to a Lie element", e.pos);
    }
    case Node::Mul: {
      LieValue l = eval_lie(*e.a, ctx), r = eval_lie(*e.b, ctx);
      if (std::holds_alternative<Rational>(l) &&
          std::holds_alternative<Rational>(r))
        return Rational(std::get<Rational>(l) * std::get<Rational>(r));
      if (std::holds_alternative<Rational>(l))
        return std::get<SpElement>(r) * std::get<Rational>(l);
      if (std::holds_alternative<Rational>(r))
        return std::get<SpElement>(l) * std::get<Rational>(r);
      sort_error("product of two Lie elements is not in the Lie algebra",
                 e.pos);
    }
    case Node::Pow: {
      if (e.expo < 0) sort_error("negative exponent outside Laurent", e.pos);
      LieValue b = eval_lie(*e.a, ctx);
      if (auto* s = std::get_if<Rational>(&b))
        return rational_pow(*s, static_cast<unsigned long>(e.expo));
      sort_error("power of a Lie element is not in the Lie algebra", e.pos);
    }
    case Node::Bracket: {
      LieValue l = eval_lie(*e.a, ctx), r = eval_lie(*e.b, ctx);
      if (std::holds_alternative<SpElement>(l) &&
          std::holds_alternative<SpElement>(r))
        return bracket_structure(std::get<SpElement>(l),
                                 std::get<SpElement>(r));
      sort_error("bracket requires two Lie elements", e.pos);
    }
  }
  throw std::logic_error("unreachable");
}

// ---- weyl sort ------------------------------------------------------------

WeylElement eval_weyl(const Node& e, const PrimeContext& ctx) {
  const int n = ctx.n;
  switch (e.type) {
    case Node::Num: return WeylElement::scalar(n, e.num);
    case Node::PrimeP: return WeylElement::scalar(n, Rational(ctx.p));
    case Node::AtomABC:
      sort_error("atom '" + BasisIndex(e.fam, e.i, e.j).str() +
                     "' not allowed in weyl sort",
                 e.pos);
    case Node::Var:
      if (e.vkind == 'X')
        sort_error("atom 'X" + std::to_string(e.vindex) +
                       "' not allowed in weyl sort",
                   e.pos);
      check_index(e.vindex, ctx, e.pos);
      return e.vkind == 'x' ? WeylElement::x(e.vindex, n)
                            : WeylElement::d(e.vindex, n);
    case Node::Neg: return -eval_weyl(*e.a, ctx);
    case Node::Add: return eval_weyl(*e.a, ctx) + eval_weyl(*e.b, ctx);
    case Node::Sub: return eval_weyl(*e.a, ctx) - eval_weyl(*e.b, ctx);
    case Node::Mul:
      return weyl_multiply(eval_weyl(*e.a, ctx), eval_weyl(*e.b, ctx));
    case Node::Pow: {
      if (e.expo < 0) sort_error("negative exponent outside Laurent", e.pos);
      WeylElement b = eval_weyl(*e.a, ctx);
      WeylElement acc = WeylElement::one(n);
      for (long k = 0; k < e.expo; ++k) acc = weyl_multiply(acc, b);
      return acc;
    }
    case Node::Bracket:
      return weyl_commutator(eval_weyl(*e.a, ctx), eval_weyl(*e.b, ctx));
  }
  throw std::logic_error("unreachable");
}

// ---- poly / laurent sorts ---------------------------------------------------

Poly eval_poly(const Node& e, const PrimeContext& ctx, bool laurent) {
  const int n = ctx.n;
  auto scalar = [&](const Rational& c) {
    Poly f = laurent ? Poly::laurent(n) : Poly::poly(n);
    f.add_term(std::vector<int>(n, 0), c);
    return f;
  };
  switch (e.type) {
    case Node::Num: return scalar(e.num);
    case Node::PrimeP: return scalar(Rational(ctx.p));
    case Node::AtomABC:
      sort_error("atom '" + BasisIndex(e.fam, e.i, e.j).str() +
                     "' not allowed in polynomial sorts",
                 e.pos);
    case Node::Var: {
      if (e.vkind != 'X')
        sort_error(std::string("atom '") + e.vkind + std::to_string(e.vindex) +
                       "' not allowed in polynomial sorts",
                   e.pos);
      check_index(e.vindex, ctx, e.pos);
      std::vector<int> exp(n, 0);
      exp[e.vindex - 1] = 1;
      return Poly::monomial(n, exp, 1, laurent);
    }
    case Node::Neg: return eval_poly(*e.a, ctx, laurent) * Rational(-1);
    case Node::Add: return eval_poly(*e.a, ctx, laurent) + eval_poly(*e.b, ctx, laurent);
    case Node::Sub: return eval_poly(*e.a, ctx, laurent) - eval_poly(*e.b, ctx, laurent);
    case Node::Mul:
      return poly_multiply(eval_poly(*e.a, ctx, laurent),
                           eval_poly(*e.b, ctx, laurent));
    case Node::Pow: {
      if (e.expo < 0) {
        // negative exponents are admitted only directly on Laurent variables
        if (!laurent || e.a->type != Node::Var || e.a->vkind != 'X')
          sort_error("negative exponent outside Laurent", e.pos);
        check_index(e.a->vindex, ctx, e.a->pos);
        std::vector<int> exp(n, 0);
        exp[e.a->vindex - 1] = static_cast<int>(e.expo);
        return Poly::monomial(n, exp, 1, true);
      }
      Poly b = eval_poly(*e.a, ctx, laurent);
      Poly acc = scalar(1);
      for (long k = 0; k < e.expo; ++k) acc = poly_multiply(acc, b);
      return acc;
    }
    case Node::Bracket:
      sort_error("bracket is not defined in polynomial sorts", e.pos);
  }
  throw std::logic_error("unreachable");
}

NodePtr parse_tree(const std::string& src) {
  if (src.empty()) throw ParseError("empty expression", 0);
  return Parser(src).parse();
}

}  // namespace

SpElement parse_lie(const std::string& src, const PrimeContext& ctx) {
  LieValue v = eval_lie(*parse_tree(src), ctx);
  if (auto* s = std::get_if<Rational>(&v)) {
    if (*s == 0) return SpElement();  // 0 is the zero element of every sort
    throw ParseError("sort error: scalar is not a Lie element", 0);
  }
  return std::get<SpElement>(v);
}

WeylElement parse_weyl(const std::string& src, const PrimeContext& ctx) {
  return eval_weyl(*parse_tree(src), ctx);
}

Poly parse_poly(const std::string& src, const PrimeContext& ctx) {
  return eval_poly(*parse_tree(src), ctx, false);
}

Poly parse_laurent(const std::string& src, const PrimeContext& ctx) {
  return eval_poly(*parse_tree(src), ctx, true);
}

namespace {

// shared sum printer: sign-folded " + " / " - " separators
class SumPrinter {
 public:
  void add(const Rational& coeff, const std::string& monomial) {
    const bool negative = coeff < 0;
    Rational mag = negative ? Rational(-coeff) : coeff;
    if (out_.empty())
      out_ += negative ? "-" : "";
    else
      out_ += negative ? " - " : " + ";
    if (monomial.empty())
      out_ += rational_str(mag);
    else if (mag == 1)
      out_ += monomial;
    else
      out_ += rational_str(mag) + "*" + monomial;
  }
  std::string str() const { return out_.empty() ? "0" : out_; }

 private:
  std::string out_;
};

std::string var_monomial(const std::vector<int>& key, int n, const char* xname,
                         const char* dname) {
  std::string s;
  for (int half = 0; half < 2; ++half) {
    const char* base = half == 0 ? xname : dname;
    if (half == 1 && !dname) break;
    for (int i = 0; i < n; ++i) {
      const int e = key[half * n + i];
      if (e == 0) continue;
      if (!s.empty()) s += "*";
      s += base + std::to_string(i + 1);
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

}  // namespace

std::string format_sp(const SpElement& v) {
  SumPrinter out;
  for (const auto& [idx, c] : v.coeffs()) out.add(c, idx.str());
  return out.str();
}

std::string format_weyl(const WeylElement& v) {
  SumPrinter out;
  for (const auto& [key, c] : v.terms())
    out.add(c, var_monomial(key, v.vars(), "x", "d"));
  return out.str();
}

std::string format_poly(const Poly& v) {
  SumPrinter out;
  for (const auto& [key, c] : v.terms()) {
    std::vector<int> padded(key);
    out.add(c, var_monomial(padded, v.vars(), "X", nullptr));
  }
  return out.str();
}

}  // namespace spmet
