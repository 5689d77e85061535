#include "skewres/expr.hpp"

#include <cctype>
#include <memory>
#include <sstream>
#include <vector>

namespace skewres {

namespace {

enum class Tok { uint_lit, sym_g, sym_x, sym_y, plus, minus, star, caret,
                 lparen, rparen, slash, end };

struct Token {
  Tok kind;
  std::uint64_t value = 0;
  std::size_t pos = 0;
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
    while (i_ < text_.size() && std::isspace(std::uint8_t(text_[i_]))) ++i_;
    cur_.pos = i_;
    if (i_ >= text_.size()) {
      cur_.kind = Tok::end;
      return;
    }
    char c = text_[i_];
    if (std::isdigit(std::uint8_t(c))) {
      std::uint64_t v = 0;
      while (i_ < text_.size() && std::isdigit(std::uint8_t(text_[i_]))) {
        v = v * 10 + std::uint64_t(text_[i_] - '0');
        ++i_;
      }
      cur_.kind = Tok::uint_lit;
      cur_.value = v;
      return;
    }
    ++i_;
    switch (c) {
      case 'g': cur_.kind = Tok::sym_g; return;
      case 'X': cur_.kind = Tok::sym_x; return;
      case 'Y': cur_.kind = Tok::sym_y; return;
      case '+': cur_.kind = Tok::plus; return;
      case '-': cur_.kind = Tok::minus; return;
      case '*': cur_.kind = Tok::star; return;
      case '^': cur_.kind = Tok::caret; return;
      case '(': cur_.kind = Tok::lparen; return;
      case ')': cur_.kind = Tok::rparen; return;
      case '/': cur_.kind = Tok::slash; return;
      default:
        if (std::isalpha(std::uint8_t(c)))
          fail(errc::unknown_symbol, std::string("unknown symbol '") + c +
                                         "' at position " +
                                         std::to_string(cur_.pos + 1));
        fail(errc::syntax_error, std::string("unexpected character '") + c +
                                     "' at position " +
                                     std::to_string(cur_.pos + 1));
    }
  }

  const std::string& text_;
  std::size_t i_ = 0;
  Token cur_;
};

struct Node {
  enum class Kind { lit, gen, x, y, add, sub, mul, pow };
  Kind kind;
  std::uint64_t value = 0;  // lit value or pow exponent
  std::size_t pos = 0;
  std::unique_ptr<Node> lhs, rhs;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make(Node::Kind k, std::size_t pos) {
  auto n = std::make_unique<Node>();
  n->kind = k;
  n->pos = pos;
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  NodePtr parse_expr() {
    NodePtr n = parse_term();
    while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
      Token op = lex_.take();
      NodePtr rhs = parse_term();
      NodePtr t = make(op.kind == Tok::plus ? Node::Kind::add : Node::Kind::sub,
                       op.pos);
      t->lhs = std::move(n);
      t->rhs = std::move(rhs);
      n = std::move(t);
    }
    return n;
  }

  bool at_slash() const { return lex_.peek().kind == Tok::slash; }
  void eat_slash() { lex_.take(); }
  void expect_end() {
    if (lex_.peek().kind != Tok::end)
      fail(errc::syntax_error, "trailing input at position " +
                                   std::to_string(lex_.peek().pos + 1));
  }

 private:
  NodePtr parse_term() {
    NodePtr n = parse_factor();
    while (lex_.peek().kind == Tok::star) {
      Token op = lex_.take();
      NodePtr rhs = parse_factor();
      NodePtr t = make(Node::Kind::mul, op.pos);
      t->lhs = std::move(n);
      t->rhs = std::move(rhs);
      n = std::move(t);
    }
    return n;
  }

  NodePtr parse_factor() {
    NodePtr n = parse_atom();
    if (lex_.peek().kind == Tok::caret) {
      Token op = lex_.take();
      if (lex_.peek().kind != Tok::uint_lit)
        fail(errc::syntax_error, "expected exponent at position " +
                                     std::to_string(lex_.peek().pos + 1));
      Token e = lex_.take();
      NodePtr t = make(Node::Kind::pow, op.pos);
      t->value = e.value;
      t->lhs = std::move(n);
      n = std::move(t);
    }
    return n;
  }

  NodePtr parse_atom() {
    Token t = lex_.peek();
    switch (t.kind) {
      case Tok::uint_lit: {
        lex_.take();
        NodePtr n = make(Node::Kind::lit, t.pos);
        n->value = t.value;
        return n;
      }
      case Tok::sym_g: lex_.take(); return make(Node::Kind::gen, t.pos);
      case Tok::sym_x: lex_.take(); return make(Node::Kind::x, t.pos);
      case Tok::sym_y: lex_.take(); return make(Node::Kind::y, t.pos);
      case Tok::lparen: {
        lex_.take();
        NodePtr n = parse_expr();
        if (lex_.peek().kind != Tok::rparen)
          fail(errc::syntax_error, "expected ')' at position " +
                                       std::to_string(lex_.peek().pos + 1));
        lex_.take();
        return n;
      }
      default:
        fail(errc::syntax_error, "expected an atom at position " +
                                     std::to_string(t.pos + 1));
    }
  }

  Lexer lex_;
};

SkewPoly eval_skew(const Node& n, const FieldTower& tw) {
  switch (n.kind) {
    case Node::Kind::lit:
      return SkewPoly::constant(&tw, tw.from_int(std::int64_t(n.value)));
    case Node::Kind::gen: return SkewPoly::constant(&tw, tw.gen());
    case Node::Kind::x: return SkewPoly::x(&tw);
    case Node::Kind::y: return SkewPoly::x(&tw).shifted(long(tw.r()) - 1);
    case Node::Kind::add: return eval_skew(*n.lhs, tw) + eval_skew(*n.rhs, tw);
    case Node::Kind::sub: return eval_skew(*n.lhs, tw) - eval_skew(*n.rhs, tw);
    case Node::Kind::mul: return eval_skew(*n.lhs, tw) * eval_skew(*n.rhs, tw);
    case Node::Kind::pow: {
      SkewPoly base = eval_skew(*n.lhs, tw);
      SkewPoly acc = SkewPoly::one(&tw);
      for (std::uint64_t i = 0; i < n.value; ++i) acc = acc * base;
      return acc;
    }
  }
  fail(errc::internal, "bad node");
}

KPoly eval_coef(const Node& n, const FieldTower& tw, bool allow_g) {
  const KField* kf = tw.kfield();
  switch (n.kind) {
    case Node::Kind::lit:
      return KPoly::constant(kf, tw.from_int(std::int64_t(n.value)));
    case Node::Kind::gen:
      if (!allow_g)
        fail(errc::non_central_denominator,
             "generator not allowed at position " + std::to_string(n.pos + 1));
      return KPoly::constant(kf, tw.gen());
    case Node::Kind::x:
      fail(errc::non_central_denominator,
           "X is not allowed in a denominator (position " +
               std::to_string(n.pos + 1) + ")");
    case Node::Kind::y: return KPoly::monomial(kf, tw.one(), 1);
    case Node::Kind::add:
      return eval_coef(*n.lhs, tw, allow_g) + eval_coef(*n.rhs, tw, allow_g);
    case Node::Kind::sub:
      return eval_coef(*n.lhs, tw, allow_g) - eval_coef(*n.rhs, tw, allow_g);
    case Node::Kind::mul:
      return eval_coef(*n.lhs, tw, allow_g) * eval_coef(*n.rhs, tw, allow_g);
    case Node::Kind::pow:
      return eval_coef(*n.lhs, tw, allow_g).pow(n.value);
  }
  fail(errc::internal, "bad node");
}

}  // namespace

SkewFraction parse_value(const std::string& text, const FieldTower& tw) {
  Parser p(text);
  NodePtr num = p.parse_expr();
  if (!p.at_slash()) {
    p.expect_end();
    return SkewFraction::from_poly(eval_skew(*num, tw));
  }
  p.eat_slash();
  NodePtr den = p.parse_expr();
  p.expect_end();
  KPoly d = eval_coef(*den, tw, /*allow_g=*/true);
  if (!tw.is_central(d))
    fail(errc::non_central_denominator,
         "denominator does not normalize into F[Y]");
  if (d.is_zero()) fail(errc::division_by_zero, "zero denominator");
  return SkewFraction(eval_skew(*num, tw), tw.to_center(d));
}

KRat parse_commutative(const std::string& text, const FieldTower& tw) {
  Parser p(text);
  NodePtr num = p.parse_expr();
  KPoly n = eval_coef(*num, tw, true);
  if (!p.at_slash()) {
    p.expect_end();
    return KRat(n);
  }
  p.eat_slash();
  NodePtr den = p.parse_expr();
  p.expect_end();
  KPoly d = eval_coef(*den, tw, true);
  if (d.is_zero()) fail(errc::division_by_zero, "zero denominator");
  return KRat(n, d);
}

namespace {

void append_k_term(std::ostringstream& os, std::uint32_t c, std::size_t k,
                   bool first) {
  if (!first) os << '+';
  if (k == 0) {
    os << c;
    return;
  }
  if (c != 1) os << c << '*';
  os << 'g';
  if (k >= 2) os << '^' << k;
}

}  // namespace

std::string k_to_string(const KElement& a) {
  std::ostringstream os;
  bool first = true;
  const auto& coords = a.coords();
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] == 0) continue;
    append_k_term(os, coords[k], k, first);
    first = false;
  }
  if (first) return "0";
  return os.str();
}

std::string skew_to_canonical(const SkewPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = f.valuation(); i <= f.degree(); ++i) {
    KElement a = f.coeff(i);
    if (a.is_zero()) continue;
    if (!first) os << " + ";
    os << '(' << k_to_string(a) << ")*X^" << i;
    first = false;
  }
  return os.str();
}

std::string center_to_canonical(const FpPoly& d) {
  if (d.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d.coeff(k) == 0) continue;
    if (!first) os << " + ";
    os << '(' << d.coeff(k) << ")*Y^" << k;
    first = false;
  }
  return os.str();
}

std::string fraction_to_canonical(const SkewFraction& f) {
  if (f.is_zero()) return "0";
  SkewPoly num = f.num();
  FpPoly den = f.den();
  if (num.valuation() < 0) {
    // lift the negative X-valuation back into a Y-power in the denominator
    long r = long(f.tower().r());
    long t = (-num.valuation() + r - 1) / r;
    num = num.shifted(r * t);
    den = den.shifted(std::size_t(t));
  }
  if (den.degree() == 0) return skew_to_canonical(num);
  return "(" + skew_to_canonical(num) + ") / (" + center_to_canonical(den) +
         ")";
}

namespace {

// one compact term: coefficient followed by VAR^d, minimal punctuation
void append_compact_term(std::ostringstream& os, const std::string& coeff,
                         bool multi, const char* var, long d, bool first) {
  if (!first) os << '+';
  if (d == 0) {
    os << coeff;
    return;
  }
  if (coeff != "1") {
    if (multi)
      os << '(' << coeff << ")*";
    else
      os << coeff << '*';
  }
  os << var;
  if (d != 1) os << '^' << d;
}

bool is_multi_term(const std::string& s) {
  return s.find('+') != std::string::npos;
}

}  // namespace

std::string skew_to_compact(const SkewPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = f.degree(); i >= f.valuation(); --i) {
    KElement a = f.coeff(i);
    if (a.is_zero()) continue;
    std::string c = k_to_string(a);
    append_compact_term(os, c, is_multi_term(c), "X", i, first);
    first = false;
  }
  return os.str();
}

std::string center_to_compact(const FpPoly& d) {
  if (d.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = d.degree(); k >= 0; --k) {
    if (d.coeff(std::size_t(k)) == 0) continue;
    append_compact_term(os, std::to_string(d.coeff(std::size_t(k))), false,
                        "Y", k, first);
    first = false;
  }
  return os.str();
}

std::string fraction_to_compact(const SkewFraction& f) {
  if (f.is_zero()) return "0";
  if (f.den().degree() == 0 && f.num().is_polynomial())
    return skew_to_compact(f.num());
  return "(" + skew_to_compact(f.num()) + ")/(" + center_to_compact(f.den()) +
         ")";
}

std::string series_to_string(const TaylorSeries& s) {
  if (s.is_zero_to_precision()) return "O(T^" + std::to_string(s.prec()) + ")";
  std::ostringstream os;
  bool first = true;
  for (long n = s.valuation(); n < s.prec(); ++n) {
    QuotientElement q = s.coeff(n);
    if (q.is_zero()) continue;
    if (!first) os << " + ";
    std::string c = skew_to_compact(q.rep());
    if (n == 0) {
      os << (is_multi_term(c) ? "(" + c + ")" : c);
    } else {
      if (c != "1") {
        if (is_multi_term(c) || c.find('*') != std::string::npos ||
            c.find('X') != std::string::npos)
          os << '(' << c << ")*";
        else
          os << c << '*';
      }
      os << 'T';
      if (n != 1) os << '^' << n;
    }
    first = false;
  }
  if (first) return "O(T^" + std::to_string(s.prec()) + ")";
  return os.str();
}

std::string series_to_string(const XSeries& s) {
  const char* var = s.at_infinity() ? "Xt" : "X";
  if (s.is_zero_to_precision())
    return std::string("O(") + var + "^" + std::to_string(s.prec()) + ")";
  std::ostringstream os;
  bool first = true;
  for (long i = s.valuation(); i < s.prec(); ++i) {
    KElement a = s.coeff(i);
    if (a.is_zero()) continue;
    if (!first) os << " + ";
    std::string c = k_to_string(a);
    if (i == 0) {
      os << (is_multi_term(c) ? "(" + c + ")" : c);
    } else {
      if (c != "1") {
        if (is_multi_term(c))
          os << '(' << c << ")*";
        else
          os << c << '*';
      }
      os << var;
      if (i != 1) os << '^' << i;
    }
    first = false;
  }
  if (first) return std::string("O(") + var + "^" + std::to_string(s.prec()) + ")";
  return os.str();
}

}  // namespace skewres
