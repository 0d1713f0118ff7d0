#include "core/parser.hpp"

#include <cctype>
#include <vector>

namespace wcert::expr {

using ring::ArithmeticError;
using ring::Scalar;
using weyl::WeylElement;

bool Expr::operator==(const Expr& o) const {
  if (kind != o.kind || value != o.value || gen_family != o.gen_family ||
      gen_index != o.gen_index)
    return false;
  auto eq = [](const ExprPtr& x, const ExprPtr& y) {
    if (!x || !y) return !x && !y;
    return *x == *y;
  };
  return eq(a, o.a) && eq(b, o.b);
}

namespace {

struct Token {
  enum class Type { Int, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };
  Type type;
  long value = 0;
  std::string text;
  size_t pos = 0;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.pos = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      long v = 0;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
        if (v > (1L << 50)) throw ParseError("integer literal too large", i);
        v = v * 10 + (s[j] - '0');
        ++j;
      }
      t.type = Token::Type::Int;
      t.value = v;
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      t.type = Token::Type::Ident;
      t.text = s.substr(i, j - i);
      i = j;
    } else {
      switch (c) {
        case '+': t.type = Token::Type::Plus; break;
        case '-': t.type = Token::Type::Minus; break;
        case '*': t.type = Token::Type::Star; break;
        case '^': t.type = Token::Type::Caret; break;
        case '(': t.type = Token::Type::LParen; break;
        case ')': t.type = Token::Type::RParen; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", i);
      }
      ++i;
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.type = Token::Type::End;
  end.pos = s.size();
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr run() {
    ExprPtr e = parse_sum();
    expect(Token::Type::End, "trailing input");
    return e;
  }

 private:
  std::vector<Token> toks_;
  size_t cur_ = 0;

  const Token& peek() const { return toks_[cur_]; }
  Token take() { return toks_[cur_++]; }
  void expect(Token::Type t, const std::string& what) {
    if (peek().type != t) throw ParseError("expected " + what, peek().pos);
    ++cur_;
  }

  static ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

  // sum := signed (('+' | '-') signed)*
  ExprPtr parse_sum() {
    ExprPtr e = parse_signed();
    while (peek().type == Token::Type::Plus || peek().type == Token::Type::Minus) {
      bool plus = take().type == Token::Type::Plus;
      ExprPtr rhs = parse_signed();
      Expr n;
      n.kind = plus ? Expr::Kind::Add : Expr::Kind::Sub;
      n.a = e;
      n.b = rhs;
      e = node(std::move(n));
    }
    return e;
  }

  // signed := '-' signed | product      (unary minus binds looser than '*')
  ExprPtr parse_signed() {
    if (peek().type == Token::Type::Minus) {
      take();
      Expr n;
      n.kind = Expr::Kind::Neg;
      n.a = parse_signed();
      return node(std::move(n));
    }
    return parse_product();
  }

  // product := power ('*' power)*
  ExprPtr parse_product() {
    ExprPtr e = parse_power();
    while (peek().type == Token::Type::Star) {
      take();
      Expr n;
      n.kind = Expr::Kind::Mul;
      n.a = e;
      n.b = parse_power();
      e = node(std::move(n));
    }
    return e;
  }

  // power := atom ('^' INT)?
  ExprPtr parse_power() {
    ExprPtr e = parse_atom();
    if (peek().type == Token::Type::Caret) {
      take();
      if (peek().type != Token::Type::Int)
        throw ParseError("expected a literal exponent", peek().pos);
      Token t = take();
      Expr n;
      n.kind = Expr::Kind::Pow;
      n.a = e;
      n.value = t.value;
      e = node(std::move(n));
    }
    return e;
  }

  ExprPtr parse_atom() {
    const Token& t = peek();
    switch (t.type) {
      case Token::Type::Int: {
        Token v = take();
        Expr n;
        n.kind = Expr::Kind::Int;
        n.value = v.value;
        return node(std::move(n));
      }
      case Token::Type::LParen: {
        take();
        ExprPtr e = parse_sum();
        expect(Token::Type::RParen, "')'");
        return e;
      }
      case Token::Type::Ident: {
        Token id = take();
        if (id.text == "sqrt" || id.text == "inv") {
          expect(Token::Type::LParen, "'('");
          if (id.text == "sqrt") {
            if (peek().type != Token::Type::Int)
              throw ParseError("sqrt takes an integer literal", peek().pos);
            Token v = take();
            expect(Token::Type::RParen, "')'");
            Expr n;
            n.kind = Expr::Kind::Sqrt;
            n.value = v.value;
            return node(std::move(n));
          }
          ExprPtr inner = parse_sum();
          expect(Token::Type::RParen, "')'");
          Expr n;
          n.kind = Expr::Kind::Inv;
          n.a = inner;
          return node(std::move(n));
        }
        if ((id.text[0] == 'x' || id.text[0] == 'y') && id.text.size() > 1) {
          unsigned idx = 0;
          for (size_t i = 1; i < id.text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(id.text[i])))
              throw ParseError("malformed generator name '" + id.text + "'", id.pos);
            idx = idx * 10 + static_cast<unsigned>(id.text[i] - '0');
          }
          if (idx == 0) throw ParseError("generator indices start at 1", id.pos);
          Expr n;
          n.kind = Expr::Kind::Gen;
          n.gen_family = id.text[0];
          n.gen_index = idx;
          return node(std::move(n));
        }
        throw ParseError("unknown identifier '" + id.text + "'", id.pos);
      }
      default:
        throw ParseError("expected an expression", t.pos);
    }
  }
};

// printing precedence levels: +/- = 1, unary - = 2, * = 3, ^ = 4, atom = 5
int prec(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Neg: return 2;
    case Expr::Kind::Mul: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
  }
}

void print_to(const ExprPtr& e, int required, std::string& out) {
  const bool parens = prec(*e) < required;
  if (parens) out += "(";
  switch (e->kind) {
    case Expr::Kind::Int: out += std::to_string(e->value); break;
    case Expr::Kind::Sqrt: out += "sqrt(" + std::to_string(e->value) + ")"; break;
    case Expr::Kind::Gen: out += e->gen_family + std::to_string(e->gen_index); break;
    case Expr::Kind::Inv:
      out += "inv(";
      print_to(e->a, 1, out);
      out += ")";
      break;
    case Expr::Kind::Neg:
      out += "-";
      print_to(e->a, 2, out);
      break;
    case Expr::Kind::Add:
      print_to(e->a, 1, out);
      out += " + ";
      print_to(e->b, 2, out);
      break;
    case Expr::Kind::Sub:
      print_to(e->a, 1, out);
      out += " - ";
      print_to(e->b, 2, out);
      break;
    case Expr::Kind::Mul:
      print_to(e->a, 3, out);
      out += "*";
      print_to(e->b, 4, out);
      break;
    case Expr::Kind::Pow:
      print_to(e->a, 5, out);
      out += "^" + std::to_string(e->value);
      break;
  }
  if (parens) out += ")";
}

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(lex(text)).run(); }

std::string print(const ExprPtr& e) {
  std::string out;
  print_to(e, 1, out);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

/// Generic lowering parameterized by the generator resolver.
template <typename GenFn>
WeylElement lower(const ExprPtr& e, const weyl::WeylContextPtr& ctx, GenFn&& gen) {
  auto rec = [&](auto&& self, const ExprPtr& x) -> WeylElement {
    switch (x->kind) {
      case Expr::Kind::Int: return WeylElement::constant(ctx, x->value);
      case Expr::Kind::Sqrt: throw ArithmeticError("sqrt is not available in this context");
      case Expr::Kind::Gen: return gen(x->gen_family, x->gen_index);
      case Expr::Kind::Neg: return -self(self, x->a);
      case Expr::Kind::Add: return self(self, x->a) + self(self, x->b);
      case Expr::Kind::Sub: return self(self, x->a) - self(self, x->b);
      case Expr::Kind::Mul: return self(self, x->a) * self(self, x->b);
      case Expr::Kind::Pow: return self(self, x->a).pow(static_cast<unsigned long>(x->value));
      case Expr::Kind::Inv: {
        WeylElement v = self(self, x->a);
        auto coords = weyl::central_coordinates(v);
        if (v.is_zero()) throw ArithmeticError("inv of zero");
        if (coords.size() != 1 || !coords.begin()->second.is_unit() ||
            coords.begin()->first != ring::Expo(ctx->generators(), 0))
          throw ArithmeticError("inv applies to invertible scalars only");
        long r = coords.begin()->second.constant_value().inverse().residue();
        return WeylElement::constant(ctx, r);
      }
    }
    throw ArithmeticError("unreachable expression kind");
  };
  return rec(rec, e);
}

}  // namespace

WeylElement eval_weyl(const ExprPtr& e, const weyl::WeylContextPtr& ctx) {
  return lower(e, ctx, [&](char fam, unsigned idx) {
    if (fam != 'x') throw ArithmeticError("y-generators are not in scope in a single factor");
    if (idx > ctx->generators()) throw ArithmeticError("generator index out of range");
    return WeylElement::generator(ctx, idx - 1);
  });
}

WeylElement eval_tensor(const ExprPtr& e, const weyl::TensorSquareContext& ctx) {
  return lower(e, ctx.carrier(), [&](char fam, unsigned idx) {
    if (idx > 2 * ctx.n()) throw ArithmeticError("generator index out of range");
    return fam == 'x' ? ctx.x(idx - 1) : ctx.y(idx - 1);
  });
}

Scalar eval_scalar(const ExprPtr& e, const ring::FieldDesc& field) {
  auto rec = [&](auto&& self, const ExprPtr& x) -> Scalar {
    switch (x->kind) {
      case Expr::Kind::Int: return Scalar::from_int(field, x->value);
      case Expr::Kind::Sqrt: {
        if (field.kind != ring::FieldKind::Quadratic || field.d != x->value)
          throw ArithmeticError("sqrt(" + std::to_string(x->value) +
                                ") does not live in " + field.name());
        return Scalar::quadratic(field.d, 0, 1);
      }
      case Expr::Kind::Gen: throw ArithmeticError("generators are not scalars");
      case Expr::Kind::Neg: return -self(self, x->a);
      case Expr::Kind::Add: return self(self, x->a) + self(self, x->b);
      case Expr::Kind::Sub: return self(self, x->a) - self(self, x->b);
      case Expr::Kind::Mul: return self(self, x->a) * self(self, x->b);
      case Expr::Kind::Pow: return self(self, x->a).pow(x->value);
      case Expr::Kind::Inv: return self(self, x->a).inverse();
    }
    throw ArithmeticError("unreachable expression kind");
  };
  return rec(rec, e);
}

}  // namespace wcert::expr
