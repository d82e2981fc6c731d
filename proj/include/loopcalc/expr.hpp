#pragma once

// Expression language.
//
//   expr    := sum ( "(x)" sum )*
//   sum     := term ( ("+" | "-") term )*
//   term    := unary ( "*" unary )*
//   unary   := "-" unary | power
//   power   := primary [ "^" INT ]
//   primary := INT | NAME | "(" expr ")"
//            | "psi" "(" expr ")" | "delta" "(" expr ")"
//            | "bracket" "(" expr "," expr ")"
//            | "mu" "(" INT "," INT "," INT ";" expr ("," expr)* ")"
//
// "(x)" is the tensor operator only in infix position, so a generator
// called x can still be parenthesised.

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "loopcalc/algebra.hpp"
#include "loopcalc/coproduct.hpp"
#include "loopcalc/format.hpp"
#include "loopcalc/model.hpp"
#include "loopcalc/surface.hpp"
#include "loopcalc/tensor.hpp"
#include "loopcalc/tqft.hpp"

namespace loopcalc {

/// Syntax or resolution error at a 1-based column.
class ExprError : public std::runtime_error {
 public:
  ExprError(std::size_t column, const std::string& message)
      : std::runtime_error("column " + std::to_string(column) + ": " + message),
        column_(column),
        message_(message) {}
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t column_;
  std::string message_;
};

/// Type errors while evaluating (tensor where an element is needed, ...).
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Token {
  enum class Kind {
    Int, Ident, Plus, Minus, Star, Caret, LParen, RParen, Comma, Semicolon,
    Equals, LBracket, RBracket, End
  };
  Kind kind = Kind::End;
  std::string text;
  std::size_t column = 0;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    Token tok;
    tok.column = i + 1;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tok.kind = Token::Kind::Int;
      tok.text = std::string(text.substr(i, j - i));
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      tok.kind = Token::Kind::Ident;
      tok.text = std::string(text.substr(i, j - i));
      i = j;
    } else {
      switch (ch) {
        case '+': tok.kind = Token::Kind::Plus; break;
        case '-': tok.kind = Token::Kind::Minus; break;
        case '*': tok.kind = Token::Kind::Star; break;
        case '^': tok.kind = Token::Kind::Caret; break;
        case '(': tok.kind = Token::Kind::LParen; break;
        case ')': tok.kind = Token::Kind::RParen; break;
        case ',': tok.kind = Token::Kind::Comma; break;
        case ';': tok.kind = Token::Kind::Semicolon; break;
        case '=': tok.kind = Token::Kind::Equals; break;
        case '[': tok.kind = Token::Kind::LBracket; break;
        case ']': tok.kind = Token::Kind::RBracket; break;
        default:
          throw ExprError(i + 1, std::string("unexpected character '") + ch + "'");
      }
      tok.text = std::string(1, ch);
      ++i;
    }
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = Token::Kind::End;
  end.column = text.size() + 1;
  out.push_back(end);
  return out;
}

struct ExprNode {
  enum class Kind {
    Integer, Generator, Add, Sub, Neg, Mul, Pow, Tensor, Psi, Delta, Bracket, Mu
  };
  Kind kind = Kind::Integer;
  Integer value;                // Integer
  std::size_t generator = 0;    // Generator
  std::uint64_t exponent = 0;   // Pow
  Surface surface;              // Mu
  std::size_t column = 0;
  std::vector<std::shared_ptr<const ExprNode>> children;
};

using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprAst {
  ExprPtr root;
};

class ExprParser {
 public:
  ExprParser(const std::vector<Token>& tokens, std::size_t start,
             const GradedAlgebra& algebra)
      : tokens_(tokens), pos_(start), algebra_(algebra) {}

  ExprPtr parse_expr() {
    ExprPtr first = parse_sum();
    if (!at_tensor_operator()) return first;
    auto node = make(ExprNode::Kind::Tensor, first->column);
    node->children.push_back(first);
    while (at_tensor_operator()) {
      pos_ += 3;
      node->children.push_back(parse_sum());
    }
    return node;
  }

  /// Parses a complete expression; trailing tokens are an error.
  ExprPtr parse_all() {
    ExprPtr e = parse_expr();
    if (peek().kind != Token::Kind::End)
      throw ExprError(peek().column, "unexpected '" + peek().text + "'");
    return e;
  }

  std::size_t position() const { return pos_; }

 private:
  using K = Token::Kind;

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  const Token& advance() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

  const Token& expect(K kind, const char* what) {
    if (peek().kind != kind)
      throw ExprError(peek().column, std::string("expected ") + what +
                                         (peek().kind == K::End
                                              ? " at end of input"
                                              : ", found '" + peek().text + "'"));
    return advance();
  }

  bool at_tensor_operator() const {
    return peek().kind == K::LParen && peek(1).kind == K::Ident &&
           peek(1).text == "x" && peek(2).kind == K::RParen;
  }

  static std::shared_ptr<ExprNode> make(ExprNode::Kind kind, std::size_t column) {
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->column = column;
    return n;
  }

  ExprPtr binary(ExprNode::Kind kind, std::size_t column, ExprPtr a, ExprPtr b) {
    auto n = make(kind, column);
    n->children = {std::move(a), std::move(b)};
    return n;
  }

  ExprPtr parse_sum() {
    ExprPtr left = parse_term();
    while (peek().kind == K::Plus || peek().kind == K::Minus) {
      const Token& op = advance();
      ExprPtr right = parse_term();
      left = binary(op.kind == K::Plus ? ExprNode::Kind::Add : ExprNode::Kind::Sub,
                    op.column, left, right);
    }
    return left;
  }

  ExprPtr parse_term() {
    ExprPtr left = parse_unary();
    while (peek().kind == K::Star) {
      const Token& op = advance();
      left = binary(ExprNode::Kind::Mul, op.column, left, parse_unary());
    }
    return left;
  }

  ExprPtr parse_unary() {
    if (peek().kind == K::Minus) {
      const Token& op = advance();
      auto n = make(ExprNode::Kind::Neg, op.column);
      n->children.push_back(parse_unary());
      return n;
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_primary();
    if (peek().kind != K::Caret) return base;
    const Token& op = advance();
    const Token& e = expect(K::Int, "a non-negative integer exponent");
    auto n = make(ExprNode::Kind::Pow, op.column);
    n->exponent = to_u64(e);
    n->children.push_back(base);
    return n;
  }

  static std::uint64_t to_u64(const Token& t) {
    const Integer v(t.text);
    if (v > Integer(std::numeric_limits<std::int64_t>::max()))
      throw ExprError(t.column, "integer too large here");
    return static_cast<std::uint64_t>(v);
  }

  ExprPtr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case K::Int: {
        advance();
        auto n = make(ExprNode::Kind::Integer, t.column);
        n->value = Integer(t.text);
        return n;
      }
      case K::LParen: {
        advance();
        ExprPtr inner = parse_expr();
        expect(K::RParen, "')'");
        return inner;
      }
      case K::Ident: {
        if (is_reserved_name(t.text)) return parse_call();
        advance();
        auto idx = algebra_.find(t.text);
        if (!idx) throw ExprError(t.column, "unknown generator '" + t.text + "'");
        auto n = make(ExprNode::Kind::Generator, t.column);
        n->generator = *idx;
        return n;
      }
      case K::End:
        throw ExprError(t.column, "unexpected end of input");
      default:
        throw ExprError(t.column, "unexpected '" + t.text + "'");
    }
  }

  ExprPtr parse_call() {
    const Token name = advance();
    expect(K::LParen, "'(' after function name");
    if (name.text == "mu") return parse_mu(name);
    std::vector<ExprPtr> args;
    args.push_back(parse_expr());
    while (peek().kind == K::Comma) {
      advance();
      args.push_back(parse_expr());
    }
    expect(K::RParen, "')'");
    const std::size_t want = name.text == "bracket" ? 2 : 1;
    if (args.size() != want)
      throw ExprError(name.column, name.text + " expects " + std::to_string(want) +
                                       " argument" + (want == 1 ? "" : "s") +
                                       ", got " + std::to_string(args.size()));
    const auto kind = name.text == "psi"     ? ExprNode::Kind::Psi
                      : name.text == "delta" ? ExprNode::Kind::Delta
                                             : ExprNode::Kind::Bracket;
    auto n = make(kind, name.column);
    n->children = std::move(args);
    return n;
  }

  ExprPtr parse_mu(const Token& name) {
    const auto g = static_cast<std::int64_t>(to_u64(expect(K::Int, "genus")));
    expect(K::Comma, "','");
    const auto p = static_cast<std::int64_t>(to_u64(expect(K::Int, "input count")));
    expect(K::Comma, "','");
    const auto q = static_cast<std::int64_t>(to_u64(expect(K::Int, "output count")));
    expect(K::Semicolon, "';'");
    if (p < 1) throw ExprError(name.column, "mu needs at least one input");
    if (q < 1) throw ExprError(name.column, "mu needs at least one output");
    auto n = make(ExprNode::Kind::Mu, name.column);
    n->surface = Surface::make(g, p, q);
    n->children.push_back(parse_expr());
    while (peek().kind == K::Comma) {
      advance();
      n->children.push_back(parse_expr());
    }
    expect(K::RParen, "')'");
    if (static_cast<std::int64_t>(n->children.size()) != p)
      throw ExprError(name.column, "mu(" + std::to_string(g) + "," +
                                       std::to_string(p) + "," +
                                       std::to_string(q) + "; ...) expects " +
                                       std::to_string(p) + " arguments, got " +
                                       std::to_string(n->children.size()));
    return n;
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_;
  const GradedAlgebra& algebra_;
};

inline ExprAst parse_expr(std::string_view text, const GradedAlgebra& algebra) {
  const auto tokens = tokenize(text);
  ExprParser parser(tokens, 0, algebra);
  return ExprAst{parser.parse_all()};
}

// ---------------------------------------------------------------------------
// Evaluation

using Value = std::variant<Element, TensorElement>;

inline Value normalize(TensorElement t) {
  if (t.arity() == 1) return to_element(t);
  return t;
}

inline TensorElement as_tensor(const Value& v) {
  if (const auto* e = std::get_if<Element>(&v)) return to_tensor(*e);
  return std::get<TensorElement>(v);
}

inline std::string format_value(const Value& v) {
  if (const auto* e = std::get_if<Element>(&v)) return format_element(*e);
  return format_tensor(std::get<TensorElement>(v));
}

inline std::size_t arity_of(const Value& v) {
  if (std::holds_alternative<Element>(v)) return 1;
  return std::get<TensorElement>(v).arity();
}

class Evaluator {
 public:
  /// Ring-only evaluator: string operations, Δ and brackets are rejected.
  explicit Evaluator(std::shared_ptr<const GradedAlgebra> algebra)
      : algebra_(std::move(algebra)) {}
  explicit Evaluator(const LoopModel& model)
      : algebra_(model.algebra_ptr()), model_(&model) {}

  Value eval(const ExprNode& n) const {
    using Kind = ExprNode::Kind;
    switch (n.kind) {
      case Kind::Integer: return algebra_->constant(n.value);
      case Kind::Generator: return algebra_->generator(n.generator);
      case Kind::Neg: {
        Value v = eval(*n.children[0]);
        if (auto* e = std::get_if<Element>(&v)) return negate(*e);
        return tensor_scale(-1, std::get<TensorElement>(v));
      }
      case Kind::Add:
      case Kind::Sub: {
        Value a = eval(*n.children[0]);
        Value b = eval(*n.children[1]);
        if (n.kind == Kind::Sub) {
          if (auto* e = std::get_if<Element>(&b))
            b = negate(*e);
          else
            b = tensor_scale(-1, std::get<TensorElement>(b));
        }
        return add_values(a, b, n.column);
      }
      case Kind::Mul: {
        Value a = eval(*n.children[0]);
        Value b = eval(*n.children[1]);
        const auto* ea = std::get_if<Element>(&a);
        const auto* eb = std::get_if<Element>(&b);
        if (ea && eb) return mul(*ea, *eb);
        if (ea) return normalize(left_action(*ea, std::get<TensorElement>(b)));
        if (eb) return normalize(right_action(std::get<TensorElement>(a), *eb));
        throw EvalError("column " + std::to_string(n.column) +
                        ": cannot multiply two tensors");
      }
      case Kind::Pow: {
        Value base = eval(*n.children[0]);
        return power(element(base, n.column, "^"), n.exponent);
      }
      case Kind::Tensor: {
        TensorElement acc = as_tensor(eval(*n.children[0]));
        for (std::size_t i = 1; i < n.children.size(); ++i)
          acc = tensor_concat(acc, as_tensor(eval(*n.children[i])));
        return normalize(acc);
      }
      case Kind::Psi:
        return psi(model(n, "psi"), element(eval(*n.children[0]), n.column, "psi"));
      case Kind::Delta:
        return delta(model(n, "delta"),
                     element(eval(*n.children[0]), n.column, "delta"));
      case Kind::Bracket:
        return bracket(model(n, "bracket"),
                       element(eval(*n.children[0]), n.column, "bracket"),
                       element(eval(*n.children[1]), n.column, "bracket"));
      case Kind::Mu: {
        const LoopModel& m = model(n, "mu");
        std::vector<Element> args;
        for (const auto& c : n.children)
          args.push_back(element(eval(*c), c->column, "mu"));
        return normalize(string_operation(m, n.surface, tensor(args)));
      }
    }
    throw EvalError("unknown expression node");
  }

 private:
  const LoopModel& model(const ExprNode& n, const char* what) const {
    if (!model_)
      throw EvalError("column " + std::to_string(n.column) + ": " + what +
                      " is not allowed here");
    return *model_;
  }

  static Element element(const Value& v, std::size_t column, const char* what) {
    if (const auto* e = std::get_if<Element>(&v)) return *e;
    throw EvalError("column " + std::to_string(column) + ": " + what +
                    " needs an element, got a tensor of arity " +
                    std::to_string(std::get<TensorElement>(v).arity()));
  }

  static Value add_values(const Value& a, const Value& b, std::size_t column) {
    const auto* ea = std::get_if<Element>(&a);
    const auto* eb = std::get_if<Element>(&b);
    if (ea && eb) return add(*ea, *eb);
    // The zero element is the additive identity for tensors of any arity.
    if (ea && ea->is_zero()) return b;
    if (eb && eb->is_zero()) return a;
    if (arity_of(a) != arity_of(b))
      throw EvalError("column " + std::to_string(column) +
                      ": cannot add tensors of arity " +
                      std::to_string(arity_of(a)) + " and " +
                      std::to_string(arity_of(b)));
    return normalize(tensor_add(as_tensor(a), as_tensor(b)));
  }

  std::shared_ptr<const GradedAlgebra> algebra_;
  const LoopModel* model_ = nullptr;
};

inline Value eval(const LoopModel& model, const ExprAst& ast) {
  return Evaluator(model).eval(*ast.root);
}

inline Element eval_ring(std::shared_ptr<const GradedAlgebra> algebra,
                         const ExprAst& ast) {
  Value v = Evaluator(std::move(algebra)).eval(*ast.root);
  if (auto* e = std::get_if<Element>(&v)) return *e;
  throw EvalError("expected an element, got a tensor");
}

/// parse + eval + print.
inline std::string evaluate_to_string(const LoopModel& model,
                                      std::string_view text) {
  return format_value(eval(model, parse_expr(text, model.algebra())));
}

}  // namespace loopcalc
