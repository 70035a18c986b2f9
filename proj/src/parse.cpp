#include "regulous/parse.hpp"

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "regulous/errors.hpp"

namespace regulous {

namespace {

constexpr unsigned kMaxExponent = 4096;

struct Node {
  enum class Kind { number, variable, add, sub, mul, div, pow, neg };
  Kind kind = Kind::number;
  Rat value;
  char var = 0;
  std::size_t pos = 0;
  std::unique_ptr<Node> lhs, rhs;
};

using NodePtr = std::unique_ptr<Node>;

class Parser {
 public:
  Parser(std::string_view text, std::string_view vars) : s_(text), vars_(vars) {}

  NodePtr parse() {
    NodePtr n = expr();
    skip();
    if (i_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[i_] + "'", i_);
    return n;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  static NodePtr binary(Node::Kind k, NodePtr a, NodePtr b, std::size_t pos) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->pos = pos;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
  }

  NodePtr expr() {
    NodePtr n = term();
    while (true) {
      skip();
      const std::size_t at = i_;
      if (eat('+')) {
        n = binary(Node::Kind::add, std::move(n), term(), at);
      } else if (eat('-')) {
        n = binary(Node::Kind::sub, std::move(n), term(), at);
      } else {
        return n;
      }
    }
  }

  NodePtr term() {
    NodePtr n = unary();
    while (true) {
      skip();
      const std::size_t at = i_;
      if (eat('*')) {
        n = binary(Node::Kind::mul, std::move(n), unary(), at);
      } else if (eat('/')) {
        n = binary(Node::Kind::div, std::move(n), unary(), at);
      } else {
        return n;
      }
    }
  }

  NodePtr unary() {
    skip();
    const std::size_t at = i_;
    if (eat('-')) return binary(Node::Kind::neg, unary(), nullptr, at);
    if (eat('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    skip();
    const std::size_t at = i_;
    if (eat('^')) return binary(Node::Kind::pow, std::move(base), unary(), at);
    return base;
  }

  NodePtr atom() {
    skip();
    if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
    const std::size_t at = i_;
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      NodePtr n = expr();
      if (!eat(')')) throw ParseError("expected ')'", i_);
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (vars_.find(c) != std::string_view::npos) {
      ++i_;
      auto n = std::make_unique<Node>();
      n->kind = Node::Kind::variable;
      n->var = c;
      n->pos = at;
      return n;
    }
    throw ParseError(std::string("unexpected '") + c + "'", at);
  }

  NodePtr number() {
    const std::size_t at = i_;
    std::string digits;
    std::string frac;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) digits += s_[i_++];
    if (i_ < s_.size() && s_[i_] == '.') {
      ++i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) frac += s_[i_++];
    }
    if (digits.empty() && frac.empty()) throw ParseError("malformed number", at);
    Int whole(digits.empty() ? "0" : digits);
    Int scale = 1;
    Int fpart = 0;
    if (!frac.empty()) {
      fpart = Int(frac);
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    }
    auto n = std::make_unique<Node>();
    n->kind = Node::Kind::number;
    n->value = Rat(whole * scale + fpart, scale);
    n->value.canonicalize();
    n->pos = at;
    return n;
  }

  std::string_view s_;
  std::string_view vars_;
  std::size_t i_ = 0;
};

/// Variables other than y are read as x, so arcs in t become polynomials in x.
RatFunc evaluate(const Node& n) {
  switch (n.kind) {
    case Node::Kind::number:
      return RatFunc(n.value);
    case Node::Kind::variable:
      return RatFunc(n.var == 'y' ? Poly2::y() : Poly2::x());
    case Node::Kind::add:
      return evaluate(*n.lhs) + evaluate(*n.rhs);
    case Node::Kind::sub:
      return evaluate(*n.lhs) - evaluate(*n.rhs);
    case Node::Kind::mul:
      return evaluate(*n.lhs) * evaluate(*n.rhs);
    case Node::Kind::div: {
      RatFunc d = evaluate(*n.rhs);
      if (d.is_zero()) throw ZeroDenominator("division by zero at position " + std::to_string(n.pos));
      return evaluate(*n.lhs) / d;
    }
    case Node::Kind::neg:
      return -evaluate(*n.lhs);
    case Node::Kind::pow: {
      RatFunc e = evaluate(*n.rhs);
      if (!e.is_constant()) throw ParseError("exponent must be a constant", n.pos);
      const Rat v = e.num().coeff(0, 0) / e.den().coeff(0, 0);
      if (v < 0 || v.get_den() != 1) throw ParseError("exponent must be a non-negative integer", n.pos);
      if (v > kMaxExponent) throw ParseError("exponent too large", n.pos);
      return evaluate(*n.lhs).pow(static_cast<unsigned>(v.get_num().get_ui()));
    }
  }
  return {};
}

Poly2 as_polynomial(const RatFunc& f, std::size_t pos) {
  if (!f.is_polynomial()) throw ParseError("expected a polynomial", pos);
  return f.num() * (1 / f.den().coeff(0, 0));
}

using Weighted = std::vector<std::pair<Rat, Poly2>>;

std::optional<Weighted> sos_of(const Node& n) {
  switch (n.kind) {
    case Node::Kind::number:
      if (n.value > 0) return Weighted{{n.value, Poly2(1)}};
      return std::nullopt;
    case Node::Kind::add: {
      auto a = sos_of(*n.lhs);
      auto b = sos_of(*n.rhs);
      if (!a || !b) return std::nullopt;
      a->insert(a->end(), b->begin(), b->end());
      return a;
    }
    case Node::Kind::pow: {
      RatFunc e = evaluate(*n.rhs);
      if (!e.is_constant()) return std::nullopt;
      const Rat v = e.num().coeff(0, 0) / e.den().coeff(0, 0);
      if (v.get_den() != 1 || v < 2 || v.get_num().get_ui() % 2 != 0) return std::nullopt;
      const RatFunc base = evaluate(*n.lhs);
      if (!base.is_polynomial()) return std::nullopt;
      const Poly2 b = as_polynomial(base, n.pos);
      return Weighted{{Rat(1), b.pow(static_cast<unsigned>(v.get_num().get_ui() / 2))}};
    }
    case Node::Kind::mul: {
      auto a = sos_of(*n.lhs);
      auto b = sos_of(*n.rhs);
      if (!a || !b) return std::nullopt;
      const SosRep ra = sos_from_weighted(*a);
      const SosRep rb = sos_from_weighted(*b);
      Weighted out;
      for (auto& t : product_of_sos(ra.terms, rb.terms)) out.emplace_back(ra.scalar * rb.scalar, std::move(t));
      return out;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

RatFunc parse_expression(std::string_view text) {
  NodePtr n = Parser(text, "xy").parse();
  return evaluate(*n);
}

Poly2 parse_polynomial(std::string_view text) { return as_polynomial(parse_expression(text), 0); }

std::pair<Poly1, Poly1> parse_arc(std::string_view text) {
  std::size_t depth = 0;
  std::size_t comma = std::string_view::npos;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] == '(') ++depth;
    if (text[k] == ')' && depth > 0) --depth;
    if (text[k] == ',' && depth == 0) {
      if (comma != std::string_view::npos) throw ParseError("expected exactly two components", k);
      comma = k;
    }
  }
  if (comma == std::string_view::npos) throw ParseError("expected \"x(t), y(t)\"", text.size());
  auto component = [&](std::string_view part, std::size_t offset) {
    try {
      NodePtr n = Parser(part, "t").parse();
      const Poly2 p = as_polynomial(evaluate(*n), 0);
      return p.restrict(Axis::y, 0);
    } catch (const ParseError& e) {
      throw ParseError(std::string("in arc component: ") + e.what(), offset);
    }
  };
  return {component(text.substr(0, comma), 0), component(text.substr(comma + 1), comma + 1)};
}

std::optional<std::pair<SosRep, SosRep>> syntactic_sos(std::string_view text) {
  NodePtr n = Parser(text, "xy").parse();
  if (n->kind != Node::Kind::div) return std::nullopt;
  auto a = sos_of(*n->lhs);
  auto b = sos_of(*n->rhs);
  if (!a || !b) return std::nullopt;
  SosRep p = sos_from_weighted(*a);
  SosRep q = sos_from_weighted(*b);
  if (q.terms.empty()) return std::nullopt;
  return std::make_pair(std::move(p), std::move(q));
}

}  // namespace regulous
