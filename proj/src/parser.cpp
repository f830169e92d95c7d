#include "gll/parser.hpp"

#include <cctype>
#include <charconv>
#include <map>

#include "gll/error.hpp"

namespace gll::cli {

using poly::BiPoly;

namespace {

struct Token {
  enum class Kind { Number, Name, Symbol, End };
  Kind kind;
  std::size_t position;
  std::string text;
  std::uint64_t value = 0;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      Token t{Token::Kind::Number, start, std::string(src.substr(start, i - start))};
      const auto [ptr, ec] = std::from_chars(src.data() + start, src.data() + i, t.value);
      if (ec != std::errc()) throw Error(ErrorKind::SyntaxError, "integer literal too large", start);
      out.push_back(std::move(t));
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
      out.push_back({Token::Kind::Name, start, std::string(src.substr(start, i - start))});
    } else if (std::string_view("+-*^(),").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Symbol, i, std::string(1, c)});
      ++i;
    } else {
      throw Error(ErrorKind::SyntaxError, std::string("unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Token::Kind::End, src.size(), ""});
  return out;
}

using Node = std::unique_ptr<ExprNode>;

Node make(ExprNode::Kind kind, std::size_t pos) {
  auto n = std::make_unique<ExprNode>();
  n->kind = kind;
  n->position = pos;
  return n;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Node parse_all() {
    Node n = expr();
    if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "'");
    return n;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at_symbol(char c) const { return peek().kind == Token::Kind::Symbol && peek().text[0] == c; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::SyntaxError, msg, peek().position);
  }
  void expect_symbol(char c) {
    if (!at_symbol(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Node expr() {
    Node left = term();
    while (at_symbol('+') || at_symbol('-')) {
      const auto kind = at_symbol('+') ? ExprNode::Kind::Add : ExprNode::Kind::Sub;
      Node n = make(kind, peek().position);
      ++pos_;
      n->children.push_back(std::move(left));
      n->children.push_back(term());
      left = std::move(n);
    }
    return left;
  }

  Node term() {
    Node left = unary();
    while (at_symbol('*')) {
      Node n = make(ExprNode::Kind::Mul, peek().position);
      ++pos_;
      n->children.push_back(std::move(left));
      n->children.push_back(unary());
      left = std::move(n);
    }
    return left;
  }

  Node unary() {
    if (at_symbol('-')) {
      Node n = make(ExprNode::Kind::Negate, peek().position);
      ++pos_;
      n->children.push_back(unary());
      return n;
    }
    if (at_symbol('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Node power() {
    Node base = primary();
    if (!at_symbol('^')) return base;
    Node n = make(ExprNode::Kind::Pow, peek().position);
    ++pos_;
    if (peek().kind != Token::Kind::Number) fail("exponent must be a nonnegative integer");
    n->value = peek().value;
    ++pos_;
    n->children.push_back(std::move(base));
    return n;
  }

  Node primary() {
    const Token& tok = peek();
    if (tok.kind == Token::Kind::Number) {
      Node n = make(ExprNode::Kind::Number, tok.position);
      n->value = tok.value;
      ++pos_;
      return n;
    }
    if (tok.kind == Token::Kind::Name) {
      if (tok.text == "prod" || tok.text == "sum") return comprehension();
      Node n = make(ExprNode::Kind::Variable, tok.position);
      n->name = tok.text;
      ++pos_;
      return n;
    }
    if (at_symbol('(')) {
      ++pos_;
      Node n = expr();
      expect_symbol(')');
      return n;
    }
    fail(tok.kind == Token::Kind::End ? "unexpected end of input" : "unexpected '" + tok.text + "'");
  }

  Node comprehension() {
    const Token& head = peek();
    Node n = make(head.text == "prod" ? ExprNode::Kind::Prod : ExprNode::Kind::Sum, head.position);
    ++pos_;
    expect_symbol('(');
    if (peek().kind != Token::Kind::Name) fail("expected a bound variable name");
    n->name = peek().text;
    if (n->name == "x" || n->name == "y" || n->name == "t") fail("cannot bind '" + n->name + "'");
    ++pos_;
    if (peek().kind != Token::Kind::Name || peek().text != "in") fail("expected 'in'");
    ++pos_;
    if (peek().kind != Token::Kind::Name || peek().text != "k") fail("expected 'k'");
    ++pos_;
    expect_symbol(',');
    n->children.push_back(expr());
    expect_symbol(')');
    return n;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

using Env = std::map<std::string, gf::FieldElem>;

BiPoly eval(const ExprNode& n, const gf::Field& k, Env& env) {
  switch (n.kind) {
    case ExprNode::Kind::Number:
      return BiPoly::constant(k, k->from_int(static_cast<std::int64_t>(n.value % k->characteristic())));
    case ExprNode::Kind::Variable: {
      if (n.name == "x") return BiPoly::x(k);
      if (n.name == "y") return BiPoly::y(k);
      if (const auto it = env.find(n.name); it != env.end()) return BiPoly::constant(k, it->second);
      if (n.name == "t" && !k->is_prime_field()) return BiPoly::constant(k, k->generator());
      throw Error(ErrorKind::UnknownVariable, "unknown variable '" + n.name + "'", n.position);
    }
    case ExprNode::Kind::Negate:
      return -eval(*n.children[0], k, env);
    case ExprNode::Kind::Add:
      return eval(*n.children[0], k, env) + eval(*n.children[1], k, env);
    case ExprNode::Kind::Sub:
      return eval(*n.children[0], k, env) - eval(*n.children[1], k, env);
    case ExprNode::Kind::Mul:
      return eval(*n.children[0], k, env) * eval(*n.children[1], k, env);
    case ExprNode::Kind::Pow:
      if (n.value > 100000) throw Error(ErrorKind::SyntaxError, "exponent too large", n.position);
      return eval(*n.children[0], k, env).pow(static_cast<unsigned>(n.value));
    case ExprNode::Kind::Prod:
    case ExprNode::Kind::Sum: {
      const bool product = n.kind == ExprNode::Kind::Prod;
      BiPoly acc = BiPoly::constant(k, product ? k->one() : k->zero());
      const auto saved = env.find(n.name) != env.end() ? std::optional(env[n.name]) : std::nullopt;
      for (const auto a : k->elements()) {
        env[n.name] = a;
        const BiPoly body = eval(*n.children[0], k, env);
        acc = product ? acc * body : acc + body;
      }
      if (saved) env[n.name] = *saved;
      else env.erase(n.name);
      return acc;
    }
  }
  throw Error(ErrorKind::SyntaxError, "malformed expression", n.position);
}

void print(const ExprNode& n, std::string& out) {
  auto binary = [&](const char* op) {
    out += "(";
    print(*n.children[0], out);
    out += op;
    print(*n.children[1], out);
    out += ")";
  };
  switch (n.kind) {
    case ExprNode::Kind::Number: out += std::to_string(n.value); break;
    case ExprNode::Kind::Variable: out += n.name; break;
    case ExprNode::Kind::Negate:
      out += "(-";
      print(*n.children[0], out);
      out += ")";
      break;
    case ExprNode::Kind::Add: binary(" + "); break;
    case ExprNode::Kind::Sub: binary(" - "); break;
    case ExprNode::Kind::Mul: binary("*"); break;
    case ExprNode::Kind::Pow:
      out += "(";
      print(*n.children[0], out);
      out += ")^" + std::to_string(n.value);
      break;
    case ExprNode::Kind::Prod:
    case ExprNode::Kind::Sum:
      out += n.kind == ExprNode::Kind::Prod ? "prod(" : "sum(";
      out += n.name + " in k, ";
      print(*n.children[0], out);
      out += ")";
      break;
  }
}

}  // namespace

PolyExpr PolyExpr::parse(std::string_view text) {
  PolyExpr e;
  e.source_ = std::string(text);
  e.root_ = Parser(tokenize(text)).parse_all();
  return e;
}

BiPoly PolyExpr::evaluate(const gf::Field& field) const {
  Env env;
  return eval(*root_, field, env);
}

std::string PolyExpr::print() const {
  std::string out;
  cli::print(*root_, out);
  return out;
}

BiPoly parse_poly(std::string_view text, const gf::Field& field) {
  return PolyExpr::parse(text).evaluate(field);
}

gf::Field parse_field(std::string_view text) {
  auto read = [&](std::string_view part, std::size_t offset) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
      throw Error(ErrorKind::SyntaxError, "malformed field '" + std::string(text) + "'", offset);
    return v;
  };
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) {
    // A plain order q = p^e is accepted as well.
    const std::uint64_t q = read(text, 0);
    const auto factors = q >= 2 ? gf::factorize(q) : decltype(gf::factorize(q)){};
    if (factors.size() == 1 && factors[0].second > 1)
      return gf::make_field(factors[0].first, factors[0].second);
    return gf::make_prime_field(q);
  }
  const std::uint64_t p = read(text.substr(0, caret), 0);
  const std::uint64_t e = read(text.substr(caret + 1), caret + 1);
  if (e == 0 || e > 64) throw Error(ErrorKind::InvalidArgument, "bad extension degree");
  return gf::make_field(p, static_cast<unsigned>(e));
}

}  // namespace gll::cli
