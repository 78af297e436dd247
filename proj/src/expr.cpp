#include "starring/expr.hpp"

#include <cctype>
#include <optional>

namespace starring::expr {

Expr Expr::integer(Integer value) {
  Expr e;
  e.kind = Kind::Integer;
  e.literal = std::move(value);
  return e;
}

Expr Expr::symbol(std::string name) {
  Expr e;
  e.kind = Kind::Symbol;
  e.name = std::move(name);
  return e;
}

Expr Expr::zeta(std::uint64_t n, std::uint64_t k) {
  Expr e;
  e.kind = Kind::Zeta;
  e.zeta_n = n;
  e.zeta_k = k;
  return e;
}

Expr Expr::unary(Kind kind, Expr operand) {
  Expr e;
  e.kind = kind;
  e.args.push_back(std::move(operand));
  return e;
}

Expr Expr::binary(Kind kind, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = kind;
  e.args.push_back(std::move(lhs));
  e.args.push_back(std::move(rhs));
  return e;
}

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected,
                         const std::string& found)
    : Error(ErrorCode::SyntaxError, "offset " + std::to_string(offset) + ": expected " +
                                        join(expected) + ", found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

struct Token {
  enum class Type { Number, Ident, Punct, End };
  Type type;
  std::string text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Type::Number, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Type::Ident, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::string_view("+-*^(),").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Token::Type::Punct, std::string(1, static_cast<char>(c)), i});
      ++i;
    } else {
      throw SyntaxError(i, {"integer", "symbol", "operator"}, "'" + std::string(1, static_cast<char>(c)) + "'");
    }
  }
  out.push_back({Token::Type::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  Expr parse_all() {
    Expr e = expression();
    if (peek().type != Token::Type::End) fail({"operator", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  bool is_punct(const char* p) const {
    return peek().type == Token::Type::Punct && peek().text == p;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw SyntaxError(t.offset, std::move(expected),
                      t.type == Token::Type::End ? "end of input" : "'" + t.text + "'");
  }

  void expect(const char* p) {
    if (!is_punct(p)) fail({std::string("'") + p + "'"});
    ++pos_;
  }

  bool starts_primary() const {
    return peek().type == Token::Type::Ident || is_punct("(");
  }

  Expr expression() {
    Expr lhs = term();
    while (is_punct("+") || is_punct("-")) {
      const auto kind = is_punct("+") ? Expr::Kind::Add : Expr::Kind::Sub;
      ++pos_;
      lhs = Expr::binary(kind, std::move(lhs), term());
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    while (true) {
      if (is_punct("*")) {
        ++pos_;
      } else if (!starts_primary()) {
        break;
      }
      lhs = Expr::binary(Expr::Kind::Mul, std::move(lhs), unary());
    }
    return lhs;
  }

  Expr unary() {
    if (is_punct("-")) {
      ++pos_;
      return Expr::unary(Expr::Kind::Neg, unary());
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (is_punct("^")) {
      ++pos_;
      return Expr::binary(Expr::Kind::Pow, std::move(base), unary());
    }
    return base;
  }

  std::uint64_t small_integer() {
    if (peek().type != Token::Type::Number) fail({"integer"});
    const Token& t = peek();
    if (t.text.size() > 9) fail({"integer below 10^9"});
    ++pos_;
    return std::stoull(t.text);
  }

  Expr primary() {
    const Token& t = peek();
    if (t.type == Token::Type::Number) {
      ++pos_;
      return Expr::integer(Integer(t.text, 10));
    }
    if (t.type == Token::Type::Ident) {
      if (t.text == "i" || t.text == "j") {
        ++pos_;
        return Expr::symbol(t.text);
      }
      if (t.text == "zeta") {
        ++pos_;
        expect("(");
        const std::uint64_t n = small_integer();
        expect(",");
        const std::uint64_t k = small_integer();
        expect(")");
        if (n == 0) throw SyntaxError(t.offset, {"zeta order >= 1"}, "zeta(0, ...)");
        return Expr::zeta(n, k);
      }
      fail({"integer", "'i'", "'j'", "'zeta'", "'('"});
    }
    if (is_punct("(")) {
      ++pos_;
      Expr inner = expression();
      expect(")");
      return inner;
    }
    fail({"integer", "'i'", "'j'", "'zeta'", "'('", "'-'"});
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

bool is_atom(const Expr& e) {
  return e.kind == Expr::Kind::Integer || e.kind == Expr::Kind::Symbol ||
         e.kind == Expr::Kind::Zeta;
}

bool is_sum(const Expr& e) { return e.kind == Expr::Kind::Add || e.kind == Expr::Kind::Sub; }

std::string parens(const std::string& s) { return "(" + s + ")"; }

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Integer: return e.literal.get_str();
    case Expr::Kind::Symbol: return e.name;
    case Expr::Kind::Zeta:
      return "zeta(" + std::to_string(e.zeta_n) + "," + std::to_string(e.zeta_k) + ")";
    case Expr::Kind::Neg: {
      const Expr& x = e.args[0];
      const std::string inner = render(x);
      return "-" + (is_sum(x) || x.kind == Expr::Kind::Mul ? parens(inner) : inner);
    }
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
      const std::string rhs = render(e.args[1]);
      return render(e.args[0]) + (e.kind == Expr::Kind::Add ? "+" : "-") +
             (is_sum(e.args[1]) ? parens(rhs) : rhs);
    }
    case Expr::Kind::Mul: {
      const std::string lhs = render(e.args[0]);
      const std::string rhs = render(e.args[1]);
      const bool wrap_rhs = is_sum(e.args[1]) || e.args[1].kind == Expr::Kind::Mul;
      return (is_sum(e.args[0]) ? parens(lhs) : lhs) + "*" + (wrap_rhs ? parens(rhs) : rhs);
    }
    case Expr::Kind::Pow: {
      const std::string base = render(e.args[0]);
      const std::string exponent = render(e.args[1]);
      const Expr& x = e.args[1];
      const bool wrap_exponent = is_sum(x) || x.kind == Expr::Kind::Mul;
      return (is_atom(e.args[0]) ? base : parens(base)) + "^" +
             (wrap_exponent ? parens(exponent) : exponent);
    }
  }
  return "?";
}

Element evaluate(const Expr& e, const RingDescriptor& ring) {
  switch (e.kind) {
    case Expr::Kind::Integer: return Element::integer(ring, e.literal);
    case Expr::Kind::Symbol: {
      const bool ok = (e.name == "i" && ring.kind() == RingKind::Gaussian) ||
                      (e.name == "j" && ring.kind() == RingKind::Eisenstein);
      if (!ok) {
        throw Error(ErrorCode::SymbolNotInRing, "symbol " + e.name + " is not in " + ring.name());
      }
      return Element::root(ring, 1);
    }
    case Expr::Kind::Zeta:
      if (e.zeta_n != ring.root_order()) {
        throw Error(ErrorCode::SymbolNotInRing,
                    "zeta(" + std::to_string(e.zeta_n) + ", ...) is not in " + ring.name() +
                        " (root order " + std::to_string(ring.root_order()) + ")");
      }
      return Element::root(ring, static_cast<std::int64_t>(e.zeta_k % e.zeta_n));
    case Expr::Kind::Neg: return -evaluate(e.args[0], ring);
    case Expr::Kind::Add: return evaluate(e.args[0], ring) + evaluate(e.args[1], ring);
    case Expr::Kind::Sub: return evaluate(e.args[0], ring) - evaluate(e.args[1], ring);
    case Expr::Kind::Mul: return evaluate(e.args[0], ring) * evaluate(e.args[1], ring);
    case Expr::Kind::Pow: {
      const Element exponent = evaluate(e.args[1], ring);
      if (!exponent.is_rational()) {
        throw Error(ErrorCode::InvalidInput, "exponent " + exponent.to_string() + " is not an integer");
      }
      if (sgn(exponent[0]) < 0) {
        throw Error(ErrorCode::NegativeExponent, "negative exponent " + exponent.to_string());
      }
      if (exponent[0] > kMaxExponent) {
        throw Error(ErrorCode::InvalidInput, "exponent " + exponent.to_string() + " is too large");
      }
      return pow(evaluate(e.args[0], ring), exponent[0].get_ui());
    }
  }
  throw Error(ErrorCode::Internal, "unknown expression node");
}

Element parse_element(std::string_view text, const RingDescriptor& ring) {
  return evaluate(parse(text), ring);
}

}  // namespace starring::expr
