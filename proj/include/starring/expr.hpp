#pragma once

// Ring-element expressions for the command line.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' unary) | juxtaposed)*      3i, 2(1+i), (1+i)(1-i)
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?                   right associative
//   primary := INTEGER | 'i' | 'j' | 'zeta' '(' INTEGER ',' INTEGER ')' | '(' expr ')'
//
// so ^ binds tighter than unary minus, which binds tighter than products.
// There is no division.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "starring/ring.hpp"

namespace starring::expr {

struct Expr {
  enum class Kind { Integer, Symbol, Zeta, Neg, Add, Sub, Mul, Pow };

  Kind kind = Kind::Integer;
  Integer literal;            // Integer
  std::string name;           // Symbol: "i" or "j"
  std::uint64_t zeta_n = 0;   // Zeta
  std::uint64_t zeta_k = 0;
  std::vector<Expr> args;     // operands, left to right

  static Expr integer(Integer value);
  static Expr symbol(std::string name);
  static Expr zeta(std::uint64_t n, std::uint64_t k);
  static Expr unary(Kind kind, Expr operand);
  static Expr binary(Kind kind, Expr lhs, Expr rhs);

  friend bool operator==(const Expr&, const Expr&) = default;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

// Throws SyntaxError with the byte offset of the first bad token.
Expr parse(std::string_view text);

// Text that parses back to the same tree.
std::string render(const Expr& e);

inline constexpr unsigned long kMaxExponent = 1UL << 16;

// Errors: SymbolNotInRing (i outside Z[i], j outside Z[j], zeta(n, k) with n
// not the ring's root order), NegativeExponent, InvalidInput for exponents
// that are not small nonnegative integers.
Element evaluate(const Expr& e, const RingDescriptor& ring);

Element parse_element(std::string_view text, const RingDescriptor& ring);

}  // namespace starring::expr
