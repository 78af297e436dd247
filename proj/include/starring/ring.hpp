#pragma once

// Exact elements of the supported entire rings: Z, Z[i], Z[j] and Z[zeta_p]
// for odd primes p >= 5.
//
// Every ring is spanned by the powers e_k = zeta^k of a primitive root of
// unity of order n (the ring's root order). Elements are stored over a fixed
// canonical basis:
//
//   Z            n = 1   {1}
//   Z[i]         n = 4   {1, i}             i^2 = -1
//   Z[j]         n = 3   {1, j}             j^2 = -1 - j
//   Z[zeta_p]    n = p   {1, ..., zeta^(p-2)} zeta^(p-1) = -(1 + ... + zeta^(p-2))
//
// Products are formed over the full index set {0, ..., n-1} by exponent
// addition mod n and then folded back onto the canonical basis, so two
// elements are equal iff their coefficient vectors are equal.

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "starring/error.hpp"

namespace starring {

using Integer = mpz_class;
using Rational = mpq_class;

enum class RingKind { RationalIntegers, Gaussian, Eisenstein, CyclotomicPrime };

bool is_prime(std::uint64_t n);

class RingDescriptor {
 public:
  static RingDescriptor integers() { return RingDescriptor(RingKind::RationalIntegers, 1); }
  static RingDescriptor gaussian() { return RingDescriptor(RingKind::Gaussian, 4); }
  static RingDescriptor eisenstein() { return RingDescriptor(RingKind::Eisenstein, 3); }
  // Throws NonPrimeOrder unless p is a prime >= 5.
  static RingDescriptor cyclotomic(unsigned p);

  // Accepts "z", "gaussian", "eisenstein" and "cyclo<p>".
  static RingDescriptor parse(std::string_view name);

  RingKind kind() const noexcept { return kind_; }
  unsigned root_order() const noexcept { return root_order_; }
  std::size_t rank() const noexcept;

  // Z, Z[i] and Z[j]: nearest-integer division gives a Euclidean algorithm
  // and the unit group is finite.
  bool is_euclidean() const noexcept { return kind_ != RingKind::CyclotomicPrime; }

  std::string name() const;

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;

 private:
  RingDescriptor(RingKind kind, unsigned root_order) : kind_(kind), root_order_(root_order) {}

  RingKind kind_;
  unsigned root_order_;
};

// Errors: MissingParameter when p is absent for CyclotomicPrime,
// NonPrimeOrder when p is composite or below 5.
RingDescriptor make_ring(RingKind kind, std::optional<unsigned> p = std::nullopt);

class Element {
 public:
  // coeffs.size() must equal ring.rank().
  Element(RingDescriptor ring, std::vector<Integer> coeffs);

  static Element zero(const RingDescriptor& ring);
  static Element one(const RingDescriptor& ring);
  static Element integer(const RingDescriptor& ring, const Integer& value);
  // e_k = zeta^k in canonical form; k is taken mod the root order.
  static Element root(const RingDescriptor& ring, std::int64_t k);

  const RingDescriptor& ring() const noexcept { return ring_; }
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }
  const Integer& operator[](std::size_t k) const { return coeffs_[k]; }

  bool is_zero() const;
  // True when every coefficient except the constant one vanishes.
  bool is_rational() const;

  // Image under zeta -> exp(2 pi i / n).
  std::complex<double> embed() const;

  // Reparseable text form: "3+4i", "-1-j", "2-zeta(5,1)+3*zeta(5,3)".
  std::string to_string() const;

  Element operator-() const;
  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Element& rhs);

  friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
  friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
  friend Element operator*(const Element& lhs, const Element& rhs);
  friend Element operator*(const Integer& k, const Element& x);

  friend bool operator==(const Element& a, const Element& b);

 private:
  RingDescriptor ring_;
  std::vector<Integer> coeffs_;
};

// Folds a formal combination over {e_0, e_1, ...} (any length, indices read
// mod the root order) onto the canonical basis.
Element canonicalize(const RingDescriptor& ring, std::span<const Integer> formal);

Element add(const Element& x, const Element& y);
Element mul(const Element& x, const Element& y);
Element pow(const Element& x, unsigned long exponent);

// Lexicographic order on coefficient vectors (constant term first). Both
// elements must belong to the same ring.
std::strong_ordering lex_compare(const Element& a, const Element& b);

// exp(2 pi i k / n), exact on the quarter turns.
std::complex<double> root_embedding(unsigned n, std::int64_t k);

void require_same_ring(const Element& a, const Element& b);

}  // namespace starring
