#pragma once

// Principal ideals and residue arithmetic in A / zA for the Euclidean rings.

#include <string_view>
#include <vector>

#include "starring/ring.hpp"

namespace starring {

class PrincipalIdeal {
 public:
  // The generator is replaced by its canonical associate; 0 gives the zero
  // ideal.
  explicit PrincipalIdeal(const Element& generator);

  const Element& generator() const noexcept { return generator_; }
  const RingDescriptor& ring() const noexcept { return generator_.ring(); }
  bool is_zero() const { return generator_.is_zero(); }
  bool is_whole_ring() const { return generator_ == Element::one(ring()); }

  friend bool operator==(const PrincipalIdeal&, const PrincipalIdeal&) = default;

 private:
  Element generator_;
};

PrincipalIdeal ideal(const Element& generator);

bool contains(const PrincipalIdeal& ideal, const Element& x);

// gcd of the generators. Errors: BothZero, UnsupportedRing.
PrincipalIdeal ideal_sum(const PrincipalIdeal& a, const PrincipalIdeal& b);
// lcm of the generators. Errors: ZeroElement, UnsupportedRing.
PrincipalIdeal ideal_intersect(const PrincipalIdeal& a, const PrincipalIdeal& b);
PrincipalIdeal ideal_product(const PrincipalIdeal& a, const PrincipalIdeal& b);

enum class QuotientKind { Entire, Field, NotEntire, WholeRingCollapse };

std::string_view to_string(QuotientKind kind);

// 0 -> Entire, unit -> WholeRingCollapse, irreducible -> Field, otherwise
// NotEntire.
QuotientKind quotient_kind(const Element& z);

// Fixed representative of x + zA: a Euclidean remainder, chosen as the
// lexicographically greatest coefficient vector among the congruent
// elements of norm_sq below norm_sq(z).
Element reduce_mod(const Element& x, const Element& z);

class Residue {
 public:
  // Errors: DivisionByZero for the zero modulus.
  Residue(const Element& x, const PrincipalIdeal& modulus);

  const Element& representative() const noexcept { return representative_; }
  const PrincipalIdeal& modulus() const noexcept { return modulus_; }

  Residue operator-() const;
  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);

  // Via a Bezout certificate 1 = x r + w z. Errors: NotInvertible.
  Residue inverse() const;

  bool is_zero() const { return representative_.is_zero(); }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  Element representative_;
  PrincipalIdeal modulus_;
};

inline constexpr long kDefaultResidueBound = 10000;

// All classes of A / zA, sorted by representative. z must be a nonzero
// non-unit with norm_sq(z) <= bound.
// Errors: ZeroElement, EnumerationBoundExceeded, UnsupportedRing.
std::vector<Residue> residues(const Element& z, const Integer& bound = kDefaultResidueBound);

}  // namespace starring
