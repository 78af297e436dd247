#pragma once

// Divisibility, Euclidean division, gcd/lcm with Bezout certificates,
// canonical associates and unique factorization.
//
// Everything except divides() requires one of the Euclidean rings Z, Z[i]
// and Z[j]; Z[zeta_p] operations throw UnsupportedRing (or
// InfiniteUnitGroup where the unit group is scanned).

#include <optional>
#include <utility>
#include <vector>

#include "starring/ring.hpp"

namespace starring {

// Witness c with a * c = b. For a = 0 the witness exists iff b = 0.
std::optional<Element> divides(const Element& a, const Element& b);

// Same contract as divides(), always through a rational linear solve of the
// multiplication-by-a matrix.
std::optional<Element> divides_by_linear_solve(const Element& a, const Element& b);

// b / a; throws Internal when a does not divide b.
Element exact_quotient(const Element& b, const Element& a);

// The unique unit v with b = a * v, if any.
std::optional<Element> associates(const Element& a, const Element& b);

struct DivisionResult {
  Element quotient;
  Element remainder;
};

// a = b * q + r with norm_sq(r) < norm_sq(b). q rounds each coefficient of
// a * conj(b) / norm_sq(b) to the nearest integer, ties to even.
DivisionResult euclid_div(const Element& a, const Element& b);

// Nearest integer to num / den (den > 0), ties to even.
Integer round_half_even(const Integer& num, const Integer& den);

class BezoutCertificate {
 public:
  // Checks a*x + b*y = g and g | a, g | b; throws Internal otherwise.
  static BezoutCertificate verified(const Element& a, const Element& b, Element g, Element x,
                                    Element y);

  const Element& g() const noexcept { return g_; }
  const Element& x() const noexcept { return x_; }
  const Element& y() const noexcept { return y_; }

 private:
  BezoutCertificate(Element g, Element x, Element y)
      : g_(std::move(g)), x_(std::move(x)), y_(std::move(y)) {}

  Element g_;
  Element x_;
  Element y_;
};

// Errors: BothZero, UnsupportedRing.
BezoutCertificate gcd_bezout(const Element& a, const Element& b);
Element gcd(const Element& a, const Element& b);

// Errors: ZeroElement, UnsupportedRing.
Element lcm(const Element& a, const Element& b);

struct Associate {
  Element canonical;
  Element unit;  // canonical = x * unit
};

// Among the associates of x, the one with the largest real part, ties going
// to the larger imaginary part. In Z this is abs(x).
Associate canonical_associate(const Element& x);

bool is_canonical(const Element& x);

bool is_irreducible(const Element& p);

class Factorization {
 public:
  using Entry = std::pair<Element, unsigned>;

  Factorization(Element unit, std::vector<Entry> factors)
      : unit_(std::move(unit)), factors_(std::move(factors)) {}

  const Element& unit() const noexcept { return unit_; }
  const std::vector<Entry>& factors() const noexcept { return factors_; }

  // unit * prod p^e
  Element expand() const;

 private:
  Element unit_;
  std::vector<Entry> factors_;
};

// Factors are canonical irreducibles sorted by (norm_sq, coefficients).
// Errors: ZeroElement, UnsupportedRing.
Factorization factor(const Element& x);

// gcd(a, b) = 1 and a | b*c imply a | c.
bool euclid_lemma_check(const Element& a, const Element& b, const Element& c);

// Every element with norm_sq equal to m.
std::vector<Element> elements_of_norm(const RingDescriptor& ring, const Integer& m);

// Ascending (prime, exponent) pairs of |n| by trial division; n != 0.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

// (norm_sq, coefficients) order used for factor lists.
bool factor_order_less(const Element& a, const Element& b);

void require_euclidean(const RingDescriptor& ring);

}  // namespace starring
