#pragma once

// Conjugation, magnitude and unit part.
//
// The star involution is complex conjugation e_k -> e_{n-k}. The magnitude
// N(x) satisfies N(x)^2 = x * conj(x); it is irrational in general
// (N(1+i) = sqrt 2), so exact code works with N(x)^2 only and the float
// magnitude is for display.

#include <complex>
#include <optional>
#include <vector>

#include "starring/ring.hpp"

namespace starring {

struct NormSquare {
  Integer value;

  friend bool operator==(const NormSquare&, const NormSquare&) = default;
};

// u(x) = x / N(x), held exactly as the pair (x, N(x)^2).
struct UnitPart {
  Element numerator;
  NormSquare norm_square;

  std::complex<double> embed() const;
};

Element conj(const Element& x);

// x * conj(x) as a ring element. Always fixed by conj; rational in Z, Z[i]
// and Z[j], but generally not in Z[zeta_p] for p >= 5.
Element star_product(const Element& x);

// Errors: NonRationalNorm in Z[zeta_p] when x * conj(x) is not a rational
// integer; InternalNonReal if that happens in a ring of rank <= 2.
NormSquare norm_sq(const Element& x);

double magnitude_approx(const Element& x);

// Errors: ZeroElement for x = 0, plus those of norm_sq.
UnitPart unit_part(const Element& x);

// 2 Re(x) = x + conj(x) and 2i Im(x) = x - conj(x), kept integral.
Element re2(const Element& x);
Element im2i(const Element& x);
double re_approx(const Element& x);
double im_approx(const Element& x);

// Inverse when x is a unit. In Z, Z[i] and Z[j] this is exactly the case
// norm_sq(x) = 1 and the inverse is conj(x). In Z[zeta_p] units are detected
// through the field norm (product of all Galois conjugates), which also finds
// units of magnitude != 1 such as 1 + zeta.
std::optional<Element> unit_inverse(const Element& x);
bool is_unit(const Element& x);

// zeta -> zeta^a; a must be prime to the root order.
Element galois_conjugate(const Element& x, unsigned a);

// Product of the Galois conjugates of x: x itself in Z, norm_sq(x) in Z[i]
// and Z[j], the absolute norm in Z[zeta_p].
Integer field_norm(const Element& x);

// Order: Z {1, -1}; Z[i] {1, -1, i, -i}; Z[j] {1, -1, j, -j, conj j, -conj j}.
// Errors: InfiniteUnitGroup for Z[zeta_p].
std::vector<Element> unit_group(const RingDescriptor& ring);

}  // namespace starring
