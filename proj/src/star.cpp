#include "starring/star.hpp"

#include <cmath>

namespace starring {

Element conj(const Element& x) {
  const RingDescriptor& ring = x.ring();
  const std::size_t n = ring.root_order();
  std::vector<Integer> formal(n, Integer(0));
  const auto c = x.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) formal[(n - k) % n] = c[k];
  return canonicalize(ring, formal);
}

Element star_product(const Element& x) { return x * conj(x); }

NormSquare norm_sq(const Element& x) {
  Element p = star_product(x);
  if (!p.is_rational()) {
    if (x.ring().kind() == RingKind::CyclotomicPrime) {
      throw Error(ErrorCode::NonRationalNorm,
                  "x*conj(x) = " + p.to_string() + " is not a rational integer");
    }
    throw Error(ErrorCode::InternalNonReal, "x*conj(x) = " + p.to_string() + " is not real");
  }
  return NormSquare{p[0]};
}

double magnitude_approx(const Element& x) {
  Element p = star_product(x);
  if (p.is_rational()) return std::sqrt(p[0].get_d());
  // Embedding x x* cancels badly when |x| is small against its coefficients.
  return std::abs(x.embed());
}

std::complex<double> UnitPart::embed() const {
  return numerator.embed() / std::sqrt(norm_square.value.get_d());
}

UnitPart unit_part(const Element& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "unit part is undefined at 0");
  return UnitPart{x, norm_sq(x)};
}

Element re2(const Element& x) { return x + conj(x); }

Element im2i(const Element& x) { return x - conj(x); }

double re_approx(const Element& x) { return x.embed().real(); }

double im_approx(const Element& x) { return x.embed().imag(); }

Element galois_conjugate(const Element& x, unsigned a) {
  const RingDescriptor& ring = x.ring();
  const std::size_t n = ring.root_order();
  std::vector<Integer> formal(n, Integer(0));
  const auto c = x.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) formal[(k * a) % n] += c[k];
  return canonicalize(ring, formal);
}

namespace {

// Exponents a in (Z/n)^* other than 1, i.e. the nontrivial automorphisms.
std::vector<unsigned> other_automorphisms(const RingDescriptor& ring) {
  std::vector<unsigned> out;
  switch (ring.kind()) {
    case RingKind::RationalIntegers: break;
    case RingKind::Gaussian: out = {3}; break;
    case RingKind::Eisenstein: out = {2}; break;
    case RingKind::CyclotomicPrime:
      for (unsigned a = 2; a < ring.root_order(); ++a) out.push_back(a);
      break;
  }
  return out;
}

}  // namespace

Integer field_norm(const Element& x) {
  Element p = x;
  for (unsigned a : other_automorphisms(x.ring())) p *= galois_conjugate(x, a);
  if (!p.is_rational()) throw Error(ErrorCode::Internal, "field norm is not rational");
  return p[0];
}

std::optional<Element> unit_inverse(const Element& x) {
  if (x.is_zero()) return std::nullopt;
  Element p = star_product(x);
  if (p == Element::one(x.ring())) return conj(x);
  if (x.ring().kind() != RingKind::CyclotomicPrime) return std::nullopt;

  Element cofactor = Element::one(x.ring());
  for (unsigned a : other_automorphisms(x.ring())) cofactor *= galois_conjugate(x, a);
  Element total = x * cofactor;
  if (total == Element::one(x.ring())) return cofactor;
  if (total == -Element::one(x.ring())) return -cofactor;
  return std::nullopt;
}

bool is_unit(const Element& x) { return unit_inverse(x).has_value(); }

std::vector<Element> unit_group(const RingDescriptor& ring) {
  const Element one = Element::one(ring);
  switch (ring.kind()) {
    case RingKind::RationalIntegers:
      return {one, -one};
    case RingKind::Gaussian: {
      const Element i = Element::root(ring, 1);
      return {one, -one, i, -i};
    }
    case RingKind::Eisenstein: {
      const Element j = Element::root(ring, 1);
      const Element jstar = conj(j);
      return {one, -one, j, -j, jstar, -jstar};
    }
    case RingKind::CyclotomicPrime:
      break;
  }
  throw Error(ErrorCode::InfiniteUnitGroup,
              "the unit group of " + ring.name() + " is infinite");
}

}  // namespace starring
