#include "starring/ideals.hpp"

#include <algorithm>
#include <map>

#include "starring/arith.hpp"
#include "starring/star.hpp"

namespace starring {

namespace {

Element normalize_generator(const Element& g) {
  if (g.is_zero()) return g;
  return canonical_associate(g).canonical;
}

void require_same_modulus(const Residue& a, const Residue& b) {
  if (!(a.modulus() == b.modulus())) {
    throw Error(ErrorCode::ModulusMismatch,
                "residues modulo " + a.modulus().generator().to_string() + " and " +
                    b.modulus().generator().to_string());
  }
}

// All coefficient vectors of the given rank with entries in [-r, r].
std::vector<Element> coefficient_box(const RingDescriptor& ring, long r) {
  std::vector<Element> out;
  const std::size_t rank = ring.rank();
  std::vector<long> c(rank, -r);
  while (true) {
    std::vector<Integer> coeffs(c.begin(), c.end());
    out.emplace_back(ring, std::move(coeffs));
    std::size_t k = 0;
    while (k < rank && c[k] == r) c[k++] = -r;
    if (k == rank) break;
    ++c[k];
  }
  return out;
}

// Nonzero t with norm_sq(t) < 4. Two remainders modulo z differ by such a z*t.
const std::vector<Element>& shift_multipliers(const RingDescriptor& ring) {
  static const auto table = [] {
    std::map<RingKind, std::vector<Element>> out;
    for (const RingDescriptor& r :
         {RingDescriptor::integers(), RingDescriptor::gaussian(), RingDescriptor::eisenstein()}) {
      for (const Element& t : coefficient_box(r, 2)) {
        if (!t.is_zero() && norm_sq(t).value < 4) out[r.kind()].push_back(t);
      }
    }
    return out;
  }();
  return table.at(ring.kind());
}

}  // namespace

PrincipalIdeal::PrincipalIdeal(const Element& generator)
    : generator_(normalize_generator(generator)) {}

PrincipalIdeal ideal(const Element& generator) { return PrincipalIdeal(generator); }

bool contains(const PrincipalIdeal& ideal, const Element& x) {
  require_same_ring(ideal.generator(), x);
  return divides(ideal.generator(), x).has_value();
}

PrincipalIdeal ideal_sum(const PrincipalIdeal& a, const PrincipalIdeal& b) {
  return PrincipalIdeal(gcd(a.generator(), b.generator()));
}

PrincipalIdeal ideal_intersect(const PrincipalIdeal& a, const PrincipalIdeal& b) {
  return PrincipalIdeal(lcm(a.generator(), b.generator()));
}

PrincipalIdeal ideal_product(const PrincipalIdeal& a, const PrincipalIdeal& b) {
  return PrincipalIdeal(a.generator() * b.generator());
}

std::string_view to_string(QuotientKind kind) {
  switch (kind) {
    case QuotientKind::Entire: return "Entire";
    case QuotientKind::Field: return "Field";
    case QuotientKind::NotEntire: return "NotEntire";
    case QuotientKind::WholeRingCollapse: return "WholeRingCollapse";
  }
  return "?";
}

QuotientKind quotient_kind(const Element& z) {
  require_euclidean(z.ring());
  if (z.is_zero()) return QuotientKind::Entire;
  if (is_unit(z)) return QuotientKind::WholeRingCollapse;
  if (is_irreducible(z)) return QuotientKind::Field;
  return QuotientKind::NotEntire;
}

Element reduce_mod(const Element& x, const Element& z) {
  const Element r = euclid_div(x, z).remainder;
  const Integer bound = norm_sq(z).value;
  Element best = r;
  for (const Element& t : shift_multipliers(x.ring())) {
    Element candidate = r - z * t;
    if (norm_sq(candidate).value < bound && lex_compare(candidate, best) > 0) {
      best = std::move(candidate);
    }
  }
  return best;
}

Residue::Residue(const Element& x, const PrincipalIdeal& modulus)
    : representative_(x), modulus_(modulus) {
  require_same_ring(x, modulus.generator());
  if (modulus.is_zero()) throw Error(ErrorCode::DivisionByZero, "residues modulo 0");
  representative_ = reduce_mod(x, modulus.generator());
}

Residue Residue::operator-() const { return Residue(-representative_, modulus_); }

Residue operator+(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(a.representative_ + b.representative_, a.modulus_);
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(a.representative_ - b.representative_, a.modulus_);
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(a.representative_ * b.representative_, a.modulus_);
}

Residue Residue::inverse() const {
  const Element& z = modulus_.generator();
  if (!representative_.is_zero()) {
    BezoutCertificate cert = gcd_bezout(representative_, z);
    if (cert.g() == Element::one(z.ring())) return Residue(cert.x(), modulus_);
  }
  throw Error(ErrorCode::NotInvertible,
              representative_.to_string() + " is not invertible modulo " + z.to_string());
}

std::vector<Residue> residues(const Element& z, const Integer& bound) {
  require_euclidean(z.ring());
  if (z.is_zero()) throw Error(ErrorCode::ZeroElement, "A/0A is not enumerable");
  const Integer n = norm_sq(z).value;
  if (n > bound) {
    throw Error(ErrorCode::EnumerationBoundExceeded,
                "norm_sq(" + z.to_string() + ") = " + n.get_str() + " exceeds bound " +
                    bound.get_str());
  }
  if (is_unit(z)) {
    throw Error(ErrorCode::InvalidInput, "modulus " + z.to_string() + " is a unit");
  }
  // Every class holds an element of norm_sq < n, and such elements have
  // coefficients bounded by sqrt(4n/3).
  const Integer radius = sqrt(Integer(4 * n / 3)) + 1;
  const PrincipalIdeal modulus(z);
  std::map<std::vector<Integer>, Residue> classes;
  for (const Element& x : coefficient_box(z.ring(), radius.get_si())) {
    if (norm_sq(x).value >= n) continue;
    Residue r(x, modulus);
    std::vector<Integer> key(r.representative().coeffs().begin(),
                             r.representative().coeffs().end());
    classes.try_emplace(std::move(key), std::move(r));
  }
  std::vector<Residue> out;
  out.reserve(classes.size());
  for (auto& [key, r] : classes) out.push_back(std::move(r));
  return out;
}

}  // namespace starring
