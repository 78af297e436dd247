#include "starring/arith.hpp"

#include <algorithm>

#include "starring/star.hpp"

namespace starring {

void require_euclidean(const RingDescriptor& ring) {
  if (!ring.is_euclidean()) {
    throw Error(ErrorCode::UnsupportedRing, ring.name() + " is not handled as a Euclidean ring");
  }
}

std::optional<Element> divides_by_linear_solve(const Element& a, const Element& b) {
  require_same_ring(a, b);
  const RingDescriptor& ring = a.ring();
  if (a.is_zero()) {
    if (b.is_zero()) return Element::zero(ring);
    return std::nullopt;
  }
  const std::size_t r = ring.rank();
  // Augmented system [M | b], column k of M holding a * e_k.
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(r + 1));
  for (std::size_t k = 0; k < r; ++k) {
    const Element col = a * Element::root(ring, static_cast<std::int64_t>(k));
    for (std::size_t row = 0; row < r; ++row) m[row][k] = col[row];
  }
  for (std::size_t row = 0; row < r; ++row) m[row][r] = b[row];

  for (std::size_t col = 0; col < r; ++col) {
    std::size_t pivot = col;
    while (pivot < r && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == r) throw Error(ErrorCode::Internal, "multiplication map is singular");
    std::swap(m[pivot], m[col]);
    for (std::size_t row = 0; row < r; ++row) {
      if (row == col || sgn(m[row][col]) == 0) continue;
      const Rational f = m[row][col] / m[col][col];
      for (std::size_t k = col; k <= r; ++k) m[row][k] -= f * m[col][k];
    }
  }

  std::vector<Integer> c(r);
  for (std::size_t row = 0; row < r; ++row) {
    Rational v = m[row][r] / m[row][row];
    v.canonicalize();
    if (v.get_den() != 1) return std::nullopt;
    c[row] = v.get_num();
  }
  return Element(ring, std::move(c));
}

std::optional<Element> divides(const Element& a, const Element& b) {
  require_same_ring(a, b);
  const RingDescriptor& ring = a.ring();
  if (a.is_zero()) {
    if (b.is_zero()) return Element::zero(ring);
    return std::nullopt;
  }
  if (!ring.is_euclidean()) return divides_by_linear_solve(a, b);

  // b / a = b * conj(a) / norm_sq(a)
  const Integer n = norm_sq(a).value;
  const Element t = b * conj(a);
  std::vector<Integer> c(ring.rank());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!mpz_divisible_p(t[k].get_mpz_t(), n.get_mpz_t())) return std::nullopt;
    mpz_divexact(c[k].get_mpz_t(), t[k].get_mpz_t(), n.get_mpz_t());
  }
  return Element(ring, std::move(c));
}

Element exact_quotient(const Element& b, const Element& a) {
  auto q = divides(a, b);
  if (!q) throw Error(ErrorCode::Internal, a.to_string() + " does not divide " + b.to_string());
  return *std::move(q);
}

std::optional<Element> associates(const Element& a, const Element& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) {
    throw Error(ErrorCode::ZeroElement, "associates() needs nonzero arguments");
  }
  std::optional<Element> found;
  for (const Element& v : unit_group(a.ring())) {
    if (a * v == b) {
      if (found) throw Error(ErrorCode::Internal, "associating unit is not unique");
      found = v;
    }
  }
  return found;
}

Integer round_half_even(const Integer& num, const Integer& den) {
  Integer q;
  Integer r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const int c = cmp(Integer(2 * r), den);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
  return q;
}

DivisionResult euclid_div(const Element& a, const Element& b) {
  require_same_ring(a, b);
  require_euclidean(a.ring());
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "Euclidean division by zero");
  const Integer n = norm_sq(b).value;
  const Element t = a * conj(b);
  std::vector<Integer> q(a.ring().rank());
  for (std::size_t k = 0; k < q.size(); ++k) q[k] = round_half_even(t[k], n);
  Element quotient(a.ring(), std::move(q));
  Element remainder = a - b * quotient;
  return DivisionResult{std::move(quotient), std::move(remainder)};
}

BezoutCertificate BezoutCertificate::verified(const Element& a, const Element& b, Element g,
                                              Element x, Element y) {
  if (a * x + b * y != g) {
    throw Error(ErrorCode::Internal, "Bezout identity fails for gcd " + g.to_string());
  }
  if (!divides(g, a) || !divides(g, b)) {
    throw Error(ErrorCode::Internal, "gcd candidate " + g.to_string() + " is not a common divisor");
  }
  return BezoutCertificate(std::move(g), std::move(x), std::move(y));
}

BezoutCertificate gcd_bezout(const Element& a, const Element& b) {
  require_same_ring(a, b);
  require_euclidean(a.ring());
  if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is not defined");
  const RingDescriptor& ring = a.ring();

  Element r0 = a, r1 = b;
  Element s0 = Element::one(ring), s1 = Element::zero(ring);
  Element t0 = Element::zero(ring), t1 = Element::one(ring);
  while (!r1.is_zero()) {
    DivisionResult d = euclid_div(r0, r1);
    Element s2 = s0 - d.quotient * s1;
    Element t2 = t0 - d.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(d.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Associate norm = canonical_associate(r0);
  return BezoutCertificate::verified(a, b, std::move(norm.canonical), s0 * norm.unit,
                                     t0 * norm.unit);
}

Element gcd(const Element& a, const Element& b) { return gcd_bezout(a, b).g(); }

Element lcm(const Element& a, const Element& b) {
  require_same_ring(a, b);
  require_euclidean(a.ring());
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::ZeroElement, "lcm needs nonzero arguments");
  return canonical_associate(exact_quotient(a * b, gcd(a, b))).canonical;
}

namespace {

// Integer coordinates proportional to (Re x, Im x), with the same positive
// factor for every element of the ring.
std::pair<Integer, Integer> direction_key(const Element& x) {
  switch (x.ring().kind()) {
    case RingKind::RationalIntegers: return {x[0], Integer(0)};
    case RingKind::Gaussian: return {x[0], x[1]};
    // a + b j = (a - b/2) + i b sqrt(3)/2
    case RingKind::Eisenstein: return {Integer(2 * x[0] - x[1]), x[1]};
    case RingKind::CyclotomicPrime: break;
  }
  throw Error(ErrorCode::InfiniteUnitGroup, "no canonical associates in " + x.ring().name());
}

}  // namespace

Associate canonical_associate(const Element& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "0 has no canonical associate");
  std::optional<Associate> best;
  std::pair<Integer, Integer> best_key;
  for (const Element& v : unit_group(x.ring())) {
    Element candidate = x * v;
    auto key = direction_key(candidate);
    if (!best || key > best_key) {
      best_key = std::move(key);
      best = Associate{std::move(candidate), v};
    }
  }
  return *std::move(best);
}

bool is_canonical(const Element& x) {
  return !x.is_zero() && canonical_associate(x).canonical == x;
}

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n) {
  Integer m = abs(n);
  if (sgn(m) == 0) throw Error(ErrorCode::ZeroElement, "cannot factor 0");
  std::vector<std::pair<Integer, unsigned>> out;
  auto strip = [&](const Integer& d) {
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
      mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
      ++e;
    }
    if (e != 0) out.emplace_back(d, e);
  };
  strip(Integer(2));
  for (Integer d = 3; d * d <= m; d += 2) strip(d);
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

namespace {

std::vector<Integer> divisors_of(const Integer& n) {
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t count = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t t = 0; t < count; ++t) divs.push_back(divs[t] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<Element> canonical_elements_of_norm(const RingDescriptor& ring, const Integer& m) {
  std::vector<Element> out;
  for (Element& d : elements_of_norm(ring, m)) {
    if (is_canonical(d)) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

std::vector<Element> elements_of_norm(const RingDescriptor& ring, const Integer& m) {
  std::vector<Element> out;
  if (sgn(m) < 0) return out;
  if (sgn(m) == 0) return {Element::zero(ring)};
  auto make = [&](const Integer& a, const Integer& b) {
    return Element(ring, std::vector<Integer>{a, b});
  };
  switch (ring.kind()) {
    case RingKind::RationalIntegers:
      if (mpz_perfect_square_p(m.get_mpz_t())) {
        const Integer s = sqrt(m);
        out.push_back(Element::integer(ring, s));
        out.push_back(Element::integer(ring, -s));
      }
      break;
    case RingKind::Gaussian: {
      // a^2 + b^2 = m
      const Integer bound = sqrt(m);
      for (Integer a = -bound; a <= bound; ++a) {
        const Integer rest = m - a * a;
        if (!mpz_perfect_square_p(rest.get_mpz_t())) continue;
        const Integer b = sqrt(rest);
        out.push_back(make(a, b));
        if (sgn(b) != 0) out.push_back(make(a, -b));
      }
      break;
    }
    case RingKind::Eisenstein: {
      // a^2 - ab + b^2 = m  <=>  (2a - b)^2 = 4m - 3b^2
      const Integer bound = sqrt(Integer(4 * m / 3));
      for (Integer b = -bound; b <= bound; ++b) {
        const Integer disc = 4 * m - 3 * b * b;
        if (sgn(disc) < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
        const Integer s = sqrt(disc);
        for (const Integer& twice_a : {Integer(b + s), Integer(b - s)}) {
          if (mpz_odd_p(twice_a.get_mpz_t())) continue;
          out.push_back(make(twice_a / 2, b));
          if (sgn(s) == 0) break;
        }
      }
      break;
    }
    case RingKind::CyclotomicPrime:
      throw Error(ErrorCode::UnsupportedRing, "norm search is not available in " + ring.name());
  }
  return out;
}

bool is_irreducible(const Element& p) {
  require_euclidean(p.ring());
  if (p.is_zero() || is_unit(p)) return false;
  const Integer n = norm_sq(p).value;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) return true;
  for (const Integer& m : divisors_of(n)) {
    if (m == 1 || m == n) continue;
    for (const Element& d : canonical_elements_of_norm(p.ring(), m)) {
      if (divides(d, p)) return false;
    }
  }
  return true;
}

bool factor_order_less(const Element& a, const Element& b) {
  const int c = cmp(norm_sq(a).value, norm_sq(b).value);
  if (c != 0) return c < 0;
  return lex_compare(a, b) < 0;
}

Element Factorization::expand() const {
  Element x = unit_;
  for (const auto& [p, e] : factors_) x *= pow(p, e);
  return x;
}

Factorization factor(const Element& x) {
  require_euclidean(x.ring());
  if (x.is_zero()) throw Error(ErrorCode::ZeroElement, "cannot factor 0");
  const RingDescriptor& ring = x.ring();
  Element rest = x;
  std::vector<Factorization::Entry> factors;
  for (const auto& [q, e] : factor_integer(norm_sq(x).value)) {
    // Primes above q have norm q when q splits or ramifies, q^2 when inert.
    std::vector<Element> candidates = canonical_elements_of_norm(ring, q);
    if (candidates.empty()) {
      for (Element& d : canonical_elements_of_norm(ring, Integer(q * q))) {
        if (is_irreducible(d)) candidates.push_back(std::move(d));
      }
    }
    for (const Element& p : candidates) {
      unsigned count = 0;
      while (auto w = divides(p, rest)) {
        rest = *std::move(w);
        ++count;
      }
      if (count != 0) factors.emplace_back(p, count);
    }
  }
  if (!is_unit(rest)) {
    throw Error(ErrorCode::Internal, "factorization of " + x.to_string() + " left cofactor " +
                                         rest.to_string());
  }
  std::sort(factors.begin(), factors.end(),
            [](const auto& l, const auto& r) { return factor_order_less(l.first, r.first); });
  return Factorization(std::move(rest), std::move(factors));
}

bool euclid_lemma_check(const Element& a, const Element& b, const Element& c) {
  if (a.is_zero() && b.is_zero()) return true;
  const bool coprime = gcd(a, b) == Element::one(a.ring());
  if (!coprime || !divides(a, b * c)) return true;
  return divides(a, c).has_value();
}

}  // namespace starring
