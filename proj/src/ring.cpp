#include "starring/ring.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

namespace starring {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

RingDescriptor RingDescriptor::cyclotomic(unsigned p) {
  if (p < 5 || !is_prime(p)) {
    throw Error(ErrorCode::NonPrimeOrder,
                "cyclotomic ring order must be a prime >= 5, got " + std::to_string(p));
  }
  return RingDescriptor(RingKind::CyclotomicPrime, p);
}

RingDescriptor RingDescriptor::parse(std::string_view name) {
  if (name == "z" || name == "Z" || name == "integers") return integers();
  if (name == "gaussian" || name == "zi") return gaussian();
  if (name == "eisenstein" || name == "zj") return eisenstein();
  if (name.starts_with("cyclo")) {
    std::string_view digits = name.substr(5);
    unsigned p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw Error(ErrorCode::MissingParameter, "cyclotomic ring needs an order, e.g. cyclo5");
    }
    return cyclotomic(p);
  }
  throw Error(ErrorCode::InvalidInput, "unknown ring '" + std::string(name) + "'");
}

std::size_t RingDescriptor::rank() const noexcept {
  switch (kind_) {
    case RingKind::RationalIntegers: return 1;
    case RingKind::Gaussian:
    case RingKind::Eisenstein: return 2;
    case RingKind::CyclotomicPrime: return root_order_ - 1;
  }
  return 0;
}

std::string RingDescriptor::name() const {
  switch (kind_) {
    case RingKind::RationalIntegers: return "z";
    case RingKind::Gaussian: return "gaussian";
    case RingKind::Eisenstein: return "eisenstein";
    case RingKind::CyclotomicPrime: return "cyclo" + std::to_string(root_order_);
  }
  return "?";
}

RingDescriptor make_ring(RingKind kind, std::optional<unsigned> p) {
  switch (kind) {
    case RingKind::RationalIntegers: return RingDescriptor::integers();
    case RingKind::Gaussian: return RingDescriptor::gaussian();
    case RingKind::Eisenstein: return RingDescriptor::eisenstein();
    case RingKind::CyclotomicPrime:
      if (!p) throw Error(ErrorCode::MissingParameter, "CyclotomicPrime requires a prime order");
      return RingDescriptor::cyclotomic(*p);
  }
  throw Error(ErrorCode::InvalidInput, "unknown ring kind");
}

void require_same_ring(const Element& a, const Element& b) {
  if (!(a.ring() == b.ring())) {
    throw Error(ErrorCode::RingMismatch,
                "ring mismatch: " + a.ring().name() + " vs " + b.ring().name());
  }
}

Element::Element(RingDescriptor ring, std::vector<Integer> coeffs)
    : ring_(ring), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ring_.rank()) {
    throw Error(ErrorCode::DimensionMismatch,
                "element of " + ring_.name() + " needs " + std::to_string(ring_.rank()) +
                    " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

Element Element::zero(const RingDescriptor& ring) {
  return Element(ring, std::vector<Integer>(ring.rank(), Integer(0)));
}

Element Element::one(const RingDescriptor& ring) { return integer(ring, 1); }

Element Element::integer(const RingDescriptor& ring, const Integer& value) {
  std::vector<Integer> c(ring.rank(), Integer(0));
  c[0] = value;
  return Element(ring, std::move(c));
}

Element Element::root(const RingDescriptor& ring, std::int64_t k) {
  const std::int64_t n = ring.root_order();
  std::vector<Integer> formal(static_cast<std::size_t>(n), Integer(0));
  formal[static_cast<std::size_t>(((k % n) + n) % n)] = 1;
  return canonicalize(ring, formal);
}

bool Element::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Element::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) != 0) return false;
  }
  return true;
}

std::complex<double> root_embedding(unsigned n, std::int64_t k) {
  const std::int64_t nn = n;
  k = ((k % nn) + nn) % nn;
  if ((4 * k) % nn == 0) {
    switch ((4 * k) / nn) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
    }
  }
  if (2 * k > nn) return std::conj(root_embedding(n, nn - k));
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  return std::polar(1.0, angle);
}

std::complex<double> Element::embed() const {
  std::complex<double> z{0.0, 0.0};
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    z += coeffs_[k].get_d() * root_embedding(ring_.root_order(), static_cast<std::int64_t>(k));
  }
  return z;
}

namespace {

std::string basis_symbol(const RingDescriptor& ring, std::size_t k) {
  switch (ring.kind()) {
    case RingKind::Gaussian: return "i";
    case RingKind::Eisenstein: return "j";
    default: return "zeta(" + std::to_string(ring.root_order()) + "," + std::to_string(k) + ")";
  }
}

}  // namespace

std::string Element::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Integer& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const Integer magnitude = abs(c);
    if (k == 0) {
      out += magnitude.get_str();
      continue;
    }
    const std::string symbol = basis_symbol(ring_, k);
    if (magnitude != 1) {
      out += magnitude.get_str();
      // Juxtaposition "3i" reads naturally; zeta(...) gets an explicit '*'.
      if (ring_.kind() == RingKind::CyclotomicPrime) out += '*';
    }
    out += symbol;
  }
  return out.empty() ? "0" : out;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Element& Element::operator+=(const Element& rhs) {
  require_same_ring(*this, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  require_same_ring(*this, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

Element& Element::operator*=(const Element& rhs) { return *this = *this * rhs; }

Element operator*(const Element& lhs, const Element& rhs) {
  require_same_ring(lhs, rhs);
  const RingDescriptor& ring = lhs.ring();
  const std::size_t n = ring.root_order();
  const std::size_t r = ring.rank();
  std::vector<Integer> formal(n, Integer(0));
  for (std::size_t a = 0; a < r; ++a) {
    if (sgn(lhs.coeffs_[a]) == 0) continue;
    for (std::size_t b = 0; b < r; ++b) {
      if (sgn(rhs.coeffs_[b]) == 0) continue;
      formal[(a + b) % n] += lhs.coeffs_[a] * rhs.coeffs_[b];
    }
  }
  return canonicalize(ring, formal);
}

Element operator*(const Integer& k, const Element& x) {
  Element r = x;
  for (auto& c : r.coeffs_) c *= k;
  return r;
}

bool operator==(const Element& a, const Element& b) {
  return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

Element canonicalize(const RingDescriptor& ring, std::span<const Integer> formal) {
  const std::size_t n = ring.root_order();
  std::vector<Integer> folded(n, Integer(0));
  for (std::size_t k = 0; k < formal.size(); ++k) folded[k % n] += formal[k];

  std::vector<Integer> c(ring.rank(), Integer(0));
  if (n == 1) {
    c[0] = folded[0];
  } else if (n % 2 == 0) {
    // e_{k + n/2} = -e_k
    const std::size_t half = n / 2;
    for (std::size_t k = 0; k < half; ++k) c[k] = folded[k] - folded[k + half];
  } else {
    // e_{n-1} = -(e_0 + ... + e_{n-2})
    for (std::size_t k = 0; k + 1 < n; ++k) c[k] = folded[k] - folded[n - 1];
  }
  return Element(ring, std::move(c));
}

Element add(const Element& x, const Element& y) { return x + y; }

Element mul(const Element& x, const Element& y) { return x * y; }

Element pow(const Element& x, unsigned long exponent) {
  Element result = Element::one(x.ring());
  Element base = x;
  while (exponent != 0) {
    if (exponent & 1UL) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::strong_ordering lex_compare(const Element& a, const Element& b) {
  require_same_ring(a, b);
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    const int c = cmp(a[k], b[k]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace starring
