#include "starring/cyclo.hpp"

#include <cmath>
#include <numeric>

namespace starring::cyclo {

RootIndex::RootIndex(unsigned n, std::int64_t k) : n_(n), k_(0) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "root order must be positive");
  const std::int64_t nn = n;
  k_ = static_cast<unsigned>(((k % nn) + nn) % nn);
}

RootIndex root_mul(const RootIndex& a, const RootIndex& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorCode::OrderMismatch, "roots of orders " + std::to_string(a.order()) +
                                              " and " + std::to_string(b.order()));
  }
  return RootIndex(a.order(), std::int64_t{a.index()} + b.index());
}

RootIndex root_star(const RootIndex& a) {
  return RootIndex(a.order(), std::int64_t{a.order()} - a.index());
}

RootIndex root_pow(const RootIndex& a, std::int64_t m) {
  const std::int64_t n = a.order();
  return RootIndex(a.order(), (std::int64_t{a.index()} * (m % n)) % n);
}

RootIndex identity(unsigned n) { return RootIndex(n, 0); }

unsigned root_order_of(const RootIndex& a) {
  return a.order() / std::gcd(a.order(), a.index() == 0 ? a.order() : a.index());
}

std::vector<RootIndex> real_roots(unsigned n) {
  if (n % 2 == 1) return {RootIndex(n, 0)};
  return {RootIndex(n, 0), RootIndex(n, n / 2)};
}

std::vector<unsigned> basis_indices(unsigned n) {
  if (n <= 2) return {0};
  std::vector<unsigned> out;
  for (unsigned k = 0; k + 2 <= n; ++k) {
    if (n % 2 == 0 && k == n / 2) continue;
    out.push_back(k);
  }
  return out;
}

namespace {

using Poly = std::vector<Integer>;

// Quotient of num by a monic divisor; the division must be exact.
Poly divide_exact(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly q(num.size() - dn, Integer(0));
  for (std::size_t i = num.size(); i-- > dn;) {
    const Integer c = num[i];
    q[i - dn] = c;
    for (std::size_t t = 0; t <= dn; ++t) num[i - dn + t] -= c * den[t];
  }
  for (std::size_t t = 0; t < dn; ++t) {
    if (sgn(num[t]) != 0) throw Error(ErrorCode::Internal, "inexact cyclotomic division");
  }
  return q;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "cyclotomic polynomial of order 0");
  Poly p(n + 1, Integer(0));
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

std::size_t exact_family_rank(unsigned n, const std::vector<unsigned>& family) {
  const Poly phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  std::vector<std::vector<Rational>> rows;
  for (unsigned k : family) {
    // x^k mod phi, by repeated multiplication by x.
    Poly v(deg, Integer(0));
    v[0] = 1;
    for (unsigned t = 0; t < k; ++t) {
      const Integer top = v[deg - 1];
      for (std::size_t s = deg - 1; s > 0; --s) v[s] = v[s - 1];
      v[0] = 0;
      for (std::size_t s = 0; s < deg; ++s) v[s] -= top * phi[s];
    }
    rows.emplace_back(v.begin(), v.end());
  }
  return rational_rank(std::move(rows));
}

std::size_t float_family_rank(unsigned n, const std::vector<unsigned>& family) {
  std::vector<std::vector<std::complex<double>>> m;
  for (unsigned a = 1; a <= n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    std::vector<std::complex<double>> row;
    for (unsigned k : family) row.push_back(root_embedding(n, std::int64_t{a} * k));
    m.push_back(std::move(row));
  }
  const std::size_t rows = m.size();
  const std::size_t cols = family.size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (std::abs(m[pivot][col]) < kFloatRankTolerance) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::complex<double> f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

FreenessReport freeness_check(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "order must be positive");
  if (n > kMaxAuditOrder) {
    throw Error(ErrorCode::OrderTooLarge,
                "freeness audit is limited to n <= " + std::to_string(kMaxAuditOrder));
  }
  const std::vector<unsigned> family = basis_indices(n);
  return FreenessReport{n, family.size(), exact_family_rank(n, family)};
}

std::complex<double> root_sum(unsigned n) {
  std::complex<double> s{0.0, 0.0};
  for (unsigned k = 0; k < n; ++k) s += root_embedding(n, k);
  return s;
}

}  // namespace starring::cyclo
