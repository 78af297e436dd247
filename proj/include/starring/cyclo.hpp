#pragma once

// The cyclic groups U_n = {e_{n,k} = exp(2 i pi k / n)} as exact index
// arithmetic, plus an audit of which families {e_{n,k}} are linearly
// independent over Q.

#include <complex>
#include <cstdint>
#include <vector>

#include "starring/ring.hpp"

namespace starring::cyclo {

class RootIndex {
 public:
  // k is reduced mod n; n >= 1.
  RootIndex(unsigned n, std::int64_t k);

  unsigned order() const noexcept { return n_; }
  unsigned index() const noexcept { return k_; }

  std::complex<double> embed() const { return root_embedding(n_, k_); }

  friend bool operator==(const RootIndex&, const RootIndex&) = default;

 private:
  unsigned n_;
  unsigned k_;
};

// Errors: OrderMismatch.
RootIndex root_mul(const RootIndex& a, const RootIndex& b);
RootIndex root_star(const RootIndex& a);
RootIndex root_pow(const RootIndex& a, std::int64_t m);
RootIndex identity(unsigned n);

// Multiplicative order of e_{n,k}: n / gcd(n, k).
unsigned root_order_of(const RootIndex& a);

// {e_{n,0}} for odd n, {e_{n,0}, e_{n,n/2}} for even n.
std::vector<RootIndex> real_roots(unsigned n);

// 0..n-2 for odd n; 0..n-2 without n/2 for even n; {0} for n in {1, 2}.
std::vector<unsigned> basis_indices(unsigned n);

// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<Integer> cyclotomic_polynomial(unsigned n);

struct FreenessReport {
  unsigned n;
  std::size_t family_size;
  std::size_t rank;
  bool free() const { return rank == family_size; }
};

inline constexpr unsigned kMaxAuditOrder = 24;
inline constexpr double kFloatRankTolerance = 1e-8;

// Exact Q-rank of basis_indices(n), with each x^k reduced modulo the n-th
// cyclotomic polynomial. Errors: OrderTooLarge for n > 24.
FreenessReport freeness_check(unsigned n);
std::size_t exact_family_rank(unsigned n, const std::vector<unsigned>& family);

// The same rank through floats: the complex rank of the matrix
// [exp(2 i pi a k / n)] over a prime to n and k in the family.
std::size_t float_family_rank(unsigned n, const std::vector<unsigned>& family);


// Sum of the embeddings of all of U_n.
std::complex<double> root_sum(unsigned n);

}  // namespace starring::cyclo
