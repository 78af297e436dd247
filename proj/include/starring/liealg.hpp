#pragma once

// Structure constants of a Lie algebra over a subring of C and the effect of
// the shifted basis e'_i = e_i - v_i e_0 on them.
//
// Indices run over 0..n-1 and entry (i, j, k) holds c^k_{ij}, the e_k
// coefficient of e_i e_j. The basis vector e_n is identified with e_0, so
// the shift component v_0 (= v_n) is zero.

#include <cstddef>
#include <vector>

#include "starring/ring.hpp"

namespace starring::lie {

class StructureConstants {
 public:
  // All entries zero.
  StructureConstants(std::size_t n, const RingDescriptor& ring);

  std::size_t dim() const noexcept { return n_; }
  const RingDescriptor& ring() const noexcept { return ring_; }

  const Element& at(std::size_t i, std::size_t j, std::size_t k) const;
  // Errors: RingMismatch.
  void set(std::size_t i, std::size_t j, std::size_t k, Element value);

  // Every entry fixed by conj.
  bool is_real() const;
  // c^k_{ij} = -c^k_{ji}.
  bool is_antisymmetric() const;

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t offset(std::size_t i, std::size_t j, std::size_t k) const;

  std::size_t n_;
  RingDescriptor ring_;
  std::vector<Element> entries_;
};

class ShiftVector {
 public:
  // Errors: InvalidShiftVector when v[0] != 0 or v is empty, RingMismatch.
  explicit ShiftVector(std::vector<Element> v);
  static ShiftVector zero(std::size_t n, const RingDescriptor& ring);

  std::size_t size() const noexcept { return v_.size(); }
  const Element& operator[](std::size_t i) const { return v_[i]; }

 private:
  std::vector<Element> v_;
};

// d^k_{ij} = c^k_{ij} + (sum_l c^l_{ij} v_l) delta^k_0 - (v_i delta^k_j + v_j delta^k_i)
// Errors: DimensionMismatch, RingMismatch.
StructureConstants shift_constants(const StructureConstants& c, const ShiftVector& v);

// conj(d^k_{ij}) = -d^k_{ji} for every entry.
bool check_star_antisymmetry(const StructureConstants& d);

struct OffendingPair {
  std::size_t i;
  std::size_t k;
  // (v_i + conj v_i)(c^k_{i0} - c^k_{0i}), the gap between e_i conj(e_i)
  // and conj(e_i) e_i along e_k.
  Element discrepancy;
};

struct DegeneracyReport {
  // c^k_{i0} = c^k_{0i} = 0 for all i, k.
  bool well_defined = false;
  // Indices i with e_i conj(e_i) = conj(e_i) e_i = 0.
  std::vector<std::size_t> degenerate_witnesses;
  // (i, k) with c^k_{i0} or c^k_{0i} nonzero.
  std::vector<OffendingPair> offending;
};

// Errors: DimensionMismatch, RingMismatch.
DegeneracyReport degeneracy_report(const StructureConstants& c, const ShiftVector& v);

// e_i conj(e_i) = -c^k_{ii} e_k + (v_i + conj v_i) c^k_{i0} e_k, as the
// vector of e_k coefficients.
std::vector<Element> left_star_product(const StructureConstants& c, const ShiftVector& v,
                                       std::size_t i);
// conj(e_i) e_i = -c^k_{ii} e_k + (v_i + conj v_i) c^k_{0i} e_k.
std::vector<Element> right_star_product(const StructureConstants& c, const ShiftVector& v,
                                        std::size_t i);

// The matrix delta^j_i - v_i delta^j_0 taking {e_j} to {e'_i}.
std::vector<std::vector<Element>> change_of_basis(const ShiftVector& v);

// Leibniz expansion; square matrices up to 8 x 8.
Element determinant(const std::vector<std::vector<Element>>& m);

}  // namespace starring::lie
