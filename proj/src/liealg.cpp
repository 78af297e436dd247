#include "starring/liealg.hpp"

#include <algorithm>
#include <numeric>

#include "starring/star.hpp"

namespace starring::lie {

StructureConstants::StructureConstants(std::size_t n, const RingDescriptor& ring)
    : n_(n), ring_(ring), entries_(n * n * n, Element::zero(ring)) {
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "Lie algebra dimension must be positive");
}

std::size_t StructureConstants::offset(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= n_ || j >= n_ || k >= n_) {
    throw Error(ErrorCode::DimensionMismatch, "structure constant index out of range");
  }
  return (i * n_ + j) * n_ + k;
}

const Element& StructureConstants::at(std::size_t i, std::size_t j, std::size_t k) const {
  return entries_[offset(i, j, k)];
}

void StructureConstants::set(std::size_t i, std::size_t j, std::size_t k, Element value) {
  if (!(value.ring() == ring_)) {
    throw Error(ErrorCode::RingMismatch, "structure constant outside " + ring_.name());
  }
  entries_[offset(i, j, k)] = std::move(value);
}

bool StructureConstants::is_real() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Element& e) { return conj(e) == e; });
}

bool StructureConstants::is_antisymmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (at(i, j, k) != -at(j, i, k)) return false;
  return true;
}

ShiftVector::ShiftVector(std::vector<Element> v) : v_(std::move(v)) {
  if (v_.empty()) throw Error(ErrorCode::InvalidShiftVector, "empty shift vector");
  if (!v_[0].is_zero()) {
    throw Error(ErrorCode::InvalidShiftVector, "shift component v_0 must be 0");
  }
  for (const Element& e : v_) require_same_ring(v_[0], e);
}

ShiftVector ShiftVector::zero(std::size_t n, const RingDescriptor& ring) {
  return ShiftVector(std::vector<Element>(n, Element::zero(ring)));
}

namespace {

void require_compatible(const StructureConstants& c, const ShiftVector& v) {
  if (c.dim() != v.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "constants of dimension " + std::to_string(c.dim()) + " with a shift of length " +
                    std::to_string(v.size()));
  }
  if (!(c.ring() == v[0].ring())) {
    throw Error(ErrorCode::RingMismatch, "constants and shift live in different rings");
  }
}

}  // namespace

StructureConstants shift_constants(const StructureConstants& c, const ShiftVector& v) {
  require_compatible(c, v);
  const std::size_t n = c.dim();
  StructureConstants d(n, c.ring());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Element contracted = Element::zero(c.ring());
      for (std::size_t l = 0; l < n; ++l) contracted += c.at(i, j, l) * v[l];
      for (std::size_t k = 0; k < n; ++k) {
        Element value = c.at(i, j, k);
        if (k == 0) value += contracted;
        if (k == j) value -= v[i];
        if (k == i) value -= v[j];
        d.set(i, j, k, std::move(value));
      }
    }
  }
  return d;
}

bool check_star_antisymmetry(const StructureConstants& d) {
  const std::size_t n = d.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (conj(d.at(i, j, k)) != -d.at(j, i, k)) return false;
  return true;
}

std::vector<Element> left_star_product(const StructureConstants& c, const ShiftVector& v,
                                       std::size_t i) {
  require_compatible(c, v);
  const Element twice_re = re2(v[i]);
  std::vector<Element> out;
  for (std::size_t k = 0; k < c.dim(); ++k) out.push_back(twice_re * c.at(i, 0, k) - c.at(i, i, k));
  return out;
}

std::vector<Element> right_star_product(const StructureConstants& c, const ShiftVector& v,
                                        std::size_t i) {
  require_compatible(c, v);
  const Element twice_re = re2(v[i]);
  std::vector<Element> out;
  for (std::size_t k = 0; k < c.dim(); ++k) out.push_back(twice_re * c.at(0, i, k) - c.at(i, i, k));
  return out;
}

DegeneracyReport degeneracy_report(const StructureConstants& c, const ShiftVector& v) {
  require_compatible(c, v);
  DegeneracyReport report;
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Element twice_re = re2(v[i]);
    for (std::size_t k = 0; k < n; ++k) {
      if (c.at(i, 0, k).is_zero() && c.at(0, i, k).is_zero()) continue;
      report.offending.push_back({i, k, twice_re * (c.at(i, 0, k) - c.at(0, i, k))});
    }
  }
  report.well_defined = report.offending.empty();
  if (report.well_defined) {
    auto is_null = [](const std::vector<Element>& xs) {
      return std::all_of(xs.begin(), xs.end(), [](const Element& e) { return e.is_zero(); });
    };
    for (std::size_t i = 0; i < n; ++i) {
      if (is_null(left_star_product(c, v, i)) && is_null(right_star_product(c, v, i))) {
        report.degenerate_witnesses.push_back(i);
      }
    }
  }
  return report;
}

std::vector<std::vector<Element>> change_of_basis(const ShiftVector& v) {
  const std::size_t n = v.size();
  const RingDescriptor& ring = v[0].ring();
  std::vector<std::vector<Element>> m(n, std::vector<Element>(n, Element::zero(ring)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Element entry = Element::integer(ring, i == j ? 1 : 0);
      if (j == 0) entry -= v[i];
      m[i][j] = std::move(entry);
    }
  }
  return m;
}

Element determinant(const std::vector<std::vector<Element>>& m) {
  const std::size_t n = m.size();
  if (n == 0 || n > 8) throw Error(ErrorCode::DimensionMismatch, "determinant needs 1 <= n <= 8");
  for (const auto& row : m) {
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Element det = Element::zero(m[0][0].ring());
  do {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Element term = Element::one(det.ring());
    for (std::size_t r = 0; r < n; ++r) term *= m[r][perm[r]];
    if (inversions % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace starring::lie
