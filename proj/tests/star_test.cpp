#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracle.hpp"
#include "starring/star.hpp"

using namespace starring;

namespace {

const RingDescriptor Z = RingDescriptor::integers();
const RingDescriptor G = RingDescriptor::gaussian();
const RingDescriptor E = RingDescriptor::eisenstein();

Element g(long a, long b) { return Element(G, {a, b}); }
Element e(long a, long b) { return Element(E, {a, b}); }

std::set<oracle::Pair> pairs(const std::vector<Element>& xs) {
  std::set<oracle::Pair> out;
  for (const Element& x : xs) out.insert(oracle::to_pair(x));
  return out;
}

}  // namespace

TEST(Conj, Examples) {
  EXPECT_EQ(conj(Element::root(G, 1)), g(0, -1));
  EXPECT_EQ(conj(Element::root(E, 1)), e(-1, -1));
  EXPECT_EQ(conj(Element::integer(G, 17)), Element::integer(G, 17));
  EXPECT_EQ(conj(Element::integer(Z, -3)), Element::integer(Z, -3));
  const RingDescriptor c5 = RingDescriptor::cyclotomic(5);
  EXPECT_EQ(conj(Element::root(c5, 1)), Element::root(c5, 4));
}

TEST(Conj, MatchesComplexConjugate) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-50, 50);
  for (const RingDescriptor& R :
       {G, E, RingDescriptor::cyclotomic(5), RingDescriptor::cyclotomic(7)}) {
    for (int n = 0; n < 300; ++n) {
      std::vector<Integer> c(R.rank());
      for (auto& v : c) v = d(rng);
      const Element x(R, c);
      EXPECT_LT(std::abs(conj(x).embed() - std::conj(x.embed())), 1e-9);
      EXPECT_EQ(conj(conj(x)), x);
    }
  }
}

TEST(NormSq, Examples) {
  EXPECT_EQ(norm_sq(g(1, 1)).value, 2);
  EXPECT_EQ(norm_sq(Element::zero(G)).value, 0);
  EXPECT_EQ(norm_sq(Element::integer(Z, -9)).value, 81);
  for (long a = -6; a <= 6; ++a) {
    for (long b = -6; b <= 6; ++b) {
      EXPECT_EQ(norm_sq(e(a, b)).value, a * a - a * b + b * b);
      EXPECT_EQ(norm_sq(g(a, b)).value, a * a + b * b);
    }
  }
}

TEST(NormSq, CyclotomicIsNotRational) {
  const RingDescriptor c5 = RingDescriptor::cyclotomic(5);
  const Element x = Element::one(c5) + Element::root(c5, 1);
  EXPECT_FALSE(star_product(x).is_rational());
  try {
    norm_sq(x);
    ADD_FAILURE();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NonRationalNorm);
  }
  // Rational elements still have a norm.
  EXPECT_EQ(norm_sq(Element::integer(c5, 4)).value, 16);
  EXPECT_EQ(norm_sq(Element::root(c5, 3)).value, 1);
}

TEST(Magnitude, Examples) {
  EXPECT_NEAR(magnitude_approx(g(1, 1)), std::sqrt(2.0), 1e-12);
  for (long k = -20; k <= 20; ++k) {
    EXPECT_EQ(magnitude_approx(Element::integer(Z, k)), std::abs(static_cast<double>(k)));
  }
  for (const Element& u : unit_group(G)) EXPECT_EQ(magnitude_approx(u), 1.0);
}

TEST(UnitPart, Examples) {
  const UnitPart u = unit_part(g(1, 1));
  EXPECT_EQ(u.numerator, g(1, 1));
  EXPECT_EQ(u.norm_square.value, 2);
  EXPECT_LT(std::abs(u.embed() - std::complex<double>(1, 1) / std::sqrt(2.0)), 1e-12);
  EXPECT_LT(std::abs(unit_part(Element::one(G)).embed() - 1.0), 1e-15);
  const UnitPart m = unit_part(Element::integer(Z, -5));
  EXPECT_EQ(m.norm_square.value, 25);
  EXPECT_LT(std::abs(m.embed() + 1.0), 1e-15);
  try {
    unit_part(Element::zero(E));
    ADD_FAILURE();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::ZeroElement);
  }
}

TEST(RealImaginary, Examples) {
  EXPECT_EQ(re2(g(3, 4)), Element::integer(G, 6));
  EXPECT_EQ(im2i(g(3, 4)), g(0, 8));
  EXPECT_DOUBLE_EQ(re_approx(g(3, 4)), 3.0);
  EXPECT_DOUBLE_EQ(im_approx(g(3, 4)), 4.0);
  // j = -1/2 + i*sqrt(3)/2
  EXPECT_EQ(re2(Element::root(E, 1)), Element::integer(E, -1));
  EXPECT_EQ(im2i(Element::root(E, 1)), e(1, 2));
  EXPECT_NEAR(im_approx(Element::root(E, 1)), std::sqrt(3.0) / 2, 1e-15);
}

TEST(Units, Examples) {
  EXPECT_TRUE(is_unit(Element::root(G, 1)));
  EXPECT_EQ(*unit_inverse(Element::root(G, 1)), g(0, -1));
  EXPECT_TRUE(is_unit(e(1, 1)));
  EXPECT_EQ(*unit_inverse(e(1, 1)), e(0, -1));
  EXPECT_FALSE(is_unit(g(1, 1)));
  EXPECT_FALSE(unit_inverse(g(1, 1)).has_value());
  EXPECT_FALSE(is_unit(Element::zero(Z)));
}

TEST(Units, CyclotomicHasNonRootUnits) {
  // 1 + zeta is a unit in Z[zeta_p]: its field norm is 1.
  for (unsigned p : {5u, 7u, 11u}) {
    const RingDescriptor R = RingDescriptor::cyclotomic(p);
    const Element x = Element::one(R) + Element::root(R, 1);
    EXPECT_EQ(field_norm(x), 1);
    const auto inv = unit_inverse(x);
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(x * *inv, Element::one(R));
    // 1 - zeta has field norm p.
    EXPECT_EQ(field_norm(Element::one(R) - Element::root(R, 1)), p);
    EXPECT_FALSE(is_unit(Element::one(R) - Element::root(R, 1)));
  }
}

TEST(Units, GroupsMatchBruteForce) {
  EXPECT_EQ(unit_group(Z).size(), 2u);
  EXPECT_EQ(pairs(unit_group(G)), (std::set<oracle::Pair>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
  const auto eis = pairs(unit_group(E));
  EXPECT_EQ(eis.size(), 6u);
  for (bool eisenstein : {false, true}) {
    const auto brute = oracle::units(eisenstein);
    EXPECT_EQ(pairs(unit_group(eisenstein ? E : G)),
              std::set<oracle::Pair>(brute.begin(), brute.end()));
  }
  // j* = -1 - j is listed.
  EXPECT_TRUE(eis.count({-1, -1}));
  EXPECT_TRUE(eis.count({1, 1}));
  try {
    unit_group(RingDescriptor::cyclotomic(5));
    ADD_FAILURE();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::InfiniteUnitGroup);
  }
}

TEST(Galois, ConjugatesMultiplyToFieldNorm) {
  const RingDescriptor R = RingDescriptor::cyclotomic(7);
  const Element x(R, {3, -1, 0, 2, 0, 5});
  Element prod = Element::one(R);
  for (unsigned a = 1; a < 7; ++a) prod *= galois_conjugate(x, a);
  ASSERT_TRUE(prod.is_rational());
  EXPECT_EQ(prod[0], field_norm(x));
  EXPECT_EQ(galois_conjugate(x, 6), conj(x));
}
