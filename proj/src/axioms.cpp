#include "starring/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "starring/arith.hpp"
#include "starring/ideals.hpp"
#include "starring/star.hpp"

namespace starring::axioms {

std::string_view to_string(Group group) {
  switch (group) {
    case Group::Core: return "core";
    case Group::Star: return "star";
    case Group::Arith: return "arith";
    case Group::Ideals: return "ideals";
  }
  return "?";
}

bool all_passed(const std::vector<PropertyResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult& r) { return r.passed; });
}

namespace {

constexpr long kSmallCoefficient = 1000;
constexpr long kFactorCoefficient = 50;
constexpr long kDivisorSearchCoefficient = 30;
constexpr double kEmbeddingTolerance = 1e-9;
constexpr double kUnitModulusTolerance = 1e-12;
constexpr double kTriangleTolerance = 1e-6;

std::vector<Element> box(const RingDescriptor& ring, long r) {
  std::vector<Element> out;
  const std::size_t rank = ring.rank();
  std::vector<long> c(rank, -r);
  while (true) {
    out.emplace_back(ring, std::vector<Integer>(c.begin(), c.end()));
    std::size_t k = 0;
    while (k < rank && c[k] == r) c[k++] = -r;
    if (k == rank) break;
    ++c[k];
  }
  return out;
}

bool close(std::complex<double> a, std::complex<double> b, double tol, double scale = 1.0) {
  return std::abs(a - b) <= tol * std::max(1.0, scale);
}

Element integer_part(const Element& x) { return Element::integer(x.ring(), x[0]); }

// Float unit part x / N(x).
std::complex<double> unit_embed(const Element& x) {
  if (x.ring().is_euclidean()) return unit_part(x).embed();
  return x.embed() / magnitude_approx(x);
}

double norm_approx(const Element& x) {
  const double m = magnitude_approx(x);
  return m * m;
}

class Suite {
 public:
  Suite(const RingDescriptor& ring, const Options& options)
      : ring_(ring), options_(options), rng_(options.seed) {
    singles_ = box(ring, options.box_radius);
    if (ring.rank() <= 2) pair_box_ = singles_;
    triple_box_ = ring.rank() <= 2 ? box(ring, 1) : std::vector<Element>{};
  }

  std::vector<PropertyResult> take() { return std::move(results_); }

  bool wants(Group g) const {
    return std::find(options_.groups.begin(), options_.groups.end(), g) != options_.groups.end();
  }

  Element random(long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    std::vector<Integer> c(ring_.rank());
    for (auto& v : c) v = dist(rng_);
    return Element(ring_, std::move(c));
  }

  Element random_big() {
    std::vector<Integer> c(ring_.rank());
    for (auto& v : c) {
      Integer hi = static_cast<unsigned long>(rng_() >> 1);
      Integer lo = static_cast<unsigned long>(rng_());
      v = (hi << 64) + lo;
      if (rng_() & 1U) v = -v;
    }
    return Element(ring_, std::move(c));
  }

  Element random_nonzero(long bound) {
    while (true) {
      Element x = random(bound);
      if (!x.is_zero()) return x;
    }
  }

  // Exact properties mix in huge coefficients on every fourth draw.
  Element draw(std::size_t i, bool exact) {
    if (exact && i % 4 == 3) return random_big();
    return random(kSmallCoefficient);
  }

  using Unary = std::function<bool(const Element&)>;
  using Binary = std::function<bool(const Element&, const Element&)>;
  using Ternary = std::function<bool(const Element&, const Element&, const Element&)>;
  // Returns an empty string on success, a description of the case otherwise.
  using Constructed = std::function<std::string()>;

  void unary(std::string name, Group g, const Unary& pred, bool exact = true,
             long bound = 0) {
    PropertyResult r{std::move(name), g, true, 0, {}};
    auto one = [&](const Element& x) { evaluate(r, [&] { return pred(x); }, [&] { return "x=" + x.to_string(); }); };
    for (const Element& x : singles_) one(x);
    for (std::size_t i = 0; i < options_.samples; ++i) one(bound > 0 ? random(bound) : draw(i, exact));
    results_.push_back(std::move(r));
  }

  void binary(std::string name, Group g, const Binary& pred, bool exact = true, long bound = 0) {
    PropertyResult r{std::move(name), g, true, 0, {}};
    auto one = [&](const Element& x, const Element& y) {
      evaluate(r, [&] { return pred(x, y); },
               [&] { return "x=" + x.to_string() + ", y=" + y.to_string(); });
    };
    for (const Element& x : pair_box_)
      for (const Element& y : pair_box_) one(x, y);
    for (std::size_t i = 0; i < options_.samples; ++i) {
      Element x = bound > 0 ? random(bound) : draw(i, exact);
      Element y = bound > 0 ? random(bound) : draw(i, exact);
      one(x, y);
    }
    results_.push_back(std::move(r));
  }

  void ternary(std::string name, Group g, const Ternary& pred, bool exact = true, long bound = 0) {
    PropertyResult r{std::move(name), g, true, 0, {}};
    auto one = [&](const Element& x, const Element& y, const Element& z) {
      evaluate(r, [&] { return pred(x, y, z); },
               [&] {
                 return "x=" + x.to_string() + ", y=" + y.to_string() + ", z=" + z.to_string();
               });
    };
    for (const Element& x : triple_box_)
      for (const Element& y : triple_box_)
        for (const Element& z : triple_box_) one(x, y, z);
    for (std::size_t i = 0; i < options_.samples; ++i) {
      Element x = bound > 0 ? random(bound) : draw(i, exact);
      Element y = bound > 0 ? random(bound) : draw(i, exact);
      Element z = bound > 0 ? random(bound) : draw(i, exact);
      one(x, y, z);
    }
    results_.push_back(std::move(r));
  }

  void constructed(std::string name, Group g, const Constructed& build, std::size_t count) {
    PropertyResult r{std::move(name), g, true, 0, {}};
    for (std::size_t i = 0; i < count; ++i) {
      std::string failure;
      try {
        failure = build();
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      ++r.checks;
      if (!failure.empty() && r.passed) {
        r.passed = false;
        r.counterexample = failure;
      }
    }
    results_.push_back(std::move(r));
  }

  void push(PropertyResult r) { results_.push_back(std::move(r)); }

  const RingDescriptor& ring() const { return ring_; }
  std::size_t samples() const { return options_.samples; }

 private:
  template <class Pred, class Describe>
  static void evaluate(PropertyResult& r, Pred&& pred, Describe&& describe) {
    ++r.checks;
    bool ok = false;
    std::string error;
    try {
      ok = pred();
    } catch (const std::exception& e) {
      error = e.what();
    }
    if (!ok && r.passed) {
      r.passed = false;
      r.counterexample = describe();
      if (!error.empty()) r.counterexample += " (" + error + ")";
    }
  }

  RingDescriptor ring_;
  Options options_;
  std::mt19937_64 rng_;
  std::vector<Element> singles_;
  std::vector<Element> pair_box_;
  std::vector<Element> triple_box_;
  std::vector<PropertyResult> results_;
};

void core_properties(Suite& s) {
  const RingDescriptor ring = s.ring();
  const Element zero = Element::zero(ring);
  const Element one = Element::one(ring);
  s.binary("add.commutative", Group::Core, [](auto& x, auto& y) { return x + y == y + x; });
  s.ternary("add.associative", Group::Core,
            [](auto& x, auto& y, auto& z) { return (x + y) + z == x + (y + z); });
  s.unary("add.identity", Group::Core, [&](auto& x) { return x + zero == x && x - x == zero; });
  s.binary("mul.commutative", Group::Core, [](auto& x, auto& y) { return x * y == y * x; });
  s.ternary("mul.associative", Group::Core,
            [](auto& x, auto& y, auto& z) { return (x * y) * z == x * (y * z); });
  s.unary("mul.identity", Group::Core, [&](auto& x) { return x * one == x; });
  s.ternary("distributive", Group::Core,
            [](auto& x, auto& y, auto& z) { return x * (y + z) == x * y + x * z; });
  s.binary("no_zero_divisors", Group::Core, [](auto& x, auto& y) {
    return x.is_zero() || y.is_zero() || !(x * y).is_zero();
  });
  s.unary("canonical_form.idempotent", Group::Core, [&](auto& x) {
    std::vector<Integer> c(x.coeffs().begin(), x.coeffs().end());
    return canonicalize(ring, c) == x;
  });
  s.binary("embedding.homomorphism", Group::Core, [](auto& x, auto& y) {
    const auto ex = x.embed();
    const auto ey = y.embed();
    return close((x * y).embed(), ex * ey, kEmbeddingTolerance, std::abs(ex) * std::abs(ey)) &&
           close((x + y).embed(), ex + ey, kEmbeddingTolerance, std::abs(ex) + std::abs(ey));
  }, false);
}

void star_properties(Suite& s) {
  const RingDescriptor ring = s.ring();
  const bool rational_norms = ring.is_euclidean();
  const Element one = Element::one(ring);

  s.unary("conj.involution", Group::Star, [](auto& x) { return conj(conj(x)) == x; });
  s.binary("conj.additive", Group::Star,
           [](auto& x, auto& y) { return conj(x + y) == conj(x) + conj(y); });
  s.binary("conj.multiplicative", Group::Star,
           [](auto& x, auto& y) { return conj(x * y) == conj(y) * conj(x); });
  s.unary("conj.fixes_integers", Group::Star,
          [](auto& x) { return conj(integer_part(x)) == integer_part(x); });
  s.unary("star_product.real", Group::Star, [](auto& x) {
    const Element p = star_product(x);
    return conj(p) == p;
  });
  if (rational_norms) {
    s.unary("norm_sq.is_star_product", Group::Star, [](auto& x) {
      return star_product(x) == Element::integer(x.ring(), norm_sq(x).value) &&
             sgn(norm_sq(x).value) >= 0;
    });
  }
  s.unary("norm.zero_iff_zero", Group::Star,
          [](auto& x) { return star_product(x).is_zero() == x.is_zero(); });
  s.binary("norm.multiplicative", Group::Star, [](auto& x, auto& y) {
    return star_product(x * y) == star_product(x) * star_product(y);
  });
  s.unary("norm.symmetric", Group::Star, [](auto& x) {
    const Element p = star_product(x);
    return star_product(-x) == p && star_product(conj(x)) == p;
  });
  s.binary("norm.scaling", Group::Star, [](auto& x, auto& y) {
    const Integer k = y[0];
    return star_product(k * x) == Integer(k * k) * star_product(x);
  });
  if (rational_norms) {
    PropertyResult r{"units.norm_one", Group::Star, true, 0, {}};
    for (const Element& v : unit_group(ring)) {
      ++r.checks;
      const auto inv = unit_inverse(v);
      const bool ok = norm_sq(v).value == 1 && v * conj(v) == one && inv && v * *inv == one &&
                      norm_sq(*inv).value == 1;
      if (!ok && r.passed) {
        r.passed = false;
        r.counterexample = "v=" + v.to_string();
      }
    }
    s.push(std::move(r));
  }
  s.unary("is_unit.witness", Group::Star, [&](auto& x) {
    const auto inv = unit_inverse(x);
    if (inv && x * *inv != one) return false;
    if (rational_norms) return inv.has_value() == (norm_sq(x).value == 1);
    return true;
  });
  s.unary("unit_part.modulus_one", Group::Star, [](auto& x) {
    return x.is_zero() || std::abs(std::abs(unit_embed(x)) - 1.0) <= kUnitModulusTolerance;
  }, false);
  s.unary("unit_part.decomposition", Group::Star, [](auto& x) {
    if (x.is_zero()) return true;
    const double n = magnitude_approx(x);
    return close(unit_embed(x) * n, x.embed(), kEmbeddingTolerance, n);
  }, false);
  s.binary("unit_part.multiplicative", Group::Star, [](auto& x, auto& y) {
    if (x.is_zero() || y.is_zero()) return true;
    return close(unit_embed(x * y), unit_embed(x) * unit_embed(y), kEmbeddingTolerance);
  }, false);
  s.unary("radius.equals_magnitude", Group::Star, [](auto& x) {
    const double m = magnitude_approx(x);
    return std::abs(m - std::abs(x.embed())) <= kEmbeddingTolerance * std::max(1.0, m) && m >= 0;
  }, false);
  s.unary("re_im.decomposition", Group::Star, [](auto& x) {
    const Element re = re2(x);
    const Element im = im2i(x);
    return re + im == Integer(2) * x && conj(re) == re && conj(im) == -im;
  });
  s.unary("re.conj_invariant", Group::Star, [](auto& x) { return re2(x) == re2(conj(x)); });
  s.unary("re_im.zero_iff_zero", Group::Star, [](auto& x) {
    return x.is_zero() == (re2(x).is_zero() && im2i(x).is_zero());
  });
  s.unary("conj.fixed_point_law", Group::Star,
          [](auto& x) { return (conj(x) == x) == im2i(x).is_zero(); });
  s.unary("re_im.float_parts", Group::Star, [](auto& x) {
    const auto e = x.embed();
    const double scale = std::abs(e) + 1.0;
    return std::abs(re_approx(x) - e.real()) <= kEmbeddingTolerance * scale &&
           std::abs(re2(x).embed().real() - 2 * e.real()) <= kEmbeddingTolerance * scale &&
           std::abs(im2i(x).embed().imag() - 2 * im_approx(x)) <= kEmbeddingTolerance * scale;
  }, false);
  s.binary("triangle_expansion", Group::Star, [](auto& x, auto& y) {
    const double lhs = std::pow(magnitude_approx(x + y), 2);
    const double rhs = norm_approx(x) + 2 * re_approx(x * conj(y)) + norm_approx(y);
    return std::abs(lhs - rhs) <= kTriangleTolerance;
  }, false);
}

void arith_properties(Suite& s) {
  const RingDescriptor ring = s.ring();
  const Element one = Element::one(ring);
  const auto units = unit_group(ring);

  s.binary("euclid_div.remainder_smaller", Group::Arith, [](auto& a, auto& b) {
    if (b.is_zero()) return true;
    const DivisionResult d = euclid_div(a, b);
    return a == b * d.quotient + d.remainder && norm_sq(d.remainder).value < norm_sq(b).value;
  });
  s.binary("divides.solvers_agree", Group::Arith, [](auto& a, auto& b) {
    return divides(a, b) == divides_by_linear_solve(a, b) &&
           divides(a, a * b) == divides_by_linear_solve(a, a * b);
  });
  s.binary("gcd.certificate", Group::Arith, [](auto& a, auto& b) {
    if (a.is_zero() && b.is_zero()) return true;
    const BezoutCertificate c = gcd_bezout(a, b);
    return a * c.x() + b * c.y() == c.g() && divides(c.g(), a) && divides(c.g(), b) &&
           is_canonical(c.g());
  });
  s.binary("gcd.maximal", Group::Arith, [](auto& a, auto& b) {
    if (a.is_zero() || b.is_zero()) return true;
    const Element g = gcd(a, b);
    Integer common;
    mpz_gcd(common.get_mpz_t(), norm_sq(a).value.get_mpz_t(), norm_sq(b).value.get_mpz_t());
    // Every common divisor d has norm_sq(d) | gcd(norm_sq(a), norm_sq(b)).
    for (Integer m = 1; m <= common; ++m) {
      if (!mpz_divisible_p(common.get_mpz_t(), m.get_mpz_t())) continue;
      for (const Element& d : elements_of_norm(a.ring(), m)) {
        if (divides(d, a) && divides(d, b) && !divides(d, g)) return false;
      }
    }
    return true;
  }, true, kDivisorSearchCoefficient);
  s.binary("gcd_lcm.product", Group::Arith, [](auto& a, auto& b) {
    if (a.is_zero() || b.is_zero()) return true;
    return canonical_associate(gcd(a, b) * lcm(a, b)).canonical ==
           canonical_associate(a * b).canonical;
  });
  s.binary("lcm.common_multiple", Group::Arith, [](auto& a, auto& b) {
    if (a.is_zero() || b.is_zero()) return true;
    const Element l = lcm(a, b);
    return divides(a, l) && divides(b, l) && is_canonical(l);
  });
  s.unary("divides.reflexive", Group::Arith,
          [](auto& x) { return divides(x, x) && (x.is_zero() || *divides(x, x) == Element::one(x.ring())); });
  s.ternary("divides.transitive", Group::Arith, [](auto& a, auto& b, auto& c) {
    const Element ab = a * b;
    const Element abc = ab * c;
    return divides(a, ab) && divides(ab, abc) && divides(a, abc);
  });
  s.ternary("divides.linear", Group::Arith, [&](auto& d, auto& p, auto& q) {
    const Element x = d * p;
    const Element y = d * q;
    const Element s1 = p + one;
    const Element t1 = q - one;
    return divides(d, x * s1 + y * t1).has_value();
  });
  s.ternary("euclid_lemma.random", Group::Arith,
            [](auto& a, auto& b, auto& c) { return euclid_lemma_check(a, b, c); });
  s.constructed("euclid_lemma.constructed", Group::Arith, [&] {
    Element a = s.random_nonzero(kSmallCoefficient);
    Element b = s.random_nonzero(kSmallCoefficient);
    while (gcd(a, b) != one) b = s.random_nonzero(kSmallCoefficient);
    const Element c = a * s.random(kSmallCoefficient);
    const bool ok = euclid_lemma_check(a, b, c) && divides(a, b * c) && divides(a, c);
    return ok ? std::string() : "a=" + a.to_string() + ", b=" + b.to_string() + ", c=" + c.to_string();
  }, s.samples());
  s.binary("bezout_criterion", Group::Arith, [&](auto& a, auto& b) {
    if (a.is_zero() && b.is_zero()) return true;
    const BezoutCertificate c = gcd_bezout(a, b);
    const bool coprime = c.g() == one;
    const PrincipalIdeal sum = ideal_sum(ideal(a), ideal(b));
    // g | ax + by for all x, y, so 1 is a combination iff g is a unit.
    return coprime == sum.is_whole_ring() && coprime == contains(sum, one) &&
           (!coprime || a * c.x() + b * c.y() == one);
  });
  s.constructed("lcm.coprime_product", Group::Arith, [&] {
    const Element a = s.random_nonzero(kSmallCoefficient);
    Element b = s.random_nonzero(kSmallCoefficient);
    while (gcd(a, b) != one) b = s.random_nonzero(kSmallCoefficient);
    const Element m = lcm(a, b) * s.random(kSmallCoefficient);
    const bool ok = lcm(a, b) == canonical_associate(a * b).canonical && divides(a * b, m);
    return ok ? std::string() : "a=" + a.to_string() + ", b=" + b.to_string();
  }, s.samples());
  s.constructed("lcm.pairwise_coprime_triple", Group::Arith, [&] {
    std::vector<Element> as;
    while (as.size() < 3) {
      Element c = s.random_nonzero(100);
      if (std::all_of(as.begin(), as.end(), [&](const Element& e) { return gcd(e, c) == one; })) {
        as.push_back(std::move(c));
      }
    }
    const Element m = lcm(lcm(as[0], as[1]), as[2]) * s.random_nonzero(100);
    const bool each = divides(as[0], m) && divides(as[1], m) && divides(as[2], m);
    const bool ok = each && divides(as[0] * as[1] * as[2], m);
    return ok ? std::string()
              : "a1=" + as[0].to_string() + ", a2=" + as[1].to_string() + ", a3=" + as[2].to_string();
  }, s.samples());
  s.unary("factor.round_trip", Group::Arith, [&](auto& x) {
    if (x.is_zero()) return true;
    const Factorization f = factor(x);
    if (f.expand() != x || !is_unit(f.unit())) return false;
    for (std::size_t i = 0; i < f.factors().size(); ++i) {
      const auto& [p, e] = f.factors()[i];
      if (e == 0 || !is_canonical(p)) return false;
      if (i > 0 && !factor_order_less(f.factors()[i - 1].first, p)) return false;
    }
    return true;
  }, true, kFactorCoefficient);
  s.unary("factor.irreducible_factors", Group::Arith, [](auto& x) {
    if (x.is_zero()) return true;
    const Factorization f = factor(x);
    return std::all_of(f.factors().begin(), f.factors().end(),
                       [](const auto& entry) { return is_irreducible(entry.first); });
  }, true, kFactorCoefficient);
  s.unary("factor.associate_invariance", Group::Arith, [&](auto& x) {
    if (x.is_zero()) return true;
    const auto reference = factor(x).factors();
    return std::all_of(units.begin(), units.end(),
                       [&](const Element& v) { return factor(x * v).factors() == reference; });
  }, true, kFactorCoefficient);
}

// Brute-force classification of A/zA from its multiplication table.
struct TableVerdict {
  bool field = true;
  bool zero_divisors = false;
};

TableVerdict classify_by_table(const Element& z) {
  TableVerdict v;
  const auto classes = residues(z);
  const Residue one(Element::one(z.ring()), ideal(z));
  std::vector<bool> invertible(classes.size(), false);
  // The table is symmetric; visit each unordered pair once.
  for (std::size_t a = 0; a < classes.size(); ++a) {
    if (classes[a].is_zero()) continue;
    for (std::size_t b = a; b < classes.size(); ++b) {
      if (classes[b].is_zero()) continue;
      const Residue p = classes[a] * classes[b];
      if (p.is_zero()) v.zero_divisors = true;
      if (p == one) invertible[a] = invertible[b] = true;
    }
  }
  for (std::size_t a = 0; a < classes.size(); ++a) {
    if (!classes[a].is_zero() && !invertible[a]) v.field = false;
  }
  return v;
}

void ideal_properties(Suite& s) {
  const RingDescriptor ring = s.ring();
  s.binary("ideals.inclusion_chain", Group::Ideals, [](auto& a, auto& b) {
    if (a.is_zero() || b.is_zero()) return true;
    return divides(ideal_sum(ideal(a), ideal(b)).generator(),
                   ideal_intersect(ideal(a), ideal(b)).generator()).has_value();
  });
  s.binary("ideals.sum_contains_generators", Group::Ideals, [](auto& a, auto& b) {
    if (a.is_zero() && b.is_zero()) return true;
    const PrincipalIdeal sum = ideal_sum(ideal(a), ideal(b));
    return contains(sum, a) && contains(sum, b);
  });
  s.binary("ideals.intersection_is_common_multiples", Group::Ideals, [](auto& a, auto& b) {
    if (a.is_zero() || b.is_zero()) return true;
    const PrincipalIdeal meet = ideal_intersect(ideal(a), ideal(b));
    const Element m = a * b;
    return contains(meet, m) && contains(ideal(a), meet.generator()) &&
           contains(ideal(b), meet.generator());
  });
  s.binary("ideals.maximality", Group::Ideals, [](auto& z, auto& x) {
    if (!is_irreducible(z) || contains(ideal(z), x)) return true;
    return ideal_sum(ideal(z), ideal(x)).is_whole_ring();
  }, true, 12);

  // Every modulus with norm_sq in [2, 50].
  PropertyResult classification{"quotient.classification", Group::Ideals, true, 0, {}};
  PropertyResult counts{"residues.count", Group::Ideals, true, 0, {}};
  for (const Element& z : box(ring, 8)) {
    const Integer n = z.is_zero() ? Integer(0) : norm_sq(z).value;
    if (n < 2 || n > 50) continue;
    ++classification.checks;
    ++counts.checks;
    const QuotientKind kind = quotient_kind(z);
    const TableVerdict t = classify_by_table(z);
    const bool agrees = (kind == QuotientKind::Field) == t.field &&
                        (kind == QuotientKind::NotEntire) == t.zero_divisors;
    if (!agrees && classification.passed) {
      classification.passed = false;
      classification.counterexample = "z=" + z.to_string() + " kind=" + std::string(to_string(kind));
    }
    const Integer expected = ring.kind() == RingKind::RationalIntegers ? Integer(abs(z[0])) : n;
    if (residues(z).size() != expected.get_ui() && counts.passed) {
      counts.passed = false;
      counts.counterexample = "z=" + z.to_string();
    }
  }
  s.push(std::move(classification));
  s.push(std::move(counts));
}

}  // namespace

std::vector<PropertyResult> run(const RingDescriptor& ring, const Options& options) {
  Suite suite(ring, options);
  if (suite.wants(Group::Core)) core_properties(suite);
  if (suite.wants(Group::Star)) star_properties(suite);
  if (ring.is_euclidean()) {
    if (suite.wants(Group::Arith)) arith_properties(suite);
    if (suite.wants(Group::Ideals)) ideal_properties(suite);
  }
  return suite.take();
}

}  // namespace starring::axioms
