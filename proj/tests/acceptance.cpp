// Acceptance gate: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <bitset>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "expr_gen.hpp"
#include "golden.hpp"
#include "oracle.hpp"
#include "starring/arith.hpp"
#include "starring/axioms.hpp"
#include "starring/cyclo.hpp"
#include "starring/expr.hpp"
#include "starring/ideals.hpp"
#include "starring/liealg.hpp"
#include "starring/star.hpp"

using namespace starring;

namespace {

const RingDescriptor Z = RingDescriptor::integers();
const RingDescriptor G = RingDescriptor::gaussian();
const RingDescriptor E = RingDescriptor::eisenstein();

// Collects the first few failures of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what, std::size_t weight = 1) {
    count_ += weight;
    if (ok) return;
    if (failures_++ < 3) detail_ += (detail_.empty() ? "" : "; ") + what;
  }
  bool passed() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << count_ << " checks";
    if (failures_) s << ", " << failures_ << " failed: " << detail_;
    return s.str();
  }

 private:
  std::size_t count_ = 0;
  std::size_t failures_ = 0;
  std::string detail_;
};

int failed = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Check&)>& body) {
  Check check;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  check.expect(secs < limit_s, "runtime " + std::to_string(secs) + " s over limit");
  const bool ok = check.passed();
  if (!ok) ++failed;
  std::printf("%s %2d %-34s %7.2f s / %5.0f s  %s\n", ok ? "PASS" : "FAIL", id, title, secs, limit_s,
              check.summary().c_str());
  std::fflush(stdout);
}

Element g(long a, long b) { return Element(G, {a, b}); }

std::set<oracle::Pair> as_pairs(const std::vector<Element>& xs) {
  std::set<oracle::Pair> out;
  for (const Element& x : xs) out.insert(oracle::to_pair(x));
  return out;
}

// ---------------------------------------------------------------------------

void reference_values(Check& c) {
  const Element one_i = g(1, 1);
  c.expect(norm_sq(one_i).value == 2, "norm_sq(1+i) = 2");
  c.expect(std::abs(magnitude_approx(one_i) - std::sqrt(2.0)) <= 1e-12, "|1+i| = sqrt 2");
  for (long s : {1L, -1L}) {
    const auto u = unit_part(g(1, s)).embed();
    c.expect(std::abs(u - std::complex<double>(1, s) / std::sqrt(2.0)) <= 1e-12, "u(1+-i)");
  }
  c.expect(conj(Element::root(G, 1)) == g(0, -1), "conj(i) = -i");
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  std::vector<long> ks = {0, 1, -1, 1000000, -1000000};
  for (int n = 0; n < 20000; ++n) ks.push_back(d(rng));
  for (long k : ks) {
    const Element x = Element::integer(Z, k);
    c.expect(magnitude_approx(x) == std::abs(static_cast<double>(k)), "N(k) = abs(k)");
    c.expect(norm_sq(x).value == k * k, "N(k)^2 = k^2");
  }
}

void unit_groups(Check& c) {
  c.expect(as_pairs(unit_group(G)) == std::set<oracle::Pair>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}},
           "U(Z[i])");
  // j* = -1 - j
  c.expect(as_pairs(unit_group(E)) ==
               std::set<oracle::Pair>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {-1, -1}, {1, 1}},
           "U(Z[j])");
  std::set<long> zu;
  for (const Element& u : unit_group(Z)) zu.insert(u[0].get_si());
  c.expect(zu == std::set<long>{1, -1}, "U(Z)");
  std::set<long> zbrute;
  for (long a = -2; a <= 2; ++a) {
    for (long b = -2; b <= 2; ++b) {
      if (a * b == 1) zbrute.insert(a);
    }
  }
  c.expect(zu == zbrute, "U(Z) brute force");
  for (bool eis : {false, true}) {
    const auto brute = oracle::units(eis);
    c.expect(as_pairs(unit_group(eis ? E : G)) == std::set<oracle::Pair>(brute.begin(), brute.end()),
             "brute force units");
    c.expect(unit_group(eis ? E : G).size() == brute.size(), "no duplicates");
  }
}

void axiom_suite(Check& c) {
  axioms::Options opts;
  opts.samples = 10000;
  opts.seed = 2024;
  opts.box_radius = 3;
  opts.groups = {axioms::Group::Core, axioms::Group::Star};
  for (const RingDescriptor& R : {Z, G, E, RingDescriptor::cyclotomic(5)}) {
    for (const auto& r : axioms::run(R, opts)) {
      c.expect(r.passed, R.name() + " " + r.name + ": " + r.counterexample, r.checks);
    }
  }
}

std::map<std::string, unsigned> factor_multiset(const Factorization& f) {
  std::map<std::string, unsigned> out;
  for (const auto& [p, k] : f.factors()) out[p.to_string()] += k;
  return out;
}

void factorization(Check& c) {
  for (bool eis : {false, true}) {
    const RingDescriptor& R = eis ? E : G;
    for (const auto& p : oracle::ball(eis, 200)) {
      if (oracle::norm(eis, p) < 2) continue;
      const Element x = oracle::to_element(R, p);
      const Factorization f = factor(x);
      c.expect(f.expand() == x, "round trip " + x.to_string());
      for (const auto& [q, k] : f.factors()) {
        c.expect(is_irreducible(q), "irreducible " + q.to_string());
        c.expect(oracle::is_irreducible(eis, oracle::to_pair(q)), "oracle irreducible " + q.to_string());
      }
      const auto ms = factor_multiset(f);
      for (const Element& u : unit_group(R)) {
        c.expect(factor_multiset(factor(x * u)) == ms, "associate invariance " + x.to_string());
      }
    }
  }
}

void gcd_lcm_bezout(Check& c) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  for (const RingDescriptor& R : {Z, G, E}) {
    for (int n = 0; n < 10000; ++n) {
      std::vector<Integer> ca(R.rank()), cb(R.rank());
      for (auto& v : ca) v = d(rng);
      for (auto& v : cb) v = d(rng);
      const Element a(R, ca), b(R, cb);
      if (a.is_zero() || b.is_zero()) continue;
      const BezoutCertificate cert = gcd_bezout(a, b);
      c.expect(a * cert.x() + b * cert.y() == cert.g(), "certificate");
      const Element l = lcm(a, b);
      c.expect(associates(cert.g() * l, a * b).has_value(), "gcd * lcm ~ ab");
    }
  }
  // Maximality against brute-force common divisors, all pairs with norm <= 100.
  for (bool eis : {false, true}) {
    const RingDescriptor& R = eis ? E : G;
    const auto elems = oracle::ball(eis, 100);
    std::vector<oracle::Pair> nonzero;
    for (const auto& p : elems) {
      if (!oracle::is_zero(p)) nonzero.push_back(p);
    }
    std::map<oracle::Pair, std::set<oracle::Pair>> divisors;
    for (const auto& x : elems) {
      for (const auto& q : nonzero) {
        if (oracle::norm(eis, q) <= std::max<long long>(oracle::norm(eis, x), 1) &&
            oracle::divides(eis, q, x)) {
          divisors[x].insert(q);
        }
      }
    }
    for (const auto& a : elems) {
      for (const auto& b : elems) {
        if (oracle::is_zero(a) && oracle::is_zero(b)) continue;
        if (oracle::is_zero(a) || oracle::is_zero(b)) continue;
        const auto h = oracle::to_pair(gcd(oracle::to_element(R, a), oracle::to_element(R, b)));
        const auto& da = divisors[a];
        const auto& db = divisors[b];
        bool ok = da.count(h) && db.count(h);
        const long long nh = oracle::norm(eis, h);
        for (const auto& q : da) {
          if (db.count(q) && oracle::norm(eis, q) > nh) ok = false;
        }
        c.expect(ok, "gcd maximal");
      }
    }
  }
  // Euclid's lemma on constructed triples: gcd(a, b) = 1 and c = a*m.
  std::uniform_int_distribution<long> s(-50, 50);
  int built = 0;
  while (built < 1000) {
    const bool eis = built % 2 == 1;
    const RingDescriptor& R = eis ? E : G;
    const Element a = oracle::to_element(R, {s(rng), s(rng)});
    const Element b = oracle::to_element(R, {s(rng), s(rng)});
    if (a.is_zero() || b.is_zero() || gcd(a, b) != Element::one(R)) continue;
    const Element m = oracle::to_element(R, {s(rng), s(rng)});
    const Element cc = a * m + oracle::to_element(R, {built % 3, 0}) * a;
    c.expect(euclid_lemma_check(a, b, cc), "euclid lemma");
    c.expect(divides(a, b * cc).has_value() && divides(a, cc).has_value(), "a | bc and a | c");
    ++built;
  }
}

void ideal_correspondences(Check& c) {
  constexpr std::size_t M = 1000;
  for (long a = 1; a <= 30; ++a) {
    for (long b = 1; b <= 30; ++b) {
      const long h = ideal_sum(ideal(Element::integer(Z, a)), ideal(Element::integer(Z, b)))
                         .generator()[0].get_si();
      const long l = ideal_intersect(ideal(Element::integer(Z, a)), ideal(Element::integer(Z, b)))
                         .generator()[0].get_si();
      std::bitset<M> as, bs, sum, hs;
      for (std::size_t x = 0; x < M; ++x) {
        as.set(a * x % M);
        bs.set(b * x % M);
        hs.set(h * x % M);
      }
      for (std::size_t x = 0; x < M; ++x) {
        if (as.test(x)) sum |= (bs << x) | (bs >> (M - x));
      }
      c.expect(sum == hs, "aZ + bZ = gcd Z mod M");
      bool common_ok = true;
      for (long m = 1; m <= static_cast<long>(M); ++m) {
        common_ok &= (m % a == 0 && m % b == 0) == (m % l == 0);
      }
      c.expect(common_ok, "aZ cap bZ = lcm Z up to M");
      // Coprimality criterion, both directions.
      bool only_units = true;
      for (long d = 2; d <= std::min(a, b); ++d) {
        if (a % d == 0 && b % d == 0) only_units = false;
      }
      c.expect(only_units == (h == 1), "D(a,b) = U iff aZ + bZ = Z");
    }
  }
  std::mt19937_64 rng(9);
  const auto ball = oracle::ball(false, 100);
  std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
  std::uniform_int_distribution<long> small(-6, 6);
  int pairs = 0;
  while (pairs < 200) {
    const auto a = ball[pick(rng)];
    const auto b = ball[pick(rng)];
    if (oracle::is_zero(a) || oracle::is_zero(b)) continue;
    ++pairs;
    const Element ea = oracle::to_element(G, a), eb = oracle::to_element(G, b);
    const PrincipalIdeal sum = ideal_sum(ideal(ea), ideal(eb));
    const PrincipalIdeal meet = ideal_intersect(ideal(ea), ideal(eb));
    const auto h = oracle::to_pair(sum.generator());
    for (int t = 0; t < 20; ++t) {
      const oracle::Pair x{small(rng), small(rng)}, y{small(rng), small(rng)};
      const auto ax = oracle::mul(false, a, x), by = oracle::mul(false, b, y);
      const oracle::Pair v{ax.first + by.first, ax.second + by.second};
      c.expect(oracle::divides(false, h, v), "ax + by in (gcd)");
      // g*k lies in aA + bA: some x from a residue system of b works.
      const auto target = oracle::mul(false, h, x);
      bool found = false;
      for (const auto& r : oracle::ball(false, oracle::norm(false, b))) {
        const auto ar = oracle::mul(false, a, r);
        if (oracle::divides(false, b, {target.first - ar.first, target.second - ar.second})) {
          found = true;
          break;
        }
      }
      c.expect(found, "g k in aA + bA");
      const auto multiple = oracle::mul(false, a, x);
      c.expect(contains(meet, oracle::to_element(G, multiple)) == oracle::divides(false, b, multiple),
               "common multiple iff in (lcm)");
    }
    bool only_units = true;
    for (const auto& q : ball) {
      if (oracle::norm(false, q) > 1 && oracle::divides(false, q, a) && oracle::divides(false, q, b)) {
        only_units = false;
      }
    }
    c.expect(only_units == sum.is_whole_ring(), "Gaussian coprimality criterion");
  }
}

// Congruence in Z[i]: z | w iff w * conj(z) is divisible by N(z) componentwise.
bool congruent(oracle::Pair z, oracle::Pair x, oracle::Pair y) {
  const long long n = oracle::norm(false, z);
  const auto w = oracle::mul(false, {x.first - y.first, x.second - y.second}, {z.first, -z.second});
  return w.first % n == 0 && w.second % n == 0;
}

void quotient_classification(Check& c) {
  for (const auto& z : oracle::ball(false, 50)) {
    const long long n = oracle::norm(false, z);
    if (n < 2) continue;
    std::vector<oracle::Pair> reps;
    for (const auto& x : oracle::ball(false, n)) {
      bool fresh = true;
      for (const auto& r : reps) fresh = fresh && !congruent(z, x, r);
      if (fresh) reps.push_back(x);
    }
    c.expect(static_cast<long long>(reps.size()) == n, "brute residue count");
    auto class_of = [&](oracle::Pair x) {
      for (std::size_t k = 0; k < reps.size(); ++k) {
        if (congruent(z, x, reps[k])) return k;
      }
      return reps.size();
    };
    const std::size_t zero = class_of({0, 0}), one = class_of({1, 0});
    bool field = true, zero_divisors = false;
    for (std::size_t a = 0; a < reps.size(); ++a) {
      if (a == zero) continue;
      bool invertible = false;
      for (std::size_t b = 0; b < reps.size(); ++b) {
        const std::size_t p = class_of(oracle::mul(false, reps[a], reps[b]));
        if (p == one) invertible = true;
        if (b != zero && p == zero) zero_divisors = true;
      }
      field = field && invertible;
    }
    const Element ez = oracle::to_element(G, z);
    const QuotientKind kind = quotient_kind(ez);
    c.expect((kind == QuotientKind::Field) == field, "field iff all invertible " + ez.to_string());
    c.expect((kind == QuotientKind::NotEntire) == zero_divisors, "zero divisors " + ez.to_string());
    c.expect(static_cast<long long>(residues(ez).size()) == n, "residue count " + ez.to_string());
  }
}

void cyclotomic_audit(Check& c) {
  using namespace cyclo;
  for (unsigned n = 2; n <= 24; ++n) {
    c.expect(std::abs(root_sum(n)) <= 1e-9, "sum of roots");
    for (unsigned a = 0; a < n; ++a) {
      const RootIndex x(n, a);
      c.expect(root_mul(x, identity(n)) == x, "identity");
      c.expect(root_mul(x, root_star(x)) == identity(n), "inverse = star");
      c.expect(std::abs(root_star(x).embed() - std::conj(x.embed())) <= 1e-9, "star = conj");
      c.expect(root_pow(RootIndex(n, 1), a) == x, "e_{n,1} generates");
      for (unsigned b = 0; b < n; ++b) {
        const RootIndex y(n, b);
        c.expect(root_mul(x, y) == root_mul(y, x), "commutative");
        c.expect(std::abs(root_mul(x, y).embed() - x.embed() * y.embed()) <= 1e-9, "embedding");
        for (unsigned w = 0; w < n; ++w) {
          const RootIndex z(n, w);
          c.expect(root_mul(root_mul(x, y), z) == root_mul(x, root_mul(y, z)), "associative");
        }
      }
    }
  }
  for (unsigned n : {1u, 2u, 3u, 4u, 5u, 7u, 11u, 13u}) {
    c.expect(freeness_check(n).free(), "free at n = " + std::to_string(n));
  }
  c.expect(!freeness_check(9).free(), "not free at n = 9");
}

lie::StructureConstants random_real_antisymmetric(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-20, 20);
  lie::StructureConstants c(n, G);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const long v = d(rng);
        c.set(i, j, k, g(v, 0));
        c.set(j, i, k, g(-v, 0));
      }
    }
  }
  return c;
}

void lie_checks(Check& c) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-20, 20);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + t % 5;
    const lie::StructureConstants real = random_real_antisymmetric(n, rng);
    c.expect(lie::check_star_antisymmetry(real), "real antisymmetric passes");
    lie::StructureConstants any(n, G);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) any.set(i, j, k, g(d(rng), d(rng)));
      }
    }
    c.expect(lie::shift_constants(any, lie::ShiftVector::zero(n, G)) == any, "shift by 0");
    c.expect(lie::shift_constants(real, lie::ShiftVector::zero(n, G)) == real, "shift by 0");
  }
  // Positive: no bracket touches e_0.
  lie::StructureConstants pos(3, G);
  pos.set(1, 2, 1, g(4, 0));
  pos.set(2, 1, 1, g(-4, 0));
  const lie::DegeneracyReport ok = lie::degeneracy_report(pos, lie::ShiftVector({g(0, 0), g(1, 2), g(5, -1)}));
  c.expect(ok.well_defined && ok.offending.empty(), "well defined");
  c.expect(ok.degenerate_witnesses == std::vector<std::size_t>{0, 1, 2}, "every i degenerate");
  c.expect(lie::degeneracy_report(lie::StructureConstants(1, G), lie::ShiftVector::zero(1, G)).well_defined,
           "abelian 1-dim");
  // Negative: c^1_20 = 1, c^1_02 = -1, Re(v_2) != 0.
  lie::StructureConstants neg(3, G);
  neg.set(2, 0, 1, g(1, 0));
  neg.set(0, 2, 1, g(-1, 0));
  const lie::DegeneracyReport bad = lie::degeneracy_report(neg, lie::ShiftVector({g(0, 0), g(0, 0), g(2, 7)}));
  c.expect(!bad.well_defined, "not well defined");
  c.expect(bad.offending.size() == 1 && bad.offending[0].i == 2 && bad.offending[0].k == 1,
           "offending pair (2,1)");
}

void cli_contract(Check& c) {
  for (const golden::Case& gc : golden::load_cases()) {
    const golden::Outcome got = golden::run_case(gc);
    c.expect(got.exit_code == gc.exit_code, gc.name + " exit code");
    c.expect(got.text == golden::slurp(golden::expected_file(gc)), gc.name + " output");
  }
  exprgen::Generator gen(77);
  for (int n = 0; n < 10000; ++n) {
    const std::string text = gen.text(5);
    const expr::Expr tree = expr::parse(text);
    c.expect(expr::parse(expr::render(tree)) == tree, "round trip " + text);
  }
}

}  // namespace

int main() {
  criterion(1, "reference values", 1, reference_values);
  criterion(2, "unit groups", 1, unit_groups);
  criterion(3, "axiom suite", 30, axiom_suite);
  criterion(4, "factorization", 60, factorization);
  criterion(5, "gcd / lcm / bezout", 60, gcd_lcm_bezout);
  criterion(6, "ideal correspondences", 30, ideal_correspondences);
  criterion(7, "quotient classification", 30, quotient_classification);
  criterion(8, "cyclotomic audit", 10, cyclotomic_audit);
  criterion(9, "lie shift checks", 10, lie_checks);
  criterion(10, "cli contract", 10, cli_contract);
  std::printf("%d of 10 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
