#include "starring/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "starring/arith.hpp"
#include "starring/axioms.hpp"
#include "starring/cyclo.hpp"
#include "starring/expr.hpp"
#include "starring/ideals.hpp"
#include "starring/star.hpp"

namespace starring::cli {

using ojson = nlohmann::ordered_json;

namespace {

std::string fmt_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string fmt_complex(std::complex<double> z) {
  std::string out = fmt_double(z.real());
  out += z.imag() < 0 ? "-" : "+";
  out += fmt_double(std::abs(z.imag())) + "i";
  return out;
}

ojson coeffs_json(const Element& x) {
  ojson arr = ojson::array();
  for (const Integer& c : x.coeffs()) arr.push_back(c.get_str());
  return arr;
}

std::string plural(std::size_t n, const char* word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

struct Options {
  std::string ring = "z";
  std::string format = "text";
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  long bound = kDefaultResidueBound;
  bool use_stdin = false;
  std::string constants;
  std::string vector;
};

// One command result: JSON object plus its text rendering.
struct Result {
  ojson json;
  std::string text;
  int exit_code = 0;
};

Error usage(const std::string& message) { return Error(ErrorCode::InvalidInput, message); }

void require_args(const std::vector<std::string>& args, std::size_t n, const std::string& command) {
  if (args.size() != n) {
    throw usage(command + " expects " + plural(n, "argument") + ", got " +
                std::to_string(args.size()));
  }
}

unsigned parse_order(const std::string& s) {
  unsigned n = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc() || ptr != s.data() + s.size() || n == 0) {
    throw usage("expected a positive integer order, got '" + s + "'");
  }
  return n;
}

// ---------------------------------------------------------------------------
// Lie constants

Element entry_from_json(const nlohmann::json& j) {
  const RingDescriptor ring = RingDescriptor::gaussian();
  auto scalar = [](const nlohmann::json& v) -> Integer {
    if (v.is_number_integer()) return Integer(v.dump(), 10);
    if (v.is_string()) {
      Integer out;
      if (out.set_str(v.get<std::string>(), 10) != 0) {
        throw usage("bad integer string " + v.dump());
      }
      return out;
    }
    throw usage("expected an integer, got " + v.dump());
  };
  if (j.is_array()) {
    if (j.size() != 2) throw usage("complex entries are [re, im] pairs, got " + j.dump());
    return Element(ring, {scalar(j[0]), scalar(j[1])});
  }
  return Element::integer(ring, scalar(j));
}

nlohmann::json scalar_to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

nlohmann::json entry_to_json(const Element& e) {
  if (e.is_rational()) return scalar_to_json(e[0]);
  return nlohmann::json::array({scalar_to_json(e[0]), scalar_to_json(e[1])});
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw usage("cannot open " + path);
  try {
    return nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw usage(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------

class Runner {
 public:
  Runner(Options opts, std::istream& in) : opts_(std::move(opts)), in_(in) {}

  Result dispatch(const std::string& command, std::vector<std::string> args) {
    using Handler = std::function<Result(Runner&, const std::vector<std::string>&)>;
    static const std::map<std::string, std::pair<int, Handler>> table = {
        // Arity -1: one result per argument.
        {"eval", {-1, &Runner::eval}},
        {"norm", {-1, &Runner::norm}},
        {"conj", {-1, &Runner::conj_cmd}},
        {"unitpart", {-1, &Runner::unitpart}},
        {"re", {-1, &Runner::re}},
        {"im", {-1, &Runner::im}},
        {"divides", {2, &Runner::divides_cmd}},
        {"gcd", {2, &Runner::gcd_cmd}},
        {"lcm", {2, &Runner::lcm_cmd}},
        {"factor", {-1, &Runner::factor_cmd}},
        {"units", {0, &Runner::units}},
        {"ideal-sum", {2, &Runner::ideal_sum_cmd}},
        {"ideal-intersect", {2, &Runner::ideal_intersect_cmd}},
        {"ideal-product", {2, &Runner::ideal_product_cmd}},
        {"quotient", {-1, &Runner::quotient}},
        {"residues", {1, &Runner::residues_cmd}},
        {"inverse-mod", {2, &Runner::inverse_mod}},
        {"cyclo-table", {1, &Runner::cyclo_table}},
        {"cyclo-free", {-1, &Runner::cyclo_free}},
        {"lie-shift", {0, &Runner::lie_shift}},
        {"lie-check", {0, &Runner::lie_check}},
        {"axioms", {0, &Runner::axioms_cmd}},
    };
    const auto it = table.find(command);
    if (it == table.end()) throw usage("unknown command " + command);
    if (opts_.use_stdin) {
      std::string line;
      while (std::getline(in_, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) args.push_back(line);
      }
    }
    const auto& [arity, handler] = it->second;
    if (arity >= 0) {
      require_args(args, static_cast<std::size_t>(arity), command);
      return handler(*this, args);
    }
    if (args.empty()) throw usage(command + " expects at least one argument");
    // Batch mode: results separated by newlines, JSON as one object per line.
    Result all;
    for (const std::string& a : args) {
      Result r = handler(*this, {a});
      all.text += (all.text.empty() ? "" : "\n") + r.text;
      all.json.push_back(r.json);
      all.exit_code = std::max(all.exit_code, r.exit_code);
    }
    if (args.size() == 1) all.json = all.json[0];
    return all;
  }

  bool json() const { return opts_.format == "json"; }

 private:
  RingDescriptor ring() const { return RingDescriptor::parse(opts_.ring); }

  Element element(const std::string& text) const { return expr::parse_element(text, ring()); }

  Result eval(const std::vector<std::string>& a) {
    const Element x = element(a[0]);
    return {ojson{{"ring", x.ring().name()}, {"value", x.to_string()}, {"coeffs", coeffs_json(x)}},
            x.to_string()};
  }

  Result norm(const std::vector<std::string>& a) {
    const Element x = element(a[0]);
    const NormSquare n = norm_sq(x);
    const double m = magnitude_approx(x);
    return {ojson{{"norm_sq", n.value.get_str()}, {"magnitude", m}},
            "norm_sq = " + n.value.get_str() + "\nmagnitude = " + fmt_double(m)};
  }

  Result conj_cmd(const std::vector<std::string>& a) {
    const Element c = conj(element(a[0]));
    return {ojson{{"value", c.to_string()}}, c.to_string()};
  }

  Result unitpart(const std::vector<std::string>& a) {
    const UnitPart u = unit_part(element(a[0]));
    const auto e = u.embed();
    const std::string num = u.numerator.to_string();
    return {ojson{{"numerator", num},
                  {"norm_sq", u.norm_square.value.get_str()},
                  {"embedding", {e.real(), e.imag()}}},
            "u = (" + num + ")/sqrt(" + u.norm_square.value.get_str() + ")\nembedding = " +
                fmt_complex(e)};
  }

  Result re(const std::vector<std::string>& a) {
    const Element x = element(a[0]);
    const Element r = re2(x);
    return {ojson{{"re2", r.to_string()}, {"re_approx", re_approx(x)}},
            "2Re = " + r.to_string() + "\nRe = " + fmt_double(re_approx(x))};
  }

  Result im(const std::vector<std::string>& a) {
    const Element x = element(a[0]);
    const Element r = im2i(x);
    return {ojson{{"im2i", r.to_string()}, {"im_approx", im_approx(x)}},
            "2iIm = " + r.to_string() + "\nIm = " + fmt_double(im_approx(x))};
  }

  Result divides_cmd(const std::vector<std::string>& a) {
    const auto w = divides(element(a[0]), element(a[1]));
    if (!w) return {ojson{{"divides", false}, {"witness", nullptr}}, "false"};
    return {ojson{{"divides", true}, {"witness", w->to_string()}},
            "true (witness " + w->to_string() + ")"};
  }

  Result gcd_cmd(const std::vector<std::string>& a) {
    const BezoutCertificate c = gcd_bezout(element(a[0]), element(a[1]));
    return {ojson{{"gcd", c.g().to_string()}, {"x", c.x().to_string()}, {"y", c.y().to_string()}},
            "gcd = " + c.g().to_string() + "\nx = " + c.x().to_string() +
                "\ny = " + c.y().to_string()};
  }

  Result lcm_cmd(const std::vector<std::string>& a) {
    const Element l = lcm(element(a[0]), element(a[1]));
    return {ojson{{"lcm", l.to_string()}}, l.to_string()};
  }

  Result factor_cmd(const std::vector<std::string>& a) {
    const Element x = element(a[0]);
    const Factorization f = factor(x);
    ojson factors = ojson::array();
    std::string text = x.to_string() + " = " + f.unit().to_string();
    for (const auto& [p, e] : f.factors()) {
      factors.push_back(ojson::array({p.to_string(), e}));
      text += " * (" + p.to_string() + ")";
      if (e != 1) text += "^" + std::to_string(e);
    }
    return {ojson{{"unit", f.unit().to_string()}, {"factors", factors}}, text};
  }

  Result units(const std::vector<std::string>&) {
    ojson list = ojson::array();
    std::string text;
    for (const Element& v : unit_group(ring())) {
      list.push_back(v.to_string());
      text += (text.empty() ? "" : "\n") + v.to_string();
    }
    return {ojson{{"ring", ring().name()}, {"count", list.size()}, {"units", list}}, text};
  }

  Result ideal_result(const PrincipalIdeal& I) {
    const std::string g = I.generator().to_string();
    return {ojson{{"generator", g}}, "(" + g + ")"};
  }

  Result ideal_sum_cmd(const std::vector<std::string>& a) {
    return ideal_result(ideal_sum(ideal(element(a[0])), ideal(element(a[1]))));
  }

  Result ideal_intersect_cmd(const std::vector<std::string>& a) {
    return ideal_result(ideal_intersect(ideal(element(a[0])), ideal(element(a[1]))));
  }

  Result ideal_product_cmd(const std::vector<std::string>& a) {
    return ideal_result(ideal_product(ideal(element(a[0])), ideal(element(a[1]))));
  }

  Result quotient(const std::vector<std::string>& a) {
    const Element z = element(a[0]);
    const std::string kind(to_string(quotient_kind(z)));
    return {ojson{{"modulus", z.to_string()}, {"kind", kind}}, kind};
  }

  Result residues_cmd(const std::vector<std::string>& a) {
    const Element z = element(a[0]);
    const auto classes = residues(z, Integer(opts_.bound));
    ojson list = ojson::array();
    std::string text = "count = " + std::to_string(classes.size());
    for (const Residue& r : classes) {
      list.push_back(r.representative().to_string());
      text += "\n" + r.representative().to_string();
    }
    return {ojson{{"modulus", PrincipalIdeal(z).generator().to_string()},
                  {"count", classes.size()},
                  {"residues", list}},
            text};
  }

  Result inverse_mod(const std::vector<std::string>& a) {
    const Residue r(element(a[0]), ideal(element(a[1])));
    const Residue inv = r.inverse();
    const std::string s = inv.representative().to_string();
    return {ojson{{"residue", r.representative().to_string()},
                  {"modulus", r.modulus().generator().to_string()},
                  {"inverse", s}},
            s};
  }

  Result cyclo_table(const std::vector<std::string>& a) {
    const unsigned n = parse_order(a[0]);
    if (n > 1000) throw usage("cyclo-table is limited to n <= 1000");
    const auto basis = cyclo::basis_indices(n);
    const auto reals = cyclo::real_roots(n);
    ojson roots = ojson::array();
    std::string text = "k\tstar\torder\treal\tbasis\tembedding";
    for (unsigned k = 0; k < n; ++k) {
      const cyclo::RootIndex r(n, k);
      const bool real = std::find(reals.begin(), reals.end(), r) != reals.end();
      const bool in_basis = std::find(basis.begin(), basis.end(), k) != basis.end();
      const auto e = r.embed();
      roots.push_back(ojson{{"k", k},
                            {"star", cyclo::root_star(r).index()},
                            {"order", cyclo::root_order_of(r)},
                            {"real", real},
                            {"basis", in_basis},
                            {"re", e.real()},
                            {"im", e.imag()}});
      text += "\n" + std::to_string(k) + "\t" + std::to_string(cyclo::root_star(r).index()) +
              "\t" + std::to_string(cyclo::root_order_of(r)) + "\t" + (real ? "yes" : "no") +
              "\t" + (in_basis ? "yes" : "no") + "\t" + fmt_complex(e);
    }
    return {ojson{{"n", n}, {"roots", roots}}, text};
  }

  Result cyclo_free(const std::vector<std::string>& a) {
    const unsigned n = parse_order(a[0]);
    const cyclo::FreenessReport rep = cyclo::freeness_check(n);
    return {ojson{{"n", n},
                  {"family", cyclo::basis_indices(n)},
                  {"family_size", rep.family_size},
                  {"rank", rep.rank},
                  {"free", rep.free()}},
            "n = " + std::to_string(n) + ": family of " + std::to_string(rep.family_size) +
                ", rank " + std::to_string(rep.rank) + ", " + (rep.free() ? "free" : "not free")};
  }

  lie::StructureConstants constants() const {
    if (opts_.constants.empty()) throw usage("--constants FILE is required");
    return constants_from_json(load_json(opts_.constants));
  }

  lie::ShiftVector shift(std::size_t n) const {
    if (opts_.vector.empty()) return lie::ShiftVector::zero(n, RingDescriptor::gaussian());
    try {
      return shift_from_json(nlohmann::json::parse(opts_.vector));
    } catch (const nlohmann::json::exception& e) {
      throw usage(std::string("--vector: ") + e.what());
    }
  }

  Result lie_shift(const std::vector<std::string>&) {
    const lie::StructureConstants c = constants();
    const lie::StructureConstants d = lie::shift_constants(c, shift(c.dim()));
    const nlohmann::json j = constants_to_json(d);
    return {ojson{{"constants", ojson::parse(j.dump())}}, j.dump()};
  }

  Result lie_check(const std::vector<std::string>&) {
    const lie::StructureConstants c = constants();
    const lie::ShiftVector v = shift(c.dim());
    const bool star_anti = lie::check_star_antisymmetry(c);
    const lie::DegeneracyReport rep = lie::degeneracy_report(c, v);
    ojson offending = ojson::array();
    std::string offending_text;
    for (const auto& o : rep.offending) {
      offending.push_back(ojson{{"i", o.i}, {"k", o.k}, {"discrepancy", o.discrepancy.to_string()}});
      offending_text += " (" + std::to_string(o.i) + "," + std::to_string(o.k) + ")";
    }
    std::string witnesses_text;
    for (std::size_t i : rep.degenerate_witnesses) witnesses_text += " " + std::to_string(i);
    auto yn = [](bool b) { return b ? std::string("true") : std::string("false"); };
    return {ojson{{"dimension", c.dim()},
                  {"real", c.is_real()},
                  {"antisymmetric", c.is_antisymmetric()},
                  {"star_antisymmetric", star_anti},
                  {"well_defined", rep.well_defined},
                  {"degenerate_witnesses", rep.degenerate_witnesses},
                  {"offending", offending}},
            "dimension = " + std::to_string(c.dim()) + "\nreal = " + yn(c.is_real()) +
                "\nantisymmetric = " + yn(c.is_antisymmetric()) +
                "\nstar_antisymmetric = " + yn(star_anti) +
                "\nwell_defined = " + yn(rep.well_defined) +
                "\ndegenerate_witnesses =" + (witnesses_text.empty() ? " none" : witnesses_text) +
                "\noffending =" + (offending_text.empty() ? " none" : offending_text)};
  }

  Result axioms_cmd(const std::vector<std::string>&) {
    if (opts_.samples == 0) throw usage("--samples must be at least 1");
    axioms::Options o;
    o.samples = opts_.samples;
    o.seed = opts_.seed;
    const auto results = axioms::run(ring(), o);
    ojson list = ojson::array();
    std::string text;
    std::size_t failed = 0;
    for (const auto& r : results) {
      list.push_back(ojson{{"property", r.name},
                           {"group", std::string(axioms::to_string(r.group))},
                           {"pass", r.passed},
                           {"checks", r.checks},
                           {"counterexample", r.passed ? ojson(nullptr) : ojson(r.counterexample)}});
      text += std::string(r.passed ? "PASS " : "FAIL ") + r.name + " (" + plural(r.checks, "check") + ")";
      if (!r.passed) {
        text += ": " + r.counterexample;
        ++failed;
      }
      text += "\n";
    }
    text += std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) +
            " properties passed";
    Result res{ojson{{"ring", ring().name()},
                     {"samples", opts_.samples},
                     {"seed", opts_.seed},
                     {"results", list},
                     {"all_pass", failed == 0}},
               text};
    res.exit_code = failed == 0 ? 0 : 1;
    return res;
  }

  Options opts_;
  std::istream& in_;
};

const std::vector<std::pair<std::string, std::string>>& command_help() {
  static const std::vector<std::pair<std::string, std::string>> commands = {
      {"eval", "Evaluate expressions to canonical form"},
      {"norm", "Exact norm_sq = x*conj(x) and float magnitude"},
      {"conj", "Complex conjugate"},
      {"unitpart", "Unit part x/N(x)"},
      {"re", "2Re(x) = x + conj(x) and the float real part"},
      {"im", "2iIm(x) = x - conj(x) and the float imaginary part"},
      {"divides", "Whether A divides B, with a witness"},
      {"gcd", "gcd with a Bezout certificate"},
      {"lcm", "Least common multiple"},
      {"factor", "Factorization into canonical irreducibles"},
      {"units", "The unit group of the ring"},
      {"ideal-sum", "(A) + (B)"},
      {"ideal-intersect", "(A) intersected with (B)"},
      {"ideal-product", "(A)(B)"},
      {"quotient", "Classify A/zA"},
      {"residues", "Enumerate A/zA"},
      {"inverse-mod", "Inverse of X modulo Z"},
      {"cyclo-table", "Table of the n-th roots of unity"},
      {"cyclo-free", "Rank audit of the family e_{n,0}..e_{n,n-2}"},
      {"lie-shift", "Shift Lie structure constants by --vector"},
      {"lie-check", "Star antisymmetry and degeneracy report for Lie constants"},
      {"axioms", "Run the property suite"},
  };
  return commands;
}

void print_error(const Error& e, bool json, std::ostream& out, std::ostream& err) {
  if (json) {
    ojson body{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    if (const auto* s = dynamic_cast<const expr::SyntaxError*>(&e)) {
      body["offset"] = s->offset();
      body["expected"] = s->expected();
    }
    out << ojson{{"error", body}}.dump() << "\n";
  } else {
    err << "error[" << to_string(e.code()) << "]: " << e.what() << "\n";
  }
}

}  // namespace

lie::StructureConstants constants_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw usage("constants must be a nonempty n x n x n array");
  const std::size_t n = j.size();
  lie::StructureConstants c(n, RingDescriptor::gaussian());
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) throw usage("constants must be n x n x n");
    for (std::size_t jj = 0; jj < n; ++jj) {
      const auto& row = j[i][jj];
      if (!row.is_array() || row.size() != n) throw usage("constants must be n x n x n");
      for (std::size_t k = 0; k < n; ++k) c.set(i, jj, k, entry_from_json(row[k]));
    }
  }
  return c;
}

nlohmann::json constants_to_json(const lie::StructureConstants& c) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < c.dim(); ++i) {
    nlohmann::json plane = nlohmann::json::array();
    for (std::size_t j = 0; j < c.dim(); ++j) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t k = 0; k < c.dim(); ++k) row.push_back(entry_to_json(c.at(i, j, k)));
      plane.push_back(std::move(row));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

lie::ShiftVector shift_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw usage("shift vector must be a JSON array");
  std::vector<Element> v;
  for (const auto& e : j) v.push_back(entry_from_json(e));
  return lie::ShiftVector(std::move(v));
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact arithmetic in Z, Z[i], Z[j] and Z[zeta_p]", "starring"};
  Options opts;
  app.add_option("--ring", opts.ring, "z, gaussian, eisenstein or cyclo<p>");
  app.add_option("--format", opts.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--samples", opts.samples, "Random samples per property (axioms)");
  app.add_option("--seed", opts.seed, "Random seed (axioms)");
  app.add_option("--bound", opts.bound, "Largest norm_sq enumerated by residues");
  app.add_flag("--stdin", opts.use_stdin, "Read extra arguments, one per line, from stdin");
  app.add_option("--constants", opts.constants, "JSON file with Lie structure constants");
  app.add_option("--vector", opts.vector, "JSON shift vector for lie-shift and lie-check");
  app.require_subcommand(1);

  std::vector<std::string> positional;
  std::string command;
  for (const auto& [name, help] : command_help()) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("args", positional, "Expressions or integers")->allow_extra_args();
    sub->callback([&command, n = name] { command = n; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error[Usage]: " << e.what() << "\n";
    return 2;
  }

  Runner runner(opts, in);
  try {
    Result r = runner.dispatch(command, positional);
    if (runner.json()) {
      if (r.json.is_array() && positional.size() + 0 != 1) {
        for (const auto& item : r.json) out << item.dump() << "\n";
      } else {
        out << r.json.dump() << "\n";
      }
    } else {
      out << r.text << "\n";
    }
    return r.exit_code;
  } catch (const Error& e) {
    print_error(e, runner.json(), out, err);
    return is_usage_error(e.code()) ? 2 : 1;
  }
}

}  // namespace starring::cli
