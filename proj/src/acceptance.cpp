#include "slzeta/acceptance.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "slzeta/circular_perms.hpp"
#include "slzeta/cli.hpp"
#include "slzeta/config.hpp"
#include "slzeta/exact_zeta.hpp"
#include "slzeta/expression.hpp"
#include "slzeta/sl/zeta.hpp"

namespace slzeta::acceptance {

namespace {

using perms::ValueSet;

// Collects failures; the first few are kept for the report line.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) {
      if (!messages_.empty()) messages_ += "; ";
      messages_ += what;
    }
  }
  bool ok() const { return failures_ == 0; }
  std::string summary(const std::string& on_success) const {
    if (ok()) return on_success;
    return std::to_string(failures_) + "/" + std::to_string(count_) +
           " checks failed: " + messages_;
  }

 private:
  int count_ = 0;
  int failures_ = 0;
  std::string messages_;
};

double rel_error(double value, double reference) {
  return std::abs(value - reference) / std::abs(reference);
}

std::string sci(double v) {
  std::ostringstream os;
  os << std::setprecision(2) << std::scientific << v;
  return os.str();
}

// ---- 1 ---------------------------------------------------------------------

std::string criterion_pairs_table(Checks& checks) {
  struct Row {
    ValueSet v;
    ValueSet p;
    const char* c;
  };
  const std::vector<Row> expected = {
      {{1}, {6}, "16"},          {{1, 2}, {3, 6}, "8"},
      {{1, 2}, {4, 6}, "16"},    {{1, 2}, {5, 6}, "32"},
      {{1, 3}, {4, 6}, "8"},     {{1, 3}, {5, 6}, "16"},
      {{1, 4}, {5, 6}, "8"},     {{1, 2, 3}, {4, 5, 6}, "12"},
      {{1, 2, 4}, {3, 5, 6}, "4"},
  };

  std::ostringstream out;
  std::ostringstream err;
  const int code =
      cli::run({"pairs", "--n", "6", "--format", "json"}, out, err);
  checks.expect(code == 0, "pairs exited with " + std::to_string(code));

  std::istringstream lines(out.str());
  std::string line;
  std::size_t row = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    const auto rec = nlohmann::json::parse(line);
    if (row < expected.size()) {
      const Row& want = expected[row];
      checks.expect(rec.at("n").get<int>() == 6, "n field");
      checks.expect(rec.at("V").get<ValueSet>() == want.v,
                    "V of row " + std::to_string(row + 1));
      checks.expect(rec.at("P").get<ValueSet>() == want.p,
                    "P of row " + std::to_string(row + 1));
      checks.expect(rec.at("class_number").get<std::string>() == want.c,
                    "class number of row " + std::to_string(row + 1));
    }
    ++row;
  }
  checks.expect(row == expected.size(),
                "expected 9 rows, got " + std::to_string(row));
  return "9 pairs, class numbers 16 8 16 32 8 16 8 12 4";
}

// ---- 2 ---------------------------------------------------------------------

std::string criterion_brute_force(Checks& checks) {
  for (int n = 2; n <= 9; ++n) {
    const auto partition = perms::partition_by_peak_sets(n);
    BigInt total = 0;
    std::uint64_t brute_total = 0;
    // Each value is a vale (digit 1), a pinnacle (2) or neither (0).
    std::size_t candidates = 1;
    for (int i = 0; i < n; ++i) candidates *= 3;
    for (std::size_t code = 0; code < candidates; ++code) {
      perms::PeakSets sets;
      std::size_t c = code;
      for (int value = 1; value <= n; ++value, c /= 3) {
        if (c % 3 == 1) sets.vales.push_back(value);
        if (c % 3 == 2) sets.pinnacles.push_back(value);
      }
      const BigInt closed = perms::class_number(n, sets.vales, sets.pinnacles);
      const auto it = partition.find(sets);
      const std::uint64_t counted = it == partition.end() ? 0 : it->second;
      checks.expect(closed == BigInt(static_cast<unsigned long>(counted)),
                    "n=" + std::to_string(n) + " candidate " +
                        std::to_string(code));
      total += closed;
      brute_total += counted;
    }
    const BigInt want = factorial(static_cast<unsigned long>(n - 1));
    checks.expect(total == want, "sum of class numbers at n=" +
                                     std::to_string(n));
    checks.expect(BigInt(static_cast<unsigned long>(brute_total)) == want,
                  "brute-force total at n=" + std::to_string(n));
  }
  // Direct class enumeration on the smaller sizes.
  for (int n = 2; n <= 6; ++n) {
    for (const auto& c : perms::enumerate_admissible_pairs(n)) {
      const auto members = perms::enumerate_class(n, c.vales, c.pinnacles);
      checks.expect(BigInt(static_cast<unsigned long>(members.size())) ==
                        c.class_number,
                    "enumerate_class at n=" + std::to_string(n));
    }
  }
  return "n=2..9, all 3^n disjoint candidates, sums = (n-1)!";
}

// ---- 3 ---------------------------------------------------------------------

std::string criterion_exact_zeta(Checks& checks) {
  const char* expected[] = {"1/6", "1/90", "1/945", "1/9450"};
  std::string got;
  for (int n = 1; n <= 4; ++n) {
    const std::string s = to_fraction_string(exact::zeta_even(n));
    checks.expect(s == expected[n - 1], "zeta_even(" + std::to_string(n) +
                                            ") = " + s);
    if (!got.empty()) got += ", ";
    got += s;
  }
  return "zeta(2n)/pi^(2n) = " + got;
}

// ---- 4 ---------------------------------------------------------------------

std::string criterion_bernoulli(Checks& checks) {
  for (int n = 2; n <= 20; ++n) {
    checks.expect(exact::bernoulli_via_pairs(n) == exact::bernoulli_oracle(2 * n),
                  "B_" + std::to_string(2 * n));
  }
  // Dropping the n (2n)! factor gives -1/1440 at n = 2 instead of B_4.
  Rational uncorrected(BigInt(-1), BigInt(4 * 15));
  uncorrected *= exact::pair_sum(2);
  uncorrected.canonicalize();
  checks.expect(uncorrected == Rational(-1, 1440),
                "uncorrected prefactor at n=2 gives " +
                    to_fraction_string(uncorrected));
  checks.expect(exact::bernoulli_oracle(4) / uncorrected == Rational(2 * 24),
                "ratio to the uncorrected value at n=2");
  return "B_4..B_40 from pair sums equal the recurrence";
}

// ---- 5 ---------------------------------------------------------------------

std::string criterion_mixed_model(Checks& checks) {
  const auto problem = config::preset("mixed-unit").to_problem();
  const sl::SolverOptions options;
  const auto basis = sl::solve_basis(problem, options.basis_intervals, options);
  const sl::NystromTrace trace(problem, 400, options);
  const auto spectrum = sl::eigenvalues(problem, 1000, options);

  double worst_theorem = 0.0;
  double worst_eigen = 0.0;
  double worst_trace = 0.0;
  for (int n = 2; n <= 5; ++n) {
    const double exact = exact::zeta_T_exact(n).get_d();
    const std::string tag = " n=" + std::to_string(n);
    const double t = rel_error(sl::zeta_by_theorem(basis, n, options).value, exact);
    const double e =
        rel_error(sl::zeta_from_spectrum(spectrum, problem.shift, n).value, exact);
    const double r = rel_error(trace.zeta(n).value, exact);
    checks.expect(t <= 1e-8, "theorem" + tag + " rel " + sci(t));
    checks.expect(e <= 1e-8, "eigen" + tag + " rel " + sci(e));
    checks.expect(r <= 1e-4, "trace" + tag + " rel " + sci(r));
    worst_theorem = std::max(worst_theorem, t);
    worst_eigen = std::max(worst_eigen, e);
    worst_trace = std::max(worst_trace, r);
  }
  return "max rel error theorem " + sci(worst_theorem) + ", eigen " +
         sci(worst_eigen) + ", trace " + sci(worst_trace);
}

// ---- 6 ---------------------------------------------------------------------

std::string criterion_dirichlet(Checks& checks) {
  const auto problem = config::preset("dirichlet-pi").to_problem();
  const double pi = std::numbers::pi;

  const auto eig = sl::zeta_by_eigen(problem, 1, 1000);
  const double diff = std::abs(eig.value - pi * pi / 6.0);
  checks.expect(diff <= eig.error_estimate,
                "eigen n=1 off by " + sci(diff) + " > bound " +
                    sci(eig.error_estimate));

  const sl::NystromTrace trace(problem, 400);
  const double r2 = rel_error(trace.zeta(2).value, std::pow(pi, 4) / 90.0);
  const double r3 = rel_error(trace.zeta(3).value, std::pow(pi, 6) / 945.0);
  checks.expect(r2 <= 1e-4, "trace n=2 rel " + sci(r2));
  checks.expect(r3 <= 1e-4, "trace n=3 rel " + sci(r3));
  return "eigen n=1 |diff| " + sci(diff) + " <= bound " +
         sci(eig.error_estimate) + "; trace rel " + sci(r2) + ", " + sci(r3);
}

// ---- 7 ---------------------------------------------------------------------

std::string criterion_linear_potential(Checks& checks) {
  const auto problem = config::preset("linear-potential").to_problem();
  const sl::SolverOptions options;
  const auto basis = sl::solve_basis(problem, options.basis_intervals, options);
  const sl::NystromTrace trace(problem, 400, options);
  const auto spectrum = sl::eigenvalues(problem, 1000, options);

  double worst_pair = 0.0;
  for (int n = 2; n <= 4; ++n) {
    const double t = sl::zeta_by_theorem(basis, n, options).value;
    const double r = trace.zeta(n).value;
    const double e = sl::zeta_from_spectrum(spectrum, problem.shift, n).value;
    const std::string tag = " n=" + std::to_string(n);
    const double tr = rel_error(t, r);
    const double te = rel_error(t, e);
    const double re = rel_error(r, e);
    checks.expect(tr <= 1e-4, "theorem/trace" + tag + " " + sci(tr));
    checks.expect(te <= 1e-4, "theorem/eigen" + tag + " " + sci(te));
    checks.expect(re <= 1e-4, "trace/eigen" + tag + " " + sci(re));
    worst_pair = std::max({worst_pair, tr, te, re});
  }

  const double drift = basis.wronskian_drift();
  checks.expect(drift <= 1e-9, "Wronskian drift " + sci(drift));

  double asym = 0.0;
  double scale = 0.0;
  double residual = 0.0;
  const int samples = 41;
  for (int i = 0; i <= samples; ++i) {
    const double s = problem.a + (problem.b - problem.a) * i / samples;
    residual = std::max({residual, std::abs(basis.boundary_residual_a(s)),
                         std::abs(basis.boundary_residual_b(s))});
    for (int j = 0; j <= samples; ++j) {
      // Offset the second grid so that s != t off the diagonal.
      const double t =
          problem.a + (problem.b - problem.a) * (j + 0.37) / (samples + 1);
      const double g = basis.green(s, t);
      asym = std::max(asym, std::abs(g - basis.green(t, s)));
      scale = std::max(scale, std::abs(g));
    }
  }
  const double rel_asym = asym / scale;
  checks.expect(rel_asym <= 1e-8, "Green asymmetry " + sci(rel_asym));
  checks.expect(residual <= 1e-8, "boundary residual " + sci(residual));
  return "max pairwise rel " + sci(worst_pair) + ", drift " + sci(drift) +
         ", asymmetry " + sci(rel_asym) + ", residual " + sci(residual);
}

// ---- 8 ---------------------------------------------------------------------

expr::Node random_node(std::mt19937_64& rng, int depth) {
  using Kind = expr::Node::Kind;
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 12);
  const int choice = pick(rng);
  expr::Node node;
  switch (choice) {
    case 0: {
      node.kind = Kind::number;
      std::uniform_int_distribution<int> style(0, 2);
      const int s = style(rng);
      if (s == 0) {
        node.value = std::uniform_int_distribution<int>(0, 99)(rng);
      } else if (s == 1) {
        node.value = std::uniform_real_distribution<double>(0.0, 10.0)(rng);
      } else {
        node.value =
            std::pow(10.0, std::uniform_int_distribution<int>(-30, 30)(rng)) *
            std::uniform_real_distribution<double>(1.0, 10.0)(rng);
      }
      return node;
    }
    case 1:
      node.kind = Kind::variable;
      return node;
    case 2:
      node.kind = Kind::pi;
      return node;
    default:
      break;
  }
  static constexpr Kind unary[] = {Kind::negate, Kind::sin, Kind::cos,
                                   Kind::exp, Kind::sqrt};
  static constexpr Kind binary[] = {Kind::add, Kind::sub, Kind::mul, Kind::div,
                                    Kind::pow};
  if (choice < 8) {
    node.kind = unary[choice - 3];
    node.children.push_back(random_node(rng, depth - 1));
  } else {
    node.kind = binary[choice - 8];
    node.children.push_back(random_node(rng, depth - 1));
    node.children.push_back(random_node(rng, depth - 1));
  }
  return node;
}

std::string criterion_parser(Checks& checks) {
  struct Case {
    const char* source;
    double x;
    double expected;
  };
  const double pi = std::numbers::pi;
  const std::vector<Case> corpus = {
      {"1", 0.0, 1.0},
      {"2^3^2", 0.0, 512.0},
      {"(2^3)^2", 0.0, 64.0},
      {"-2^2", 0.0, -4.0},
      {"(-2)^2", 0.0, 4.0},
      {"2^-1", 0.0, 0.5},
      {"1 + 2 * 3", 0.0, 7.0},
      {"(1 + 2) * 3", 0.0, 9.0},
      {"10 - 4 - 3", 0.0, 3.0},
      {"64 / 4 / 2", 0.0, 8.0},
      {"2 * -3", 0.0, -6.0},
      {"--2", 0.0, 2.0},
      {"-x^2", 3.0, -9.0},
      {"-x * 2", 3.0, -6.0},
      {"x^2 - 3*sin(x)", 0.0, 0.0},
      {"sqrt(16) + exp(0) + cos(0)", 0.0, 6.0},
      {"1.5e2 + 2.5E-1", 0.0, 150.25},
      {"sin(pi/2)", 0.0, 1.0},
      {"2*pi", 0.0, 2.0 * pi},
      {"x/2/x", 5.0, 0.5},
      {" 1+x ", 2.0, 3.0},
  };
  for (const auto& c : corpus) {
    try {
      const auto e = expr::parse_expression(c.source);
      const double got = e(c.x);
      checks.expect(std::abs(got - c.expected) <=
                        1e-15 * std::max(1.0, std::abs(c.expected)),
                    std::string("'") + c.source + "' gave " + sci(got));
    } catch (const std::exception& err) {
      checks.expect(false, std::string("'") + c.source + "' threw " + err.what());
    }
  }

  const std::vector<std::pair<const char*, std::size_t>> bad = {
      {"1 +", 3}, {"(1", 2}, {"2 ** 3", 3}, {"", 0}, {"sin 1", 4}, {"1 2", 2}};
  for (const auto& [source, offset] : bad) {
    try {
      (void)expr::parse_expression(source);
      checks.expect(false, std::string("'") + source + "' was accepted");
    } catch (const expr::ParseError& err) {
      checks.expect(err.offset() == offset,
                    std::string("'") + source + "' offset " +
                        std::to_string(err.offset()));
    }
  }
  try {
    (void)expr::parse_expression("tan(x)");
    checks.expect(false, "'tan(x)' was accepted");
  } catch (const expr::UnknownIdentifier& err) {
    checks.expect(err.name() == "tan" && err.offset() == 0,
                  "unknown identifier report");
  } catch (const std::exception&) {
    checks.expect(false, "'tan(x)' raised the wrong error");
  }

  std::mt19937_64 rng(20240601);
  const int trials = 10000;
  for (int i = 0; i < trials; ++i) {
    const expr::Node tree =
        random_node(rng, std::uniform_int_distribution<int>(0, 6)(rng));
    const std::string text = expr::unparse(tree);
    try {
      const auto parsed = expr::parse_expression(text);
      checks.expect(parsed.root() == tree, "round trip of '" + text + "'");
      checks.expect(parsed.unparse() == text, "unparse is stable on '" + text + "'");
    } catch (const std::exception& err) {
      checks.expect(false, "'" + text + "' threw " + err.what());
    }
  }
  return std::to_string(corpus.size()) + " corpus cases, " +
         std::to_string(bad.size() + 1) + " error cases, " +
         std::to_string(trials) + " round trips";
}

struct Criterion {
  const char* title;
  double limit_seconds;
  std::string (*body)(Checks&);
};

const Criterion& criterion_for(int id) {
  static const Criterion criteria[] = {
      {"class-number table n=6", 1.0, criterion_pairs_table},
      {"brute-force equivalence n<=9", 120.0, criterion_brute_force},
      {"exact zeta values", 1.0, criterion_exact_zeta},
      {"Bernoulli agreement n=2..20", 60.0, criterion_bernoulli},
      {"mixed model three-way", 60.0, criterion_mixed_model},
      {"Dirichlet model on (0,pi)", 30.0, criterion_dirichlet},
      {"nonconstant coefficient properties", 60.0, criterion_linear_potential},
      {"expression parser", 10.0, criterion_parser},
  };
  if (id < 1 || id > 8) throw std::out_of_range("criterion id");
  return criteria[id - 1];
}

}  // namespace

CriterionResult run_criterion(int id) {
  const Criterion& criterion = criterion_for(id);
  CriterionResult result;
  result.id = id;
  result.title = criterion.title;
  result.limit_seconds = criterion.limit_seconds;

  Checks checks;
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  try {
    detail = criterion.body(checks);
  } catch (const std::exception& e) {
    checks.expect(false, std::string("exception: ") + e.what());
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  result.detail = checks.summary(detail);
  result.passed = checks.ok();
  if (result.passed && result.seconds > result.limit_seconds) {
    result.passed = false;
    result.detail = "too slow; " + result.detail;
  }
  return result;
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 8; ++id) out.push_back(run_criterion(id));
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << " ("
     << std::fixed << std::setprecision(2) << r.seconds << " s / "
     << std::setprecision(0) << r.limit_seconds << " s): " << r.detail;
  return os.str();
}

bool report(std::ostream& out) {
  int passed = 0;
  for (int id = 1; id <= 8; ++id) {
    const auto r = run_criterion(id);
    out << format_line(r) << std::endl;
    if (r.passed) ++passed;
  }
  out << passed << "/8 criteria passed" << std::endl;
  return passed == 8;
}

}  // namespace slzeta::acceptance
