#include "slzeta/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "slzeta/acceptance.hpp"
#include "slzeta/circular_perms.hpp"
#include "slzeta/config.hpp"
#include "slzeta/error.hpp"
#include "slzeta/exact_zeta.hpp"
#include "slzeta/expression.hpp"
#include "slzeta/sl/zeta.hpp"

namespace slzeta::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kPairSumBernoulliLimit = 20;
constexpr int kDefaultGrid = 400;
constexpr int kDefaultEigs = 1000;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string join(const perms::ValueSet& values, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string braces(const perms::ValueSet& values) {
  return "{" + join(values) + "}";
}

std::string digits17(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

perms::ValueSet parse_value_list(const std::string& text) {
  perms::ValueSet out;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw UsageError("bad value list '" + text + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw UsageError("repeated value in '" + text + "'");
  }
  return out;
}

void require_range(int n, int lo, const char* what) {
  if (n < lo) {
    throw UsageError(std::string(what) + " needs --n >= " + std::to_string(lo));
  }
}

// ---- pairs -----------------------------------------------------------------

struct PairsArgs {
  int n = 0;
  std::string format = "table";
};

void cmd_pairs(const PairsArgs& args, std::ostream& out) {
  require_range(args.n, 2, "pairs");
  const auto pairs = perms::enumerate_admissible_pairs(args.n);
  if (args.format == "json") {
    for (const auto& c : pairs) {
      Json rec;
      rec["n"] = c.n;
      rec["V"] = c.vales;
      rec["P"] = c.pinnacles;
      rec["class_number"] = c.class_number.get_str();
      rec["exponents"] = c.exponents;
      out << rec.dump() << '\n';
    }
    return;
  }
  out << "n = " << args.n << ", " << pairs.size() << " admissible pairs\n";
  out << std::left << std::setw(4) << "k" << std::setw(20) << "V"
      << std::setw(20) << "P" << std::setw(16) << "class_number"
      << "exponents\n";
  BigInt total = 0;
  for (const auto& c : pairs) {
    std::string exps;
    for (int e : c.exponents) exps += static_cast<char>('0' + e);
    out << std::left << std::setw(4) << c.k << std::setw(20) << braces(c.vales)
        << std::setw(20) << braces(c.pinnacles) << std::setw(16)
        << c.class_number.get_str() << exps << '\n';
    total += c.class_number;
  }
  out << "total " << total.get_str() << " = (n-1)!\n";
}

// ---- classnum --------------------------------------------------------------

struct ClassnumArgs {
  int n = 0;
  std::string vales;
  std::string pinnacles;
  bool brute = false;
  std::string format = "table";
};

void cmd_classnum(const ClassnumArgs& args, std::ostream& out) {
  require_range(args.n, 1, "classnum");
  const auto v = parse_value_list(args.vales);
  const auto p = parse_value_list(args.pinnacles);
  for (int x : v) {
    if (x < 1 || x > args.n) throw UsageError("vale outside 1..n");
  }
  for (int x : p) {
    if (x < 1 || x > args.n) throw UsageError("pinnacle outside 1..n");
  }
  const bool admissible = perms::is_admissible(args.n, v, p);
  const BigInt closed = perms::class_number(args.n, v, p);
  std::optional<std::size_t> brute;
  if (args.brute) brute = perms::enumerate_class(args.n, v, p).size();

  if (args.format == "json") {
    Json rec;
    rec["n"] = args.n;
    rec["V"] = v;
    rec["P"] = p;
    rec["admissible"] = admissible;
    rec["class_number"] = closed.get_str();
    if (brute) rec["brute_force"] = std::to_string(*brute);
    out << rec.dump() << '\n';
    return;
  }
  out << "n = " << args.n << ", V = " << braces(v) << ", P = " << braces(p)
      << (admissible ? " (admissible)" : " (not admissible)") << '\n';
  out << "class_number " << closed.get_str() << '\n';
  if (brute) out << "brute_force  " << *brute << '\n';
}

// ---- zeta-even -------------------------------------------------------------

struct ZetaEvenArgs {
  int n = 0;
  std::string format = "table";
};

void cmd_zeta_even(const ZetaEvenArgs& args, std::ostream& out) {
  require_range(args.n, 1, "zeta-even");
  const auto value = exact::evaluate(args.n);
  const std::string coeff = to_fraction_string(value.zeta_even_coeff);
  if (args.format == "json") {
    Json rec;
    rec["n"] = args.n;
    rec["zeta_even"] = coeff;
    rec["zeta_t"] = to_fraction_string(value.zeta_t);
    rec["bernoulli"] = to_fraction_string(value.bernoulli);
    out << rec.dump() << '\n';
    return;
  }
  out << "zeta(" << 2 * args.n << ") = " << coeff << " * pi^" << 2 * args.n
      << '\n';
  out << "zeta_T(" << args.n << ") = " << to_fraction_string(value.zeta_t)
      << " for -u'' = lambda u on [0,1], u(0) = u'(1) = 0\n";
}

// ---- bernoulli -------------------------------------------------------------

struct BernoulliArgs {
  int m = 0;
  std::string via = "auto";
  std::string format = "table";
};

void cmd_bernoulli(const BernoulliArgs& args, std::ostream& out) {
  require_range(args.m, 0, "bernoulli");
  const int m = args.m;
  const bool pairs_possible = m >= 4 && m % 2 == 0;
  bool use_pairs = false;
  if (args.via == "pairs") {
    if (!pairs_possible) {
      throw UsageError("--via pairs needs an even index >= 4");
    }
    use_pairs = true;
  } else if (args.via == "auto") {
    use_pairs = pairs_possible && m / 2 <= kPairSumBernoulliLimit;
  }
  const Rational b =
      use_pairs ? exact::bernoulli_via_pairs(m / 2) : exact::bernoulli_oracle(m);
  const std::string text = to_fraction_string(b);

  // zeta(m) = 2^(m-1) |B_m| pi^m / m! for even m >= 2.
  std::optional<Rational> zeta_coeff;
  if (m >= 2 && m % 2 == 0) {
    Rational z = Rational(pow2(static_cast<unsigned long>(m - 1))) * abs(b) /
                 Rational(factorial(static_cast<unsigned long>(m)));
    z.canonicalize();
    zeta_coeff = z;
  }

  if (args.format == "json") {
    Json rec;
    rec["m"] = m;
    rec["bernoulli"] = text;
    rec["via"] = use_pairs ? "pairs" : "recurrence";
    if (zeta_coeff) rec["zeta_even"] = to_fraction_string(*zeta_coeff);
    out << rec.dump() << '\n';
    return;
  }
  out << "B_" << m << " = " << text << "  (via "
      << (use_pairs ? "pairs" : "recurrence") << ")\n";
  if (zeta_coeff) {
    out << "zeta(" << m << ") = (2^" << m - 1 << "/" << m << "!) |B_" << m
        << "| pi^" << m << " = (2^" << m - 1 << "/" << m << "!) "
        << to_fraction_string(abs(b)) << " pi^" << m << " = "
        << to_fraction_string(*zeta_coeff) << " pi^" << m << '\n';
  }
}

// ---- sl --------------------------------------------------------------------

struct SlArgs {
  std::string preset;
  std::string config;
  std::optional<std::string> method;
  std::optional<int> n;
  std::optional<int> grid;
  std::optional<int> eigs;
  std::optional<double> tol;
  std::string format = "table";
};

struct SlRun {
  std::vector<sl::ZetaResult> results;
  std::vector<std::string> skipped;
};

void cmd_sl(const SlArgs& args, std::ostream& out, std::ostream& err) {
  if (args.preset.empty() == args.config.empty()) {
    throw UsageError("sl needs exactly one of --preset or --config");
  }
  const config::ProblemConfig cfg = args.preset.empty()
                                        ? config::load_config(args.config)
                                        : config::preset(args.preset);

  const std::string method = args.method.value_or(cfg.method.value_or("all"));
  if (method != "theorem" && method != "trace" && method != "eigen" &&
      method != "all") {
    throw UsageError("unknown method '" + method + "'");
  }
  const std::optional<int> n_opt = args.n ? args.n : cfg.n;
  if (!n_opt) throw UsageError("sl needs --n (or n in the config)");
  const int n = *n_opt;
  require_range(n, 1, "sl");
  const int grid = args.grid.value_or(cfg.grid.value_or(kDefaultGrid));
  const int eigs = args.eigs.value_or(cfg.eigs.value_or(kDefaultEigs));
  if (grid < 2) throw UsageError("--grid must be at least 2");
  if (eigs < 2) throw UsageError("--eigs must be at least 2");

  sl::SolverOptions options;
  options.basis_intervals = grid;
  if (const auto tol = args.tol ? args.tol : cfg.tol) {
    if (!(*tol > 0.0)) throw UsageError("--tol must be positive");
    options.eigen_tolerance = *tol;
  }

  const sl::Problem problem = cfg.to_problem();
  sl::validate(problem);
  const bool unit = sl::has_unit_weight(problem);

  SlRun run;
  const bool all = method == "all";
  auto wanted = [&](std::string_view name) { return all || method == name; };

  if (wanted("theorem")) {
    if (all && (n < 2 || !unit)) {
      run.skipped.push_back(n < 2 ? "theorem: needs n >= 2"
                                  : "theorem: needs w = 1");
    } else {
      if (n < 2) throw UsageError("the theorem path needs n >= 2");
      run.results.push_back(sl::zeta_by_theorem(problem, n, options));
    }
  }
  if (wanted("trace")) {
    if (all && (n < 2 || !unit)) {
      run.skipped.push_back(n < 2 ? "trace: needs n >= 2"
                                  : "trace: needs w = 1");
    } else {
      if (n < 2) throw UsageError("the trace path needs n >= 2");
      run.results.push_back(sl::zeta_by_trace(problem, n, grid, options));
    }
  }
  if (wanted("eigen")) {
    run.results.push_back(sl::zeta_by_eigen(problem, n, eigs, options));
  }
  for (const auto& s : run.skipped) err << "skipped " << s << '\n';

  const std::string hash = cfg.hash();
  auto tolerances = [&]() {
    Json t;
    t["ode"] = options.ode_tolerance;
    t["eigen"] = options.eigen_tolerance;
    t["collision"] = options.collision_tolerance;
    return t;
  };

  if (args.format == "json") {
    for (const auto& r : run.results) {
      Json rec;
      rec["problem_hash"] = hash;
      rec["n"] = r.n;
      rec["method"] = std::string(sl::to_string(r.method));
      rec["value"] = r.value;
      rec["error_estimate"] = r.error_estimate;
      rec["grid_size"] = r.grid_size;
      rec["tolerances"] = tolerances();
      out << rec.dump() << '\n';
    }
    return;
  }
  out << "problem " << hash << '\n';
  out << std::left << std::setw(9) << "method" << std::setw(4) << "n"
      << std::setw(26) << "value" << std::setw(26) << "error_estimate"
      << "grid_size\n";
  for (const auto& r : run.results) {
    out << std::left << std::setw(9) << sl::to_string(r.method) << std::setw(4)
        << r.n << std::setw(26) << digits17(r.value) << std::setw(26)
        << digits17(r.error_estimate) << r.grid_size << '\n';
  }
  out << "tolerances ode=" << digits17(options.ode_tolerance)
      << " eigen=" << digits17(options.eigen_tolerance)
      << " collision=" << digits17(options.collision_tolerance) << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Spectral zeta values of Sturm-Liouville problems and "
               "pinnacle/vale pair sums",
               "slzeta"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"table", "json"});

  PairsArgs pairs;
  auto* pairs_cmd = app.add_subcommand("pairs", "List the n-admissible pairs");
  pairs_cmd->add_option("--n", pairs.n, "Permutation size")->required();
  pairs_cmd->add_option("--format", pairs.format)->check(formats);

  ClassnumArgs classnum;
  auto* classnum_cmd =
      app.add_subcommand("classnum", "Class number of one (V, P) pair");
  classnum_cmd->add_option("--n", classnum.n)->required();
  classnum_cmd->add_option("--vales", classnum.vales, "Comma list, e.g. 1,3")
      ->required();
  classnum_cmd->add_option("--pinnacles", classnum.pinnacles, "Comma list")
      ->required();
  classnum_cmd->add_flag("--brute", classnum.brute,
                         "Also count the class by enumeration");
  classnum_cmd->add_option("--format", classnum.format)->check(formats);

  ZetaEvenArgs zeta_even;
  auto* zeta_even_cmd =
      app.add_subcommand("zeta-even", "zeta(2n) / pi^(2n) as a fraction");
  zeta_even_cmd->add_option("--n", zeta_even.n)->required();
  zeta_even_cmd->add_option("--format", zeta_even.format)->check(formats);

  BernoulliArgs bernoulli;
  auto* bernoulli_cmd = app.add_subcommand("bernoulli", "Bernoulli number B_n");
  bernoulli_cmd->add_option("--n", bernoulli.m, "Index of B")->required();
  bernoulli_cmd
      ->add_option("--via", bernoulli.via,
                   "pairs, recurrence or auto (pairs for even n <= 40)")
      ->check(CLI::IsMember({"auto", "pairs", "recurrence"}));
  bernoulli_cmd->add_option("--format", bernoulli.format)->check(formats);

  SlArgs sl_args;
  auto* sl_cmd = app.add_subcommand("sl", "zeta_T(n) of a Sturm-Liouville problem");
  sl_cmd->add_option("--preset", sl_args.preset)
      ->check(CLI::IsMember(config::preset_names()));
  sl_cmd->add_option("--config", sl_args.config, "Problem file");
  sl_cmd->add_option("--method", sl_args.method, "theorem, trace, eigen or all");
  sl_cmd->add_option("--n", sl_args.n);
  sl_cmd->add_option("--grid", sl_args.grid,
                     "Nystrom nodes and initial basis intervals (400)");
  sl_cmd->add_option("--eigs", sl_args.eigs, "Eigenvalue count (1000)");
  sl_cmd->add_option("--tol", sl_args.tol, "Eigenvalue tolerance");
  sl_cmd->add_option("--format", sl_args.format)->check(formats);

  auto* selftest_cmd =
      app.add_subcommand("selftest", "Run the acceptance checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*pairs_cmd) cmd_pairs(pairs, out);
    if (*classnum_cmd) cmd_classnum(classnum, out);
    if (*zeta_even_cmd) cmd_zeta_even(zeta_even, out);
    if (*bernoulli_cmd) cmd_bernoulli(bernoulli, out);
    if (*sl_cmd) cmd_sl(sl_args, out, err);
    if (*selftest_cmd) {
      return acceptance::report(out) ? kSuccess : kDomainError;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kSuccess;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("slzeta");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace slzeta::cli
