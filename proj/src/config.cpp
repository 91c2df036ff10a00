#include "slzeta/config.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace slzeta::config {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double constant(std::string_view key, std::string_view text) {
  expr::Expression e;
  try {
    e = expr::parse_expression(text);
  } catch (const expr::ParseError& err) {
    throw ConfigError("key '" + std::string(key) + "': " + err.what());
  }
  if (e.depends_on_x()) {
    throw ConfigError("key '" + std::string(key) + "' must be a constant");
  }
  return e(0.0);
}

template <class T>
T integer(std::string_view key, std::string_view text) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("key '" + std::string(key) + "' needs an integer, got '" +
                      std::string(text) + "'");
  }
  return value;
}

std::string format_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

const std::map<std::string, std::string, std::less<>>& presets() {
  static const std::map<std::string, std::string, std::less<>> table = {
      {"dirichlet-pi",
       "a = 0\nb = pi\np = 1\nq = 0\nw = 1\n"
       "alpha = dirichlet\nbeta = dirichlet\n"},
      {"mixed-unit",
       "a = 0\nb = 1\np = 1\nq = 0\nw = 1\n"
       "alpha = dirichlet\nbeta = neumann\n"},
      {"linear-potential",
       "a = 0\nb = 1\np = 1\nq = x\nw = 1\n"
       "alpha = dirichlet\nbeta = dirichlet\n"},
  };
  return table;
}

}  // namespace

double parse_angle(std::string_view text) {
  const std::string_view t = trim(text);
  if (t == "dirichlet") return 0.0;
  if (t == "neumann") return 0.5 * std::numbers::pi;
  return constant("angle", t);
}

ProblemConfig parse_config(std::string_view text) {
  static const std::set<std::string, std::less<>> known = {
      "a",     "b",      "p", "q",    "w",    "alpha", "beta",
      "shift", "method", "n", "grid", "eigs", "tol"};
  ProblemConfig cfg;
  cfg.p = expr::parse_expression("1");
  cfg.q = expr::parse_expression("0");
  cfg.w = expr::parse_expression("1");
  std::set<std::string, std::less<>> seen;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!known.contains(key)) {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" +
                        key + "'");
    }
    if (!seen.insert(key).second) {
      throw ConfigError("line " + std::to_string(line_no) + ": repeated key '" +
                        key + "'");
    }
    if (value.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": key '" + key +
                        "' has no value");
    }

    try {
      if (key == "a") {
        cfg.a = constant(key, value);
        cfg.a_text = value;
      } else if (key == "b") {
        cfg.b = constant(key, value);
        cfg.b_text = value;
      } else if (key == "p") {
        cfg.p = expr::parse_expression(value);
      } else if (key == "q") {
        cfg.q = expr::parse_expression(value);
      } else if (key == "w") {
        cfg.w = expr::parse_expression(value);
      } else if (key == "alpha") {
        cfg.alpha = parse_angle(value);
        cfg.alpha_text = value;
      } else if (key == "beta") {
        cfg.beta = parse_angle(value);
        cfg.beta_text = value;
      } else if (key == "shift") {
        cfg.shift = constant(key, value);
      } else if (key == "method") {
        cfg.method = std::string(value);
      } else if (key == "n") {
        cfg.n = integer<int>(key, value);
      } else if (key == "grid") {
        cfg.grid = integer<int>(key, value);
      } else if (key == "eigs") {
        cfg.eigs = integer<int>(key, value);
      } else if (key == "tol") {
        cfg.tol = constant(key, value);
      }
    } catch (const expr::ParseError& err) {
      throw ConfigError("line " + std::to_string(line_no) + ", key '" + key +
                        "': " + err.what());
    }
  }
  if (!(cfg.b > cfg.a)) throw ConfigError("interval needs a < b");
  return cfg;
}

ProblemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

ProblemConfig preset(std::string_view name) {
  const auto& table = presets();
  const auto it = table.find(name);
  if (it == table.end()) {
    throw ConfigError("unknown preset '" + std::string(name) + "'");
  }
  return parse_config(it->second);
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : presets()) out.push_back(name);
  return out;
}

sl::Problem ProblemConfig::to_problem() const {
  sl::Problem out;
  out.a = a;
  out.b = b;
  out.p = [e = p](double x) { return e(x); };
  out.q = [e = q](double x) { return e(x); };
  out.w = [e = w](double x) { return e(x); };
  out.alpha = alpha;
  out.beta = beta;
  out.shift = shift;
  return out;
}

std::string ProblemConfig::canonical_text() const {
  std::ostringstream os;
  os << "a=" << format_double(a) << "\nb=" << format_double(b)
     << "\np=" << p.unparse() << "\nq=" << q.unparse()
     << "\nw=" << w.unparse() << "\nalpha=" << format_double(alpha)
     << "\nbeta=" << format_double(beta) << "\nshift=" << format_double(shift)
     << "\n";
  return os.str();
}

std::string ProblemConfig::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_text()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace slzeta::config
