#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slzeta/expression.hpp"
#include "slzeta/sl/problem.hpp"

// Problem files: one `key = value` per line, '#' starts a comment.
//
//   a = 0            b = pi           (constant expressions)
//   p = 1 + x^2      q = x            w = 1
//   alpha = dirichlet                 (radians, or dirichlet / neumann)
//   beta = neumann   shift = 0
//   method = all     n = 3            grid = 400   eigs = 1000   tol = 1e-10
//
// Unknown and repeated keys are errors.
namespace slzeta::config {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ProblemConfig {
  double a = 0.0;
  double b = 1.0;
  std::string a_text = "0";
  std::string b_text = "1";
  expr::Expression p;
  expr::Expression q;
  expr::Expression w;
  double alpha = 0.0;
  double beta = 0.0;
  std::string alpha_text = "dirichlet";
  std::string beta_text = "dirichlet";
  double shift = 0.0;

  std::optional<std::string> method;
  std::optional<int> n;
  std::optional<int> grid;
  std::optional<int> eigs;
  std::optional<double> tol;

  sl::Problem to_problem() const;

  /// Normalised listing of the problem keys (not the run options).
  std::string canonical_text() const;

  /// 64-bit FNV-1a of canonical_text, as 16 hex digits.
  std::string hash() const;
};

ProblemConfig parse_config(std::string_view text);
ProblemConfig load_config(const std::string& path);

/// `dirichlet-pi`, `mixed-unit` and `linear-potential`.
ProblemConfig preset(std::string_view name);
std::vector<std::string> preset_names();

/// Radians from an expression or the tokens dirichlet (0) / neumann (pi/2).
double parse_angle(std::string_view text);

}  // namespace slzeta::config
