#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "slzeta/sl/zeta.hpp"

namespace slzeta::sl {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::theorem:
      return "theorem";
    case Method::trace:
      return "trace";
    case Method::eigen:
      return "eigen";
  }
  return "unknown";
}

double weyl_tail(double a_coeff, double c, double d, int n, int count,
                 double* remainder) {
  const auto f = [&](double x) {
    const double y = x + c;
    return std::pow(a_coeff * y * y + d, -n);
  };
  const auto df = [&](double x) {
    const double y = x + c;
    const double base = a_coeff * y * y + d;
    return -n * std::pow(base, -n - 1) * 2.0 * a_coeff * y;
  };
  const int stretch = std::max(2000, 4 * count);
  const double last = static_cast<double>(count) + stretch;
  double sum = 0.0;
  for (int k = count + stretch; k > count; --k) sum += f(k);

  // int_X^inf (A y^2 + d)^-n dx, expanded in d / (A y^2).
  const double y = last + c;
  const double r = d / (a_coeff * y * y);
  const double lead = std::pow(a_coeff, -n) * std::pow(y, 1 - 2 * n);
  const double integral =
      lead * (1.0 / (2 * n - 1) - n * r / (2 * n + 1) +
              0.5 * n * (n + 1) * r * r / (2 * n + 3));
  sum += integral - 0.5 * f(last) - df(last) / 12.0;
  if (remainder != nullptr) {
    const double third = f(last) * (2.0 * n) * (2.0 * n + 1) * (2.0 * n + 2) /
                         (y * y * y);
    const double expansion = lead * std::abs(n * (n + 1) * (n + 2) / 6.0 *
                                             r * r * r / (2 * n + 5));
    *remainder = third / 720.0 + expansion;
  }
  return sum;
}

ZetaResult zeta_from_spectrum(const SpectrumSlice& spectrum, double shift,
                              int n) {
  if (n < 1) throw std::invalid_argument("zeta order n must be >= 1");
  const std::size_t count = spectrum.count();
  if (count == 0) throw std::invalid_argument("empty spectrum");
  const double a_coeff =
      std::numbers::pi * std::numbers::pi / spectrum.weyl_constant;
  const double top = std::abs(spectrum.eigenvalues.back());

  double head = 0.0;
  double refinement = 0.0;
  for (std::size_t i = count; i-- > 0;) {
    const double lambda = spectrum.eigenvalues[i];
    const double mu = lambda - shift;
    if (std::abs(mu) <= 1e-12 * std::max(top, a_coeff)) {
      std::ostringstream os;
      os.precision(17);
      os << "lambda_" << i + 1 << " - shift = " << mu
         << " is zero; zeta_T excludes zero eigenvalues";
      throw ZeroEigenvalue(os.str());
    }
    const double term = std::pow(mu, -n);
    head += term;
    refinement += n * spectrum.tolerance * std::abs(lambda / mu) *
                  std::abs(term);
  }

  const int k_count = static_cast<int>(count);
  double remainder = 0.0;
  const double leading = weyl_tail(a_coeff, 0.0, 0.0, n, k_count, &remainder);
  double tail = leading;
  if (count >= 2) {
    const double mu_k = spectrum.eigenvalues[count - 1] - shift;
    const double mu_prev = spectrum.eigenvalues[count - 2] - shift;
    const double c = 0.5 * ((mu_k - mu_prev) / a_coeff - (2.0 * k_count - 1.0));
    const double shifted = k_count + c;
    const double d = mu_k - a_coeff * shifted * shifted;
    const double next = k_count + 1 + c;
    if (std::isfinite(c) && std::isfinite(d) &&
        std::abs(c) <= 0.25 * k_count + 1.0 &&
        a_coeff * next * next + d > 0.0) {
      double fit_remainder = 0.0;
      tail = weyl_tail(a_coeff, c, d, n, k_count, &fit_remainder);
      remainder = std::max(remainder, fit_remainder);
    }
  }

  ZetaResult out;
  out.n = n;
  out.method = Method::eigen;
  out.value = head + tail;
  out.error_estimate = std::abs(tail - leading) + remainder + refinement;
  out.grid_size = k_count;
  return out;
}

ZetaResult zeta_by_eigen(const Problem& problem, int n, int count,
                         const SolverOptions& options) {
  return zeta_from_spectrum(eigenvalues(problem, count, options), problem.shift,
                            n);
}

}  // namespace slzeta::sl
