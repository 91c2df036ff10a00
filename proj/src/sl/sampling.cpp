#include "slzeta/sl/sampling.hpp"

#include <cmath>
#include <sstream>

namespace slzeta::sl {

SampledCoefficients sample_coefficients(const Problem& problem, int intervals) {
  if (intervals < 1) throw InvalidProblem("need at least one interval");
  SampledCoefficients s;
  s.a = problem.a;
  s.b = problem.b;
  s.intervals = intervals;
  s.h = (problem.b - problem.a) / intervals;
  const auto count = static_cast<std::size_t>(2 * intervals + 1);
  s.p.resize(count);
  s.q.resize(count);
  s.w.resize(count);
  for (std::size_t j = 0; j < count; ++j) {
    // Pin the last sample to b exactly.
    const double x = j + 1 == count ? problem.b : s.x_half(static_cast<int>(j));
    s.p[j] = problem.p(x);
    s.q[j] = problem.q(x);
    s.w[j] = problem.w(x);
    if (!(s.p[j] > 0.0) || !std::isfinite(s.p[j]) || !(s.w[j] > 0.0) ||
        !std::isfinite(s.w[j])) {
      std::ostringstream os;
      os << "p and w must be positive at x = " << x << " (p = " << s.p[j]
         << ", w = " << s.w[j] << ")";
      throw SingularCoefficient(os.str());
    }
    if (!std::isfinite(s.q[j])) {
      std::ostringstream os;
      os << "q is not finite at x = " << x;
      throw InvalidProblem(os.str());
    }
  }
  return s;
}

}  // namespace slzeta::sl
