#include "ratio_descent.hpp"

#include <cmath>

namespace isoprof::detail {

namespace {

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void descend(const RatioProblem& problem, std::vector<double> f, int iterations, DescentResult& best) {
  if (!problem.normalize(f)) return;
  std::vector<double> grad(problem.size);
  double value = problem.eval(f, &grad);
  if (!best.found || value < best.value) best = {value, f, true};
  for (int t = 1; t <= iterations; ++t) {
    double gn = norm2(grad);
    if (gn == 0.0 || !std::isfinite(gn)) break;
    double step = 0.5 * norm2(f) / (gn * std::sqrt(static_cast<double>(t)));
    for (std::size_t i = 0; i < f.size(); ++i) f[i] -= step * grad[i];
    if (!problem.normalize(f)) break;
    value = problem.eval(f, &grad);
    if (value < best.value) best = {value, f, true};
  }
}

}  // namespace

DescentResult minimize_ratio(const RatioProblem& problem,
                             const std::vector<std::vector<double>>& starts,
                             const DescentOptions& options) {
  DescentResult best;
  for (const auto& s : starts) descend(problem, s, options.iterations, best);
  std::mt19937_64 rng(options.seed);
  for (int r = 0; r < options.restarts; ++r) {
    std::vector<double> f(problem.size);
    for (double& x : f) x = 2.0 * unit_uniform(rng) - 1.0;
    descend(problem, std::move(f), options.iterations, best);
  }
  if (best.found) best.value = problem.eval(best.point, nullptr);
  return best;
}

}  // namespace isoprof::detail
