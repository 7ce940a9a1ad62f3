#include "isoprof/spectral.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "ratio_descent.hpp"

namespace isoprof {

LaplacianSpectrum laplacian_spectrum(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    lap(u, u) += 1.0;
    lap(v, v) += 1.0;
    lap(u, v) -= 1.0;
    lap(v, u) -= 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  LaplacianSpectrum out;
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values.push_back(solver.eigenvalues()(i));
    std::vector<double> vec(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) vec[static_cast<std::size_t>(j)] = solver.eigenvectors()(j, i);
    out.vectors.push_back(std::move(vec));
  }
  return out;
}

SpectralReport lambda2(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("lambda2 needs at least 2 vertices");
  auto spec = laplacian_spectrum(g);
  SpectralReport r;
  r.lambda2 = std::max(0.0, spec.values[1]);
  auto comps = connected_components(g);
  if (comps.size() > 1) {
    // Any combination of component indicators is an eigenvector for 0; use one
    // orthogonal to constants.
    r.lambda2 = 0.0;
    r.witness_vector.assign(n, 0.0);
    double frac = static_cast<double>(comps.front().size()) / static_cast<double>(n);
    for (std::size_t v = 0; v < n; ++v) r.witness_vector[v] = -frac;
    for (Vertex v : comps.front()) r.witness_vector[v] = 1.0 - frac;
  } else {
    r.witness_vector = spec.vectors[1];
  }
  double mean = 0.0, norm = 0.0;
  for (double x : r.witness_vector) mean += x;
  mean /= static_cast<double>(n);
  for (double& x : r.witness_vector) {
    x -= mean;
    norm += x * x;
  }
  norm = std::sqrt(norm);
  for (double& x : r.witness_vector) x /= norm;
  return r;
}

namespace {

double variance(const std::vector<double>& f) {
  double mean = 0.0;
  for (double x : f) mean += x;
  mean /= static_cast<double>(f.size());
  double s = 0.0;
  for (double x : f) s += (x - mean) * (x - mean);
  return s / static_cast<double>(f.size());
}

}  // namespace

double lambda_infinity_ratio(const Graph& g, const std::vector<double>& f) {
  const std::size_t n = g.vertex_count();
  if (f.size() != n) throw std::invalid_argument("function must be defined on every vertex");
  const double var = variance(f);
  if (!(var > 0.0)) throw std::invalid_argument("lambda_inf ratio is undefined for constant functions");
  double num = 0.0;
  for (Vertex i = 0; i < n; ++i) {
    double m = 0.0;
    for (Vertex j : g.neighbors(i)) m = std::max(m, (f[i] - f[j]) * (f[i] - f[j]));
    num += m;
  }
  num /= static_cast<double>(n);
  // (1/n^2) sum_{i,j} (f_i - f_j)^2 = 2 Var(f)
  return 2.0 * num / (2.0 * var);
}

LambdaInfinityEstimate lambda_infinity_upper(const Graph& g, int restarts, std::uint64_t seed) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("lambda_inf needs at least 2 vertices");
  detail::RatioProblem prob;
  prob.size = n;
  prob.normalize = [n](std::vector<double>& f) {
    double mean = 0.0;
    for (double x : f) mean += x;
    mean /= static_cast<double>(n);
    double s = 0.0;
    for (double& x : f) {
      x -= mean;
      s += x * x;
    }
    if (s <= 1e-300) return false;
    s = std::sqrt(s / static_cast<double>(n));
    for (double& x : f) x /= s;
    return true;
  };
  prob.eval = [&g, n](const std::vector<double>& f, std::vector<double>* grad) {
    double var = variance(f);
    double num = 0.0;
    if (grad) grad->assign(n, 0.0);
    std::vector<double> dnum(n, 0.0);
    for (Vertex i = 0; i < n; ++i) {
      double m = 0.0;
      Vertex arg = i;
      for (Vertex j : g.neighbors(i)) {
        double d = (f[i] - f[j]) * (f[i] - f[j]);
        if (d > m) {
          m = d;
          arg = j;
        }
      }
      num += m;
      if (arg != i) {
        dnum[i] += 2.0 * (f[i] - f[arg]);
        dnum[arg] -= 2.0 * (f[i] - f[arg]);
      }
    }
    num /= static_cast<double>(n);
    double ratio = num / var;
    if (grad) {
      double mean = 0.0;
      for (double x : f) mean += x;
      mean /= static_cast<double>(n);
      for (std::size_t i = 0; i < n; ++i) {
        double dvar = 2.0 * (f[i] - mean) / static_cast<double>(n);
        (*grad)[i] = (dnum[i] / static_cast<double>(n) - ratio * dvar) / var;
      }
    }
    return ratio;
  };

  std::vector<std::vector<double>> starts;
  auto spec = laplacian_spectrum(g);
  double gap = spec.values.size() > 1 ? spec.values[1] : 0.0;
  std::vector<double> combined(n, 0.0);
  for (std::size_t i = 1; i < spec.values.size() && i <= 8; ++i) {
    starts.push_back(spec.vectors[i]);
    if (std::abs(spec.values[i] - gap) < 1e-6)
      for (std::size_t v = 0; v < n; ++v) combined[v] += spec.vectors[i][v];
  }
  starts.push_back(combined);

  auto best = detail::minimize_ratio(prob, starts, {restarts, 200, seed});
  LambdaInfinityEstimate out;
  out.witness = best.point;
  out.value = lambda_infinity_ratio(g, out.witness);
  return out;
}

}  // namespace isoprof
