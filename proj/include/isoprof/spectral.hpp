#pragma once

#include <cstdint>
#include <vector>

#include "isoprof/graph.hpp"

namespace isoprof {

inline constexpr double kSpectralTolerance = 1e-9;

struct SpectralReport {
  double lambda2 = 0.0;
  bool certified = true;
  std::vector<double> witness_vector;  // zero mean, unit Euclidean norm
};

struct LaplacianSpectrum {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // orthonormal, one per value
};

// Dense eigendecomposition of L f(i) = sum_{j~i} (f(i) - f(j)).
LaplacianSpectrum laplacian_spectrum(const Graph& g);
SpectralReport lambda2(const Graph& g);

struct LambdaInfinityEstimate {
  double value = 0.0;  // feasible objective value, hence an upper bound
  std::vector<double> witness;
};

// 2 * [(1/n) sum_i max_{j~i} (f(i)-f(j))^2] / [(1/n^2) sum_{i,j} (f(i)-f(j))^2]
double lambda_infinity_ratio(const Graph& g, const std::vector<double>& f);
LambdaInfinityEstimate lambda_infinity_upper(const Graph& g, int restarts, std::uint64_t seed);

}  // namespace isoprof
