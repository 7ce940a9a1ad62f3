#pragma once

// Projected subgradient minimization of a scale-invariant ratio over
// non-constant functions, shared by the spectral and Cheeger estimators.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace isoprof::detail {

struct RatioProblem {
  std::size_t size = 0;  // number of scalar unknowns
  // Returns the ratio; fills the gradient of the ratio when requested.
  std::function<double(const std::vector<double>&, std::vector<double>*)> eval;
  // Recenters and rescales in place; returns false for a degenerate (constant) input.
  std::function<bool(std::vector<double>&)> normalize;
};

struct DescentOptions {
  int restarts = 8;
  int iterations = 200;
  std::uint64_t seed = 0;
};

struct DescentResult {
  double value = 0.0;
  std::vector<double> point;
  bool found = false;
};

// Uniform double in [0,1) built from raw engine bits so the stream is
// identical across standard libraries.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

DescentResult minimize_ratio(const RatioProblem& problem,
                             const std::vector<std::vector<double>>& starts,
                             const DescentOptions& options);

}  // namespace isoprof::detail
