#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "isoprof/graph.hpp"

namespace isoprof {

inline constexpr std::size_t kExhaustiveCheegerLimit = 22;

struct CheegerWitness {
  enum class Kind { set, function };

  double value = 0.0;
  Kind kind = Kind::set;
  std::vector<Vertex> set_witness;
  // One row per vertex, each of length `target_dim`.
  std::vector<std::vector<double>> function_witness;
  std::optional<double> certified_lower;
  bool exact = false;  // value is the true constant, not only an upper bound
  // For set witnesses: the ratio is boundary_size / set_size.
  std::size_t boundary_size = 0;
  std::size_t set_size = 0;
};

// Per-cardinality minima over all subsets with 1 <= |A| <= |V|/2.
struct IsoperimetricScan {
  std::size_t n = 0;
  // Index m = |A|; entry 0 unused.
  std::vector<std::size_t> min_external, min_majored, min_edge;
  std::vector<std::uint32_t> arg_external, arg_majored, arg_edge;  // bitmasks
};

// Exhaustive enumeration; requires |V| <= kExhaustiveCheegerLimit.
IsoperimetricScan isoperimetric_scan(const Graph& g);

enum class CombinatorialMode { plain, majored, edge };

struct CombinatorialOptions {
  bool allow_heuristic = false;  // simulated annealing above the exhaustive limit
  std::uint64_t seed = 0;
  int sweeps = 4000;
};

CheegerWitness cheeger_combinatorial(const Graph& g, CombinatorialMode mode,
                                     const CombinatorialOptions& options = {});

enum class Gradient { sup_scale, modified };

struct LpOptions {
  double p = 1.0;
  Gradient gradient = Gradient::sup_scale;
  double scale_a = 1.0;
  int target_dim = 1;
  int restarts = 8;
  int iterations = 200;
  std::uint64_t seed = 0;
  // Extra starting functions (rows per vertex), e.g. witnesses transferred
  // from a related estimate.
  std::vector<std::vector<std::vector<double>>> extra_starts;
};

CheegerWitness cheeger_lp(const Graph& g, const LpOptions& options);

// ||grad f||_p / ||f - mean||_p for the requested gradient on a graph.
double lp_ratio(const Graph& g, const std::vector<std::vector<double>>& f, double p,
                Gradient gradient, double scale_a = 1.0);

// Lower bound for the sup-gradient constant h_p from the exhaustive majored
// constant: h_1 >= h~/2 and h_p >= min(1/12, 4^-p/2) h_1 for |V| >= 3.
double sup_gradient_lower_from_majored(double majored, double p, std::size_t n);

// Finite metric measure space; built from a graph metric or a sub-metric.
struct WeightedMetricGraph {
  std::vector<std::vector<double>> distance;
  std::vector<double> measure;

  std::size_t size() const { return measure.size(); }
  double total_measure() const;
  double ball_measure(std::size_t x, double radius) const;
  double min_ball_measure(double radius) const;
  double max_ball_measure(double radius) const;

  static WeightedMetricGraph from_graph(const Graph& g, std::vector<double> measure = {});
};

// ||grad_a f||_{p,nu} / ||f - mean_nu||_{p,nu} with closed a-balls.
double scale_ratio(const WeightedMetricGraph& z, const std::vector<double>& f, double a, double p);

struct ScaleOptions {
  int restarts = 8;
  int iterations = 200;
  std::uint64_t seed = 0;
  std::vector<std::vector<double>> extra_starts;
};

CheegerWitness scale_poincare_constant(const WeightedMetricGraph& z, double a, double p,
                                       const ScaleOptions& options = {});

// Var_p(f) = ((1/|V|^2) sum_g sum_h ||f(g) - f(h)||_p^p)^{1/p}
double p_variance(const std::vector<std::vector<double>>& f, double p);
// ||f - mean||_p with counting measure and l^p norms on values.
double centered_lp_norm(const std::vector<std::vector<double>>& f, double p);

std::vector<std::vector<double>> as_rows(const std::vector<double>& f);
void write_witness_csv(std::ostream& out, const std::vector<std::vector<double>>& f);

}  // namespace isoprof
