#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isoprof/graph.hpp"

namespace isoprof {

// rho[t - 1] = rho_f(t) for t = 1..size().
struct CompressionTable {
  std::vector<double> rho;
  double p = 1.0;
  double lipschitz = 0.0;  // of the source map before rescaling
  double rescale = 1.0;    // factor applied to f so that it is 1-Lipschitz
  bool skipped_infinite = false;

  std::size_t size() const { return rho.size(); }
  // rho(t) for integer t >= 0; rho(0) = 0.
  double at(long t) const;
};

// Minimum l^p distance over vertex pairs at graph distance >= t. A map with
// Lipschitz constant above 1 is rescaled first.
CompressionTable compression_function(const Graph& g, const std::vector<std::vector<double>>& f, double p);

struct SphereTable {
  std::vector<double> sigma;  // sigma[n] bounds sphere sizes at radius n

  // Largest K with sum_{n<=K} sigma(n) <= N, or -1.
  long k_of(double n) const;
  // max_{n>=1} sigma(n)^{1/n}
  double growth() const;
};

// sigma(n) = max over vertices of the radius-n sphere size.
SphereTable sphere_table(const Graph& g);

enum class BoundForm { general, exponential };

// Upper bound on the Poincare profile at N from sphere sizes and a compression
// table. Returns +inf when the weighted sum vanishes.
double poincare_upper_bound(double n, double p, const SphereTable& sigma, const CompressionTable& rho,
                            BoundForm form, double growth = 0.0);

// Mass-preserving rearrangement of h under the cap s.
std::vector<long> rearrange(const std::vector<long>& h, const std::vector<long>& s);
// Every intermediate sequence, starting with h.
std::vector<std::vector<long>> rearrange_trace(const std::vector<long>& h, const std::vector<long>& s);

struct ScaleFunction {
  std::vector<double> k;
  std::vector<double> l;

  void validate() const;
  double lower() const { return k.front() * l.front(); }
  double upper() const { return k.back() * l.back(); }
};

// x / l_s on [k_s l_s, k_{s+1} l_s), k_{s+1} on [k_{s+1} l_s, k_{s+1} l_{s+1}).
double rho_delta(const ScaleFunction& scale, double x);

// Non-decreasing function on [1, inf), given by a callable in log-coordinates
// or by samples interpolated linearly.
class MonotoneFunction {
 public:
  static MonotoneFunction from_callable(std::function<double(double)> rho, double t_max = 1e300);
  // rho_log(u) = rho(e^u); allows inverses far beyond double range.
  static MonotoneFunction from_log_callable(std::function<double(double)> rho_log, double u_max);
  static MonotoneFunction from_samples(std::vector<std::pair<double, double>> samples);

  double operator()(double t) const;
  // log of rho^{-1}(y), by bisection.
  double log_inverse(double y) const;
  double domain_log_max() const { return u_max_; }

 private:
  std::function<double(double)> rho_log_;
  double u_min_ = 0.0;
  double u_max_ = 0.0;
};

enum class ConditionKind { s_alpha_beta, ssl };

struct ConditionReport {
  bool pass = false;
  std::optional<double> largest_violation;
  std::size_t checked = 0;
};

// Checks rho^{-1}(x^{1/beta}/C) <= rho^{-1}(x)/x^{1-alpha} on every grid point,
// in log coordinates with relative tolerance kConditionTolerance. SSL is the
// case alpha = 0, beta = 1.
inline constexpr double kConditionTolerance = 1e-9;
ConditionReport check_condition(const MonotoneFunction& rho, ConditionKind kind, double alpha, double beta, double c,
                                const std::vector<double>& grid);

std::vector<double> log_grid(double lo, double hi, std::size_t points);

// "t,value" with a header line.
std::vector<std::pair<double, double>> read_two_column_csv(std::istream& in);
void write_two_column_csv(std::ostream& out, const std::string& header,
                          const std::vector<std::pair<double, double>>& rows);

}  // namespace isoprof
