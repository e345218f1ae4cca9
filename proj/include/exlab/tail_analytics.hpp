#pragma once

// Gaussian tail functions, level normalizations, the thinning gap, and the
// comparison-bound evaluators for exceedance counting.

#include <cstdint>
#include <span>
#include <variant>

#include "exlab/covariance.hpp"

namespace exlab {

/// n * Psi(u) = lambda (or n * p(u) = lambda).
struct NaturalMode {};
/// n^a * Psi(u) = c with 0 < a <= 1 and c > 0.
struct PowerMode {
  double a = 1.0;
  double c = 1.0;
};
/// A fixed level.
struct ExplicitMode {
  double u = 0.0;
};

struct LevelSchedule {
  std::uint64_t n = 2;
  double lambda = 1.0;
  std::variant<NaturalMode, PowerMode, ExplicitMode> mode = NaturalMode{};

  /// Throws std::invalid_argument when n < 2, lambda <= 0, or power
  /// parameters fall outside 0 < a <= 1, c > 0.
  void validate() const;
};

enum class Normalization { psi, tail };

/// p(u) = 1 - Phi(u). Accepts every finite u.
double gauss_upper_tail(double u);

/// log p(u), finite for all finite u (no underflow for large u).
double log_gauss_upper_tail(double u);

/// Psi(u) = exp(-u^2/2) / (sqrt(2 pi) u), u > 0.
double mills_tail(double u);

/// log Psi(u), u > 0.
double log_mills_tail(double u);

/// Solves the level equation of `schedule` for u by bracketing bisection
/// followed by a safeguarded secant stage. Explicit mode returns its u.
/// Throws DomainError when no positive root exists (only possible with the
/// tail normalization, where n p(0+) = n/2 caps the feasible lambda).
double level_exact(const LevelSchedule& schedule, Normalization normalization = Normalization::psi);

/// Two-term asymptotic level
///   sqrt(2 log N) - (log log n / 2 + log(K sqrt(pi/2))) / sqrt(2 log N)
/// with N = n, K = lambda (natural mode) or N = n^a, K = c sqrt(a) (power
/// mode). Requires n >= 16.
double level_asymptotic(const LevelSchedule& schedule);

/// Thinning scale of the cluster-center process.
struct ClusterScale {
  std::uint64_t l = 0;           ///< thinning gap in index units
  double achieved_lambda = 0.0;  ///< n (1-p)^l p at the chosen integer l
  double n1 = 0.0;               ///< inner normalization l / log(n p)
  double p_ul = 0.0;             ///< (1-p)^l p
  double p = 0.0;                ///< tail at the level
  bool no_thinning = false;      ///< n p <= lambda: no gap needed
};

/// (1 - p)^l p.
double thinned_tail(double p, std::uint64_t l);

/// Integer l with n (1-p)^l p closest to lambda: l = round(log(np/lambda) /
/// -log(1-p)), ties toward the smaller l.
ClusterScale cluster_gap_for_tail(std::uint64_t n, double p, double lambda);

/// cluster_gap_for_tail at p = gauss_upper_tail(u).
ClusterScale cluster_gap(std::uint64_t n, double u, double lambda);

/// sqrt(2 / (pi e)) = 0.48394...
double prokhorov_constant();

/// prokhorov_constant() * p(u), the leading term of the Binomial-Poisson
/// L1 distance. Not a rigorous bound: the correction has no explicit
/// constant.
double prokhorov_leading(double u);

/// Berman comparison sum
///   (1/pi) sum_{k=1}^{n-1} (n-k) |r(k)| / sqrt(1 - r(k)^2) exp(-u^2 / (1 + r(k)))
/// where r_lags[k-1] = r(k). Needs at least n-1 lags; throws DomainError
/// naming the lag when |r(k)| >= 1.
double berman_bound(std::span<const double> r_lags, std::uint64_t n, double u);

/// Same sum with r(k) taken from `model`.
double berman_bound(const CovarianceModel& model, std::uint64_t n, double u);

struct BoundReport {
  double berman_sum = 0.0;
  double rho1 = 0.0;
  double gamma = 1.0;
  double log_cond_value = 0.0;    ///< max |r(k)| log k over the trailing window
  double power_cond_value = 0.0;  ///< max |r(k)| k^(1 - rho1) over the trailing window
  double threshold_stated = 1.0;  ///< sqrt(1 - rho1)
  double threshold_proof = 0.0;   ///< sqrt((1 + rho1) / 2)
  double level_ratio = 0.0;       ///< u / sqrt(2 log n)
  std::uint64_t window_start = 0;
  std::uint64_t window_end = 0;
  bool above_stated = false;
  bool above_proof = false;
  bool sup_half_tension = false;  ///< rho1 >= 1/2
};

/// Finite proxies of the decay conditions over k in [ceil(k_max/2), k_max],
/// both level thresholds, the level ratio, and the Berman sum.
BoundReport condition_report(const CovarianceModel& model, std::uint64_t n, double u,
                             std::uint64_t k_max);

}  // namespace exlab
