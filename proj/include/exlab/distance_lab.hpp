#pragma once

// Count distributions and L1 variation distances between them. Distances
// here are sums of |a(k) - b(k)|, i.e. twice the total-variation distance.

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace exlab {

struct ExactBinomial {
  std::uint64_t n = 0;
  double p = 0.0;
};
struct ExactPoisson {
  double mean = 0.0;
};
struct Empirical {
  std::uint64_t replications = 0;
};

struct CountDistribution {
  std::vector<double> pmf;  ///< P(X = k), k = 0..support_max
  double tail_mass = 0.0;   ///< P(X > support_max)
  std::variant<ExactBinomial, ExactPoisson, Empirical> origin = Empirical{};

  [[nodiscard]] std::size_t support_max() const noexcept {
    return pmf.empty() ? 0 : pmf.size() - 1;
  }
  [[nodiscard]] double at(std::size_t k) const noexcept { return k < pmf.size() ? pmf[k] : 0.0; }
};

/// C(n,k) p^k (1-p)^(n-k) by Loader's saddle-point expansion.
double binomial_pmf(std::uint64_t n, double p, std::uint64_t k);

/// e^-mean mean^k / k!, same technique.
double poisson_pmf(double mean, std::uint64_t k);

/// P(X > k) for X ~ Poisson(mean).
double poisson_upper_tail(double mean, std::uint64_t k);

/// Poisson law on 0..support_max with the exact mass above as tail_mass.
CountDistribution poisson_distribution(double mean, std::size_t support_max);

/// Binomial law on 0..n (n must be small enough to materialize).
CountDistribution binomial_distribution(std::uint64_t n, double p);

/// Normalized histogram of nonnegative counts.
CountDistribution empirical_distribution(std::span<const std::uint64_t> counts);

/// sum_k |a(k) - b(k)| over the union support plus |tail_a - tail_b|.
double variation_distance(const CountDistribution& a, const CountDistribution& b);

struct BinomialPoissonDistance {
  double l1 = 0.0;                 ///< full-support L1 distance
  double truncated = 0.0;          ///< the sum truncated at k = n
  double poisson_above_n = 0.0;    ///< P(Poisson(np) > n)
  double error_bound = 0.0;        ///< mass outside the summation window plus rounding
  std::uint64_t window_lo = 0;
  std::uint64_t window_hi = 0;
};

/// L1 distance between Binomial(n, p) and Poisson(np). Summation runs over
/// mean +- 12 sd; mass outside is bounded by Chernoff bounds and reported in
/// error_bound.
BinomialPoissonDistance binomial_poisson_distance(std::uint64_t n, double p);

/// binomial_poisson_distance(n, p).l1
double variation_distance_binomial_poisson(std::uint64_t n, double p);

/// sum_k sqrt(P(k)(1 - P(k)) / replications): an upper bound on the expected
/// L1 error of an empirical pmf built from `replications` draws of `law`.
double monte_carlo_l1_scale(const CountDistribution& law, std::uint64_t replications);

}  // namespace exlab
