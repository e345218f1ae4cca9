#pragma once

// Stationary Gaussian sequences by circulant embedding.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "exlab/covariance.hpp"

namespace exlab {

struct EmbeddingReport {
  std::size_t embedding_length = 0;  ///< M, smallest power of two >= 2(n-1)
  double min_eigenvalue = 0.0;
  std::size_t negative_count = 0;
  double distortion = 0.0;           ///< ||clipped negative eigenvalues||_2 / M
  std::vector<double> eigenvalues;   ///< of the circulant extension, length M
};

/// Circulant extension of r(0..n-1) and its spectrum. A non-PSD extension is
/// reported, not rejected.
EmbeddingReport validate_model(const CovarianceModel& model, std::size_t n);

struct PathSample {
  std::vector<double> values;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double distortion = 0.0;
};

struct SamplerOptions {
  bool allow_clipping = false;
  double max_distortion = 1e-8;
};

/// Precomputed spectral factor for one (model, n); sample() is const and safe
/// to call from several threads.
class CirculantSampler {
 public:
  CirculantSampler(const CovarianceModel& model, std::size_t n, SamplerOptions options = {});
  ~CirculantSampler();
  CirculantSampler(CirculantSampler&&) noexcept;
  CirculantSampler& operator=(CirculantSampler&&) noexcept;

  [[nodiscard]] PathSample sample(std::uint64_t seed) const;

  /// Writes the path for `seed` into `out` (size n), reusing its storage.
  void sample_into(std::uint64_t seed, std::vector<double>& out) const;

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] const EmbeddingReport& report() const noexcept { return report_; }

 private:
  struct Plan;

  std::size_t n_;
  bool white_noise_;
  EmbeddingReport report_;
  std::vector<double> spectral_scale_;  // sqrt(max(lambda_j, 0) / M) / sqrt(c0), j = 0..M/2
  std::unique_ptr<Plan> plan_;
};

/// One path of length n; a pure function of (model, n, seed).
PathSample sample_path(const CovarianceModel& model, std::size_t n, std::uint64_t seed,
                       SamplerOptions options = {});

struct CovarianceEstimate {
  std::vector<double> mean;            ///< lags 0..max_lag
  std::vector<double> standard_error;  ///< across replications
};

/// Cross-replication mean of (1/(n-k)) sum_i x(i) x(i+k) for k = 0..max_lag.
CovarianceEstimate empirical_covariance(std::span<const PathSample> paths, std::size_t max_lag);

}  // namespace exlab
