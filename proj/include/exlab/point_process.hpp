#pragma once

// Exceedance counting, l-point thinning into cluster centers, the exact
// cluster decomposition, and reference Poisson / cluster-Poisson samplers.

#include <cstdint>
#include <span>
#include <vector>

namespace exlab {

/// Half-open index range [start, end) of a path: the scaled set nB.
struct IndexWindow {
  std::int64_t start = 0;
  std::int64_t end = 0;

  [[nodiscard]] std::int64_t length() const noexcept { return end - start; }
  static IndexWindow whole(std::size_t n) { return {0, static_cast<std::int64_t>(n)}; }
};

/// Number of k in `window` with x(k) > u (strict).
std::uint64_t exceedance_count(std::span<const double> path, double u, IndexWindow window);

/// The exceedance indices themselves, increasing.
std::vector<std::int64_t> exceedance_indices(std::span<const double> path, double u,
                                             IndexWindow window);

/// Indices k in `window` with x(k) > u and x(k-i) <= u for i = 1..l. The
/// look-back reads the path outside the window where it exists; positions
/// before index 0 count as non-exceedances.
std::vector<std::int64_t> thin_cluster_centers(std::span<const double> path, double u,
                                               std::uint64_t l, IndexWindow window);

struct ClusterDecomposition {
  std::vector<std::int64_t> centers;          ///< y_1 < y_2 < ...
  std::vector<std::uint64_t> cluster_counts;  ///< exceedances in [y_k, y_{k+1})
  std::uint64_t head_count = 0;               ///< exceedances in [start, y_1)
  std::uint64_t total = 0;
};

/// Splits the exceedances of `window` at the l-point centers. The last
/// cluster runs to the window end, and total = head_count + sum(cluster_counts)
/// holds exactly.
ClusterDecomposition decompose(std::span<const double> path, double u, std::uint64_t l,
                               IndexWindow window);

class KeyedStream;

/// Poisson variate: inversion for mean <= 10, Hormann's transformed
/// rejection (PTRS) above.
std::uint64_t sample_poisson(double mean, KeyedStream& stream);

/// One Poisson(mean) draw, a pure function of (mean, seed).
std::uint64_t sample_poisson_counts(double mean, std::uint64_t seed);

struct ClusterPoissonDraw {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> per_cluster;
};

/// K ~ Poisson(center_mean) centers, each with an independent
/// Poisson(cluster_mean) cluster size.
ClusterPoissonDraw sample_cluster_poisson(double center_mean, double cluster_mean,
                                          std::uint64_t seed);

}  // namespace exlab
