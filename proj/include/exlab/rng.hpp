#pragma once

// Counter-based random numbers: Philox4x32-10 keyed by a 64-bit seed, so any
// (seed, stream, position) triple can be generated without shared state.

#include <array>
#include <cstdint>

namespace exlab {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

/// One Philox4x32 block with 10 rounds.
PhiloxCounter philox4x32(PhiloxCounter counter, PhiloxKey key) noexcept;

/// Seed of replication `index` under `master_seed`; a pure function of both.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) noexcept;

/// Sequential view over the Philox blocks of one key. `stream` separates
/// independent uses of the same seed (e.g. path noise vs. Poisson draws).
class KeyedStream {
 public:
  explicit KeyedStream(std::uint64_t seed, std::uint32_t stream = 0) noexcept;

  std::uint64_t next_u64() noexcept;

  /// Uniform on the open interval (0, 1) with 53 random bits.
  double uniform() noexcept;

  /// Standard normal by inversion of uniform().
  double normal() noexcept;

 private:
  void refill() noexcept;

  PhiloxKey key_;
  std::uint64_t block_ = 0;
  std::uint32_t stream_;
  PhiloxCounter buffer_{};
  int used_ = 4;  // 32-bit words consumed from buffer_
};

/// Inverse standard normal CDF (Wichura's AS241), p in (0, 1).
double normal_quantile(double p);

}  // namespace exlab
