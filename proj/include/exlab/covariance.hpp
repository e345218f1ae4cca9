#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace exlab {

/// Parametric covariance r(k) of a zero-mean, unit-variance stationary
/// Gaussian sequence. r(0) is always 1 and |r(k)| < 1 for k >= 1.
class CovarianceModel {
 public:
  struct Independent {};
  /// r(k) = rho0^k
  struct Geometric {
    double rho0;
  };
  /// r(k) = c (1 + k)^(-beta)
  struct PowerDecay {
    double c;
    double beta;
  };
  /// r(1..m) given explicitly. Lags beyond m are 0 when zero_beyond is set,
  /// otherwise querying them is a DomainError.
  struct Table {
    std::vector<double> values;
    bool zero_beyond = false;
  };
  using Kind = std::variant<Independent, Geometric, PowerDecay, Table>;

  CovarianceModel() = default;

  static CovarianceModel independent();
  static CovarianceModel geometric(double rho0);
  static CovarianceModel power_decay(double c, double beta);
  static CovarianceModel table(std::vector<double> values, bool zero_beyond);

  /// r(k) for k >= 0.
  [[nodiscard]] double operator()(std::uint64_t k) const;

  /// sup_{l >= k} |r(l)|, k >= 1. Every built-in parametric model has a
  /// monotone envelope from lag 1 on, so the supremum is |r(k)| there.
  [[nodiscard]] double tail_sup(std::uint64_t k) const;

  [[nodiscard]] bool is_independent() const noexcept {
    return std::holds_alternative<Independent>(kind_);
  }
  [[nodiscard]] const Kind& kind() const noexcept { return kind_; }

  /// Short human-readable form, e.g. "power_decay(c=0.2,beta=1)".
  [[nodiscard]] std::string describe() const;

 private:
  explicit CovarianceModel(Kind kind) : kind_(std::move(kind)) {}

  Kind kind_ = Independent{};
};

/// r(0..m-1).
std::vector<double> covariance_values(const CovarianceModel& model, std::size_t m);

/// sup_{l >= k} |r(l)|.
double rho_tail(const CovarianceModel& model, std::uint64_t k);

}  // namespace exlab
