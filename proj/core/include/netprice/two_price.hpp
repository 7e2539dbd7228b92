#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "netprice/model.hpp"
#include "netprice/sdp.hpp"

namespace netprice {

/// Two exogenous price levels, discounted p_low and full p_high, both below
/// every a_i so that every agent buys at either price.
class TwoPriceInstance {
 public:
  TwoPriceInstance(MarketInstance base, double p_low, double p_high);

  const MarketInstance& base() const { return base_; }
  double p_low() const { return p_low_; }
  double p_high() const { return p_high_; }

  double mid_price() const { return 0.5 * (p_low_ + p_high_); }  // p_N
  double half_gap() const { return p_high_ - mid_price(); }      // delta
  Vector a_hat() const { return (base_.a().array() - mid_price()).matrix(); }
  double c_hat() const { return mid_price() - base_.c(); }
  /// A = (Lambda - G)^{-1}.
  const Matrix& response() const { return response_; }

  /// Profit (delta y + c_hat 1)^T A (a_hat - delta y) of an assignment
  /// y in {-1, 1}^n (+1 = full price).
  double objective(const Vector& y) const;
  PriceVector prices(const Vector& y) const;

 private:
  MarketInstance base_;
  double p_low_;
  double p_high_;
  Matrix response_;
};

struct TwoPriceResult {
  Vector y;  // +1 = p_high, -1 = p_low
  PriceVector prices;
  double profit = 0.0;
  std::string method;  // "brute_force" or "sdp_rounding"
  std::optional<double> sdp_upper_bound;
  std::optional<double> sdp_objective;
  double m_offset = 0.0;
  std::optional<bool> guarantee_holds;
  RoundingStats trials;
};

struct TwoPriceOptions {
  std::int64_t trials = 1000;
  std::uint64_t seed = 0;
  bool force_sdp = false;
  SdpOptions sdp{};
};

/// Goemans-Williamson ratio used in the guarantee certificate.
inline constexpr double kRoundingRatio = 0.878;
inline constexpr Index kBruteForceLimit = 20;

/// Expansion of the profit as y^T Q y + 2 d^T y + z with Q symmetric, zero
/// diagonal (its trace folded into z).
QuboProblem to_qubo(const TwoPriceInstance& tp);
/// Same expansion from raw ingredients; delta = 0 is accepted here.
QuboProblem to_qubo(const Matrix& response, const Vector& a_hat, double c_hat, double delta);

/// Exact optimum over all 2^n assignments (n <= 20). Ties go to p_high at the
/// lowest index where candidates differ.
TwoPriceResult brute_force(const TwoPriceInstance& tp);

/// m = delta^2 1^T A 1 + delta 1^T |A a_hat - c_hat A^T 1| - c_hat 1^T A a_hat
///     - 2 delta^2 trace(A).
double m_offset(const TwoPriceInstance& tp);
double m_offset(const Matrix& response, const Vector& a_hat, double c_hat, double delta);

/// SDP relaxation plus hyperplane rounding; brute force when n <= 20 unless
/// options.force_sdp is set.
TwoPriceResult approximate(const TwoPriceInstance& tp, const TwoPriceOptions& options = {});

/// Rounding of a solved relaxation against the true profit.
TwoPriceResult round_hyperplane(const TwoPriceInstance& tp, const SdpSolution& sol, std::int64_t trials,
                                std::uint64_t seed);

}  // namespace netprice
