#pragma once

#include <optional>
#include <vector>

#include "netprice/model.hpp"

namespace netprice {

/// The unique consumption equilibrium at a fixed price vector.
struct ConsumptionEquilibrium {
  ConsumptionVector x;
  std::vector<Index> support;  // agents with x_i > 0, ascending
  double residual = 0.0;       // max_i |BR_i(x) - x_i|
  int iterations = 0;
};

struct EquilibriumOptions {
  double tol = 1e-10;
  int max_iter = 10'000;
  /// Starting point of the best-response iteration; zero when absent.
  std::optional<Vector> start;
};

/// Agents whose polished consumption is at or below this are treated as
/// inactive, subject to the inactivity check.
inline constexpr double kSupportThreshold = 1e-9;

/// Best response max{(a_i - p_i + sum_j g_ij x_j) / (2 b_i), 0}.
double best_response(const MarketInstance& instance, Index i, const ConsumptionVector& x, double price);

/// Simultaneous best-response map applied to every agent.
Vector best_response_map(const MarketInstance& instance, const Vector& x, const Vector& p);

/// Fixed point of the simultaneous best-response map (a contraction with
/// factor < 1/2 in the infinity norm under the concavity condition), then
/// polished by solving the linear system on the detected support.
ConsumptionEquilibrium solve_equilibrium(const MarketInstance& instance, const PriceVector& p,
                                         const EquilibriumOptions& options = {});

/// Exhaustive oracle over all 2^n supports. n <= 20.
ConsumptionEquilibrium solve_equilibrium_exact(const MarketInstance& instance, const PriceVector& p);

/// Closed form on a known support: x_S = (Lambda_S - G_S)^{-1}(a_S - p_S),
/// zero elsewhere. No sign checks.
Vector consumption_on_support(const MarketInstance& instance, const Vector& p, const std::vector<Index>& support);

}  // namespace netprice
