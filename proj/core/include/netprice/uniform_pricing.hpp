#pragma once

#include <vector>

#include "netprice/model.hpp"

namespace netprice {

/// Uniform prices at which groups of agents stop purchasing. Agents in
/// dropout_sets[k] consume zero for every price >= prices[k].
struct Breakpoints {
  std::vector<double> prices;                   // strictly increasing
  std::vector<std::vector<Index>> dropout_sets;  // nonempty, disjoint
};

struct UniformPriceResult {
  double p_opt = 0.0;
  double profit = 0.0;
  std::vector<double> breakpoints;
  std::vector<std::vector<Index>> dropout_sets;
  /// Agents active on the segment that produced p_opt.
  std::vector<Index> active_profile;
  /// Segment [lower, upper] that produced p_opt.
  double segment_lower = 0.0;
  double segment_upper = 0.0;
};

/// Gains closer than this are treated as equal when forming a dropout set.
inline constexpr double kGainTieTolerance = 1e-9;

Breakpoints breakpoints(const MarketInstance& instance);

/// Optimal single price: on each segment between consecutive breakpoints the
/// active set is fixed and profit is a concave quadratic in the price, so the
/// segment optimum is the interior stationary point clamped to the segment.
UniformPriceResult optimal_uniform_price(const MarketInstance& instance);

/// Profit (p - c) 1^T (Lambda_S - G_S)^{-1} (a_S - p 1) for a fixed active set.
double segment_profit(const MarketInstance& instance, const std::vector<Index>& active, double price);

}  // namespace netprice
