#pragma once

#include "netprice/model.hpp"

namespace netprice {

/// Profit of a monopolist that ignores the network (pi0) against one that
/// discriminates with full knowledge of G (piN), and spectral bounds on
/// pi0 / piN that depend only on M = Lambda - G.
struct ProfitComparison {
  double pi0 = 0.0;
  double piN = 0.0;
  double ratio = 0.0;  // pi0 / piN
  double lower_bound = 0.0;
  double upper_bound = 0.0;
};

struct Profits {
  double pi0 = 0.0;
  double piN = 0.0;
};

struct RatioBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// pi0 = v^T (Lambda - G)^{-1} v, piN = v^T (Lambda - (G + G^T)/2)^{-1} v,
/// v = (a - c 1)/2.
Profits profits(const MarketInstance& instance);

/// Extreme eigenvalues of R ((M^{-1} + M^{-T})/2) R with R the symmetric square
/// root of (M + M^T)/2. Throws NotPositiveDefinite when (M + M^T)/2 is not.
RatioBounds ratio_bounds(const MarketInstance& instance);

/// Smallest eigenvalue of the symmetric part of Lambda - G.
double min_symmetric_eigenvalue(const MarketInstance& instance);

ProfitComparison compare_profits(const MarketInstance& instance);

}  // namespace netprice
