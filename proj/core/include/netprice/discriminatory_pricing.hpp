#pragma once

#include "netprice/model.hpp"

namespace netprice {

/// Optimal individualized prices and the consumption they induce, with the
/// price split into a network-independent nominal part, a markup for the
/// utility an agent draws from central peers and a discount for the
/// influence it exerts on them.
struct DiscriminatoryPricingResult {
  PriceVector p;
  ConsumptionVector x;
  double profit = 0.0;
  Vector nominal;
  Vector markup;
  Vector discount;
};

struct PriceDecomposition {
  Vector nominal;   // (a + c 1) / 2
  Vector markup;    // G Lambda^{-1} K / 2
  Vector discount;  // G^T Lambda^{-1} K / 2
};

/// p = a - (Lambda - G)(Lambda - (G + G^T)/2)^{-1} (a - c 1)/2.
DiscriminatoryPricingResult optimal_prices(const MarketInstance& instance);

/// Nominal/markup/discount split, with K the weighted Bonacich centrality of
/// the average interaction network (G + G^T)/2 under weights Lambda^{-1} and
/// seed (a - c 1)/2.
PriceDecomposition decompose_prices(const MarketInstance& instance);

}  // namespace netprice
