#include "netprice/discriminatory_pricing.hpp"

#include "netprice/centrality.hpp"
#include "netprice/errors.hpp"

namespace netprice {
namespace {

Matrix average_network(const Matrix& G) { return 0.5 * (G + G.transpose()); }

Vector half_margin(const MarketInstance& instance) {
  return 0.5 * (instance.a().array() - instance.c()).matrix();
}

}  // namespace

PriceDecomposition decompose_prices(const MarketInstance& instance) {
  require_admissible(instance);
  const Matrix& G = instance.G();
  const Vector inv_lambda = instance.lambda().cwiseInverse();

  Vector k;
  try {
    k = weighted_bonacich(average_network(G), inv_lambda, half_margin(instance));
  } catch (const IllDefined& e) {
    throw SingularSystem(std::string("decompose_prices: ") + e.what());
  }
  const Vector scaled = inv_lambda.cwiseProduct(k);

  PriceDecomposition out;
  out.nominal = 0.5 * (instance.a().array() + instance.c()).matrix();
  out.markup = 0.5 * (G * scaled);
  out.discount = 0.5 * (G.transpose() * scaled);
  return out;
}

DiscriminatoryPricingResult optimal_prices(const MarketInstance& instance) {
  require_admissible(instance);
  const Matrix& G = instance.G();

  Matrix symmetric_system = -average_network(G);
  symmetric_system.diagonal() += instance.lambda();
  const Vector x = linalg::solve(symmetric_system, half_margin(instance));
  const Vector p = instance.a() - instance.lambda_minus_G() * x;

  DiscriminatoryPricingResult out;
  out.p = PriceVector(p);
  out.x = ConsumptionVector(x.cwiseMax(0.0));
  out.profit = (p.array() - instance.c()).matrix().dot(x);

  auto parts = decompose_prices(instance);
  out.nominal = std::move(parts.nominal);
  out.markup = std::move(parts.markup);
  out.discount = std::move(parts.discount);
  return out;
}

}  // namespace netprice
