#include "netprice/uniform_pricing.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "netprice/centrality.hpp"

namespace netprice {
namespace {

struct SegmentSystem {
  Vector w_a;   // (Lambda_S - G_S)^{-1} a_S
  Vector w_1;   // (Lambda_S - G_S)^{-1} 1
  Vector wt_1;  // (Lambda_S - G_S^T)^{-1} 1
};

SegmentSystem segment_system(const MarketInstance& instance, const std::vector<Index>& active) {
  const Matrix M = linalg::principal(instance.lambda_minus_G(), active);
  const auto k = static_cast<Index>(active.size());
  Matrix rhs(k, 2);
  rhs.col(0) = linalg::restrict(instance.a(), active);
  rhs.col(1) = Vector::Ones(k);
  const Matrix W = linalg::solve(M, rhs);
  return {W.col(0), W.col(1), linalg::solve(Matrix(M.transpose()), Vector(Vector::Ones(k)))};
}

}  // namespace

double segment_profit(const MarketInstance& instance, const std::vector<Index>& active, double price) {
  if (active.empty()) return 0.0;
  const auto sys = segment_system(instance, active);
  return (price - instance.c()) * (sys.w_a.sum() - price * sys.w_1.sum());
}

Breakpoints breakpoints(const MarketInstance& instance) {
  require_admissible(instance);
  Breakpoints out;
  const Vector inv_lambda = instance.lambda().cwiseInverse();

  std::vector<Index> survivors(static_cast<std::size_t>(instance.n()));
  for (Index i = 0; i < instance.n(); ++i) survivors[static_cast<std::size_t>(i)] = i;

  while (!survivors.empty()) {
    const Vector H = centrality_gain(linalg::principal(instance.G(), survivors), linalg::restrict(inv_lambda, survivors),
                                     linalg::restrict(instance.a(), survivors));
    const double pk = H.minCoeff();
    std::vector<Index> dropped, kept;
    for (std::size_t k = 0; k < survivors.size(); ++k) {
      if (H(static_cast<Index>(k)) <= pk + kGainTieTolerance * std::max(1.0, std::abs(pk)))
        dropped.push_back(survivors[k]);
      else
        kept.push_back(survivors[k]);
    }
    out.prices.push_back(pk);
    out.dropout_sets.push_back(std::move(dropped));
    survivors = std::move(kept);
  }
  return out;
}

UniformPriceResult optimal_uniform_price(const MarketInstance& instance) {
  const auto bp = breakpoints(instance);
  const double c = instance.c();

  UniformPriceResult out;
  out.breakpoints = bp.prices;
  out.dropout_sets = bp.dropout_sets;

  std::vector<Index> active(static_cast<std::size_t>(instance.n()));
  for (Index i = 0; i < instance.n(); ++i) active[static_cast<std::size_t>(i)] = i;

  bool have = false;
  double lower = c;
  for (std::size_t k = 0; k < bp.prices.size(); ++k) {
    const double upper = bp.prices[k];
    if (upper > lower) {
      const auto sys = segment_system(instance, active);
      const double one_wa = sys.w_a.sum();
      const double one_w1 = sys.w_1.sum();
      const double p_hat = (one_wa + c * one_w1) / (one_w1 + sys.wt_1.sum());
      const double price = std::clamp(p_hat, lower, upper);
      const double re = (price - c) * (one_wa - price * one_w1);
      if (!have || re > out.profit) {
        have = true;
        out.p_opt = price;
        out.profit = re;
        out.active_profile = active;
        out.segment_lower = lower;
        out.segment_upper = upper;
      }
      lower = upper;
    }
    std::vector<Index> next;
    std::set_difference(active.begin(), active.end(), bp.dropout_sets[k].begin(), bp.dropout_sets[k].end(),
                        std::back_inserter(next));
    active = std::move(next);
  }
  return out;
}

}  // namespace netprice
