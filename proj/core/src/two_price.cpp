#include "netprice/two_price.hpp"

#include <bit>
#include <cmath>
#include <cstdint>

#include "netprice/errors.hpp"

namespace netprice {
namespace {

// Preference among equal-profit assignments: +1 at the first differing index.
bool preferred(const Vector& candidate, const Vector& incumbent) {
  for (Index i = 0; i < candidate.size(); ++i)
    if (candidate(i) != incumbent(i)) return candidate(i) > incumbent(i);
  return false;
}

}  // namespace

TwoPriceInstance::TwoPriceInstance(MarketInstance base, double p_low, double p_high)
    : base_(std::move(base)), p_low_(p_low), p_high_(p_high) {
  require_admissible(base_);
  if (!std::isfinite(p_low_) || !std::isfinite(p_high_)) throw InvalidArgument("two-price: non-finite price");
  if (!(p_low_ < p_high_)) throw InvalidArgument("two-price: p_low must be below p_high");
  if (!(p_high_ < base_.a().minCoeff()))
    throw InvalidInstance("two-price: both prices must lie below min_i a_i so that every agent buys");
  response_ = linalg::inverse(base_.lambda_minus_G());
}

double TwoPriceInstance::objective(const Vector& y) const {
  if (y.size() != base_.n()) throw InvalidArgument("two-price: assignment has wrong length");
  const double delta = half_gap();
  const Vector margin = (delta * y.array() + c_hat()).matrix();
  return margin.dot(response_ * (a_hat() - delta * y));
}

PriceVector TwoPriceInstance::prices(const Vector& y) const {
  return PriceVector((mid_price() + half_gap() * y.array()).matrix());
}

QuboProblem to_qubo(const Matrix& response, const Vector& a_hat, double c_hat, double delta) {
  const Matrix& A = response;
  const Index n = A.rows();
  Matrix Q = -delta * delta * 0.5 * (A + A.transpose());
  const double trace = Q.trace();
  Q.diagonal().setZero();
  const Vector d = 0.5 * delta * (A * a_hat - c_hat * (A.transpose() * Vector::Ones(n)));
  const double z = c_hat * (A * a_hat).sum() + trace;
  return QuboProblem(std::move(Q), d, z);
}

QuboProblem to_qubo(const TwoPriceInstance& tp) {
  return to_qubo(tp.response(), tp.a_hat(), tp.c_hat(), tp.half_gap());
}

double m_offset(const Matrix& response, const Vector& a_hat, double c_hat, double delta) {
  const Matrix& A = response;
  const Vector ones = Vector::Ones(A.rows());
  const Vector Aa = A * a_hat;
  return delta * delta * A.sum() + delta * (Aa - c_hat * (A.transpose() * ones)).cwiseAbs().sum() - c_hat * Aa.sum() -
         2.0 * delta * delta * A.trace();
}

double m_offset(const TwoPriceInstance& tp) { return m_offset(tp.response(), tp.a_hat(), tp.c_hat(), tp.half_gap()); }

TwoPriceResult brute_force(const TwoPriceInstance& tp) {
  const Index n = tp.base().n();
  if (n > kBruteForceLimit) throw TooLarge("two-price: brute force limited to n <= 20");
  const QuboProblem q = to_qubo(tp);

  // Gray-code walk: one sign flip per step, Q y maintained incrementally and
  // rebuilt periodically to bound drift.
  Vector y = -Vector::Ones(n);
  Vector h = q.Q * y;
  Vector best_y = y;
  double best = y.dot(h) + 2.0 * q.d.dot(y) + q.z;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < count; ++step) {
    const auto i = static_cast<Index>(std::countr_zero(step));
    y(i) = -y(i);
    h += 2.0 * y(i) * q.Q.col(i);
    if ((step & 1023U) == 0) h = q.Q * y;
    const double value = y.dot(h) + 2.0 * q.d.dot(y) + q.z;
    const double slack = 1e-12 * std::max(1.0, std::abs(best));
    if (value > best + slack || (value >= best - slack && preferred(y, best_y))) {
      best = value;
      best_y = y;
    }
  }

  TwoPriceResult out;
  out.y = best_y;
  out.prices = tp.prices(best_y);
  out.profit = tp.objective(best_y);
  out.method = "brute_force";
  out.m_offset = m_offset(tp);
  return out;
}

TwoPriceResult round_hyperplane(const TwoPriceInstance& tp, const SdpSolution& sol, std::int64_t trials,
                                std::uint64_t seed) {
  if (sol.factor.cols() != tp.base().n() + 1) throw InvalidArgument("two-price: relaxation has wrong dimension");
  const auto outcome = round_hyperplane(sol.factor, [&tp](const Vector& y) { return tp.objective(y); }, trials, seed);
  TwoPriceResult out;
  out.y = outcome.y;
  out.prices = tp.prices(outcome.y);
  out.profit = tp.objective(outcome.y);
  out.method = "sdp_rounding";
  out.sdp_upper_bound = sol.upper_bound;
  out.sdp_objective = sol.objective;
  out.m_offset = m_offset(tp);
  out.trials = outcome.stats;
  out.guarantee_holds = outcome.stats.mean + out.m_offset > kRoundingRatio * (sol.upper_bound + out.m_offset);
  return out;
}

TwoPriceResult approximate(const TwoPriceInstance& tp, const TwoPriceOptions& options) {
  if (!options.force_sdp && tp.base().n() <= kBruteForceLimit) return brute_force(tp);
  const SdpSolution sol = solve_sdp(to_qubo(tp), options.sdp);
  return round_hyperplane(tp, sol, options.trials, options.seed);
}

}  // namespace netprice
