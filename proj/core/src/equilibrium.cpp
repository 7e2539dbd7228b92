#include "netprice/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "netprice/errors.hpp"

namespace netprice {
namespace {

constexpr Index kMaxEnumeration = 20;

void check_prices(const MarketInstance& instance, const PriceVector& p) {
  if (p.size() != instance.n()) throw InvalidArgument("equilibrium: price vector has wrong length");
}

// a_i - p_i + sum_j g_ij x_j: the unclamped marginal value at x_i = 0.
Vector marginal_drive(const MarketInstance& instance, const Vector& x, const Vector& p) {
  return instance.a() - p + instance.G() * x;
}

std::vector<Index> positive_support(const Vector& x, double threshold) {
  std::vector<Index> s;
  for (Index i = 0; i < x.size(); ++i)
    if (x(i) > threshold) s.push_back(i);
  return s;
}

}  // namespace

double best_response(const MarketInstance& instance, Index i, const ConsumptionVector& x, double price) {
  if (i < 0 || i >= instance.n()) throw InvalidArgument("best_response: agent index out of range");
  if (x.size() != instance.n()) throw InvalidArgument("best_response: dimension mismatch");
  const double drive = instance.a()(i) - price + instance.G().row(i).dot(x.values());
  return std::max(drive / (2.0 * instance.b()(i)), 0.0);
}

Vector best_response_map(const MarketInstance& instance, const Vector& x, const Vector& p) {
  return (marginal_drive(instance, x, p).array() / instance.lambda().array()).cwiseMax(0.0).matrix();
}

Vector consumption_on_support(const MarketInstance& instance, const Vector& p, const std::vector<Index>& support) {
  Vector x = Vector::Zero(instance.n());
  if (support.empty()) return x;
  const Matrix M = linalg::principal(instance.lambda_minus_G(), support);
  const Vector rhs = linalg::restrict(instance.a() - p, support);
  const Vector xs = linalg::solve(M, rhs);
  for (std::size_t k = 0; k < support.size(); ++k) x(support[k]) = xs(static_cast<Index>(k));
  return x;
}

ConsumptionEquilibrium solve_equilibrium(const MarketInstance& instance, const PriceVector& p,
                                         const EquilibriumOptions& options) {
  require_admissible(instance);
  check_prices(instance, p);
  const Index n = instance.n();
  const Vector& pv = p.values();

  Vector x = options.start ? *options.start : Vector::Zero(n);
  if (x.size() != n) throw InvalidArgument("equilibrium: start point has wrong length");
  x = x.cwiseMax(0.0);

  int it = 0;
  double step = std::numeric_limits<double>::infinity();
  for (; it < options.max_iter; ++it) {
    const Vector next = best_response_map(instance, x, pv);
    step = linalg::inf_norm(next - x);
    x = next;
    if (step <= options.tol * std::max(1.0, linalg::inf_norm(x))) {
      ++it;
      break;
    }
  }
  if (!(step <= options.tol * std::max(1.0, linalg::inf_norm(x))))
    throw NoConvergence("equilibrium: best-response iteration did not converge (step=" + std::to_string(step) + ")");

  // Polish on the detected support; agents that come out at or below the
  // threshold are dropped and the system re-solved.
  std::vector<Index> support = positive_support(x, kSupportThreshold);
  Vector polished = x;
  bool polished_ok = false;
  for (Index round = 0; round <= n; ++round) {
    Vector cand;
    try {
      cand = consumption_on_support(instance, pv, support);
    } catch (const SingularSystem&) {
      break;
    }
    std::vector<Index> kept;
    for (Index i : support)
      if (cand(i) > kSupportThreshold) kept.push_back(i);
    if (kept.size() == support.size()) {
      polished = cand;
      polished_ok = true;
      break;
    }
    support = std::move(kept);
  }

  if (polished_ok) {
    const double polished_residual = linalg::inf_norm(best_response_map(instance, polished, pv) - polished);
    const double iterate_residual = linalg::inf_norm(best_response_map(instance, x, pv) - x);
    if (polished_residual <= std::max(iterate_residual, options.tol * std::max(1.0, linalg::inf_norm(x)))) {
      x = polished;
    } else {
      support = positive_support(x, kSupportThreshold);
    }
  }
  for (Index i = 0; i < n; ++i)
    if (!std::binary_search(support.begin(), support.end(), i)) x(i) = 0.0;

  ConsumptionEquilibrium eq{ConsumptionVector(x.cwiseMax(0.0)), std::move(support), 0.0, it};
  eq.residual = linalg::inf_norm(best_response_map(instance, eq.x.values(), pv) - eq.x.values());
  return eq;
}

ConsumptionEquilibrium solve_equilibrium_exact(const MarketInstance& instance, const PriceVector& p) {
  require_admissible(instance);
  check_prices(instance, p);
  const Index n = instance.n();
  if (n > kMaxEnumeration) throw TooLarge("equilibrium: support enumeration limited to n <= 20");
  const Vector& pv = p.values();
  const Vector lambda = instance.lambda();

  std::vector<ConsumptionEquilibrium> found;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Index> support;
    for (Index i = 0; i < n; ++i)
      if (mask >> i & 1U) support.push_back(i);
    Vector x;
    try {
      x = consumption_on_support(instance, pv, support);
    } catch (const SingularSystem&) {
      continue;
    }
    bool ok = true;
    for (Index i : support) ok = ok && x(i) > kSupportThreshold;
    if (!ok) continue;
    const Vector drive = marginal_drive(instance, x, pv);
    for (Index i = 0; i < n && ok; ++i) {
      if (mask >> i & 1U) continue;
      ok = drive(i) <= lambda(i) * kSupportThreshold;
    }
    if (!ok) continue;
    ConsumptionEquilibrium eq{ConsumptionVector(x), support, 0.0, 0};
    eq.residual = linalg::inf_norm(best_response_map(instance, x, pv) - x);
    found.push_back(std::move(eq));
  }
  if (found.size() != 1)
    throw Inconsistent("equilibrium: support enumeration found " + std::to_string(found.size()) + " equilibria");
  return std::move(found.front());
}

}  // namespace netprice
