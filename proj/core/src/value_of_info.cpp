#include "netprice/value_of_info.hpp"

#include <string>

#include "netprice/errors.hpp"

namespace netprice {
namespace {

void require_participation(const MarketInstance& instance) {
  require_structural(instance);
  if (!(instance.a().minCoeff() > instance.c())) throw InvalidInstance("value_of_info: requires a_i > c for all i");
}

Matrix symmetric_part(const Matrix& M) { return 0.5 * (M + M.transpose()); }

}  // namespace

Profits profits(const MarketInstance& instance) {
  require_participation(instance);
  const Vector v = 0.5 * (instance.a().array() - instance.c()).matrix();
  const Matrix M = instance.lambda_minus_G();
  return {v.dot(linalg::solve(M, v)), v.dot(linalg::solve(symmetric_part(M), v))};
}

double min_symmetric_eigenvalue(const MarketInstance& instance) {
  return linalg::symmetric_eigenvalues(symmetric_part(instance.lambda_minus_G()))(0);
}

RatioBounds ratio_bounds(const MarketInstance& instance) {
  require_participation(instance);
  const Matrix M = instance.lambda_minus_G();
  const Matrix S = symmetric_part(M);
  const double smallest = linalg::symmetric_eigenvalues(S)(0);
  if (!(smallest > 0.0))
    throw NotPositiveDefinite("value_of_info: Lambda - G is not positive definite (min eigenvalue of symmetric part " +
                              std::to_string(smallest) + ")");
  const Matrix R = linalg::symmetric_sqrt(S);
  const Matrix Minv = linalg::inverse(M);
  const Matrix B = symmetric_part(R * symmetric_part(Minv) * R);
  const Vector ev = linalg::symmetric_eigenvalues(B);
  return {ev(0), ev(ev.size() - 1)};
}

ProfitComparison compare_profits(const MarketInstance& instance) {
  const auto pr = profits(instance);
  const auto bounds = ratio_bounds(instance);
  return {pr.pi0, pr.piN, pr.pi0 / pr.piN, bounds.lower, bounds.upper};
}

}  // namespace netprice
