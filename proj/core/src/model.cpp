#include "netprice/model.hpp"

#include <cmath>
#include <sstream>

#include "netprice/errors.hpp"

namespace netprice {
namespace {

bool all_finite(const Eigen::Ref<const Matrix>& m) { return m.allFinite(); }

std::string index_list(const std::vector<Index>& idx) {
  std::ostringstream os;
  for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << idx[k];
  return os.str();
}

}  // namespace

MarketInstance::MarketInstance(Matrix G, Vector a, Vector b, double c)
    : G_(std::move(G)), a_(std::move(a)), b_(std::move(b)), c_(c) {
  const Index n = a_.size();
  if (n == 0) throw InvalidArgument("instance: n must be positive");
  if (b_.size() != n || G_.rows() != n || G_.cols() != n)
    throw InvalidArgument("instance: G must be n x n and a, b of length n");
  if (!all_finite(G_) || !a_.allFinite() || !b_.allFinite() || !std::isfinite(c_))
    throw InvalidArgument("instance: non-finite value");
}

Matrix MarketInstance::lambda_minus_G() const {
  Matrix M = -G_;
  M.diagonal() += lambda();
  return M;
}

PriceVector::PriceVector(Vector p) : p_(std::move(p)) {
  if (!p_.allFinite()) throw InvalidArgument("price vector has non-finite entries");
}

PriceVector PriceVector::uniform(Index n, double price) { return PriceVector(Vector::Constant(n, price)); }

ConsumptionVector::ConsumptionVector(Vector x) : x_(std::move(x)) {
  if (!x_.allFinite()) throw InvalidArgument("consumption vector has non-finite entries");
  if (x_.size() > 0 && x_.minCoeff() < 0.0) throw InvalidArgument("consumption vector has negative entries");
}

bool ValidationReport::has(ViolationKind kind) const {
  for (const auto& v : violations)
    if (v.kind == kind) return true;
  return false;
}

std::string ValidationReport::to_string() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (std::size_t k = 0; k < violations.size(); ++k) os << (k ? "; " : "") << violations[k].message;
  return os.str();
}

ValidationReport validate(const MarketInstance& instance) {
  ValidationReport report;
  const Index n = instance.n();
  const Matrix& G = instance.G();

  std::vector<Index> diag, range, curvature, concavity, participation;
  for (Index i = 0; i < n; ++i) {
    if (G(i, i) != 0.0) diag.push_back(i);
    bool out_of_range = false;
    for (Index j = 0; j < n; ++j)
      if (G(i, j) < 0.0 || G(i, j) > 1.0) out_of_range = true;
    if (out_of_range) range.push_back(i);
    if (instance.b()(i) <= 0.0) curvature.push_back(i);
    if (!(instance.b()(i) > G.row(i).sum())) concavity.push_back(i);
    if (!(instance.a()(i) > instance.c())) participation.push_back(i);
  }

  auto add = [&](ViolationKind kind, std::vector<Index> idx, const char* what) {
    if (idx.empty()) return;
    std::string msg = std::string(what) + " at i=" + index_list(idx);
    report.violations.push_back({kind, std::move(idx), std::move(msg)});
  };
  add(ViolationKind::NonzeroDiagonal, diag, "nonzero self-influence g_ii");
  add(ViolationKind::InfluenceOutOfRange, range, "influence g_ij outside [0,1] in row");
  add(ViolationKind::NonpositiveCurvature, curvature, "b_i <= 0");
  add(ViolationKind::Concavity, concavity, "concavity b_i > sum_j g_ij fails");
  add(ViolationKind::Participation, participation, "participation a_i > c fails");
  return report;
}

void require_admissible(const MarketInstance& instance) {
  const auto report = validate(instance);
  if (!report.ok()) throw InvalidInstance("inadmissible instance: " + report.to_string());
}

void require_structural(const MarketInstance& instance) {
  const auto report = validate(instance);
  for (const auto& v : report.violations) {
    if (v.kind == ViolationKind::NonzeroDiagonal || v.kind == ViolationKind::InfluenceOutOfRange ||
        v.kind == ViolationKind::NonpositiveCurvature)
      throw InvalidInstance("malformed instance: " + v.message);
  }
}

double utility(const MarketInstance& instance, Index i, const ConsumptionVector& x, double price) {
  if (i < 0 || i >= instance.n()) throw InvalidArgument("utility: agent index out of range");
  if (x.size() != instance.n()) throw InvalidArgument("utility: dimension mismatch");
  const double xi = x[i];
  const double peers = instance.G().row(i).dot(x.values());
  return instance.a()(i) * xi - instance.b()(i) * xi * xi + xi * peers - price * xi;
}

double profit(const MarketInstance& instance, const PriceVector& p, const ConsumptionVector& x) {
  if (p.size() != instance.n() || x.size() != instance.n()) throw InvalidArgument("profit: dimension mismatch");
  return (p.values().array() - instance.c()).matrix().dot(x.values());
}

}  // namespace netprice
