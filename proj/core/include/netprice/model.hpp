#pragma once

#include <string>
#include <vector>

#include "netprice/linalg.hpp"

namespace netprice {

/// A market of n agents: influence matrix G (g_ij = influence of j on i),
/// linear utility coefficients a, quadratic coefficients b and the
/// monopolist's marginal cost c.
///
/// Construction only checks shapes and finiteness. The model assumptions
/// (zero diagonal, entries in [0,1], b_i > sum_j g_ij, a_i > c) are reported by
/// validate() and enforced by the solvers that rely on them.
class MarketInstance {
 public:
  MarketInstance(Matrix G, Vector a, Vector b, double c);

  Index n() const { return a_.size(); }
  const Matrix& G() const { return G_; }
  const Vector& a() const { return a_; }
  const Vector& b() const { return b_; }
  double c() const { return c_; }

  /// Diagonal of Lambda, i.e. 2 b_i.
  Vector lambda() const { return 2.0 * b_; }
  /// Lambda - G.
  Matrix lambda_minus_G() const;

 private:
  Matrix G_;
  Vector a_;
  Vector b_;
  double c_;
};

class PriceVector {
 public:
  PriceVector() = default;
  explicit PriceVector(Vector p);
  static PriceVector uniform(Index n, double price);

  Index size() const { return p_.size(); }
  const Vector& values() const { return p_; }
  double operator[](Index i) const { return p_(i); }

 private:
  Vector p_;
};

/// Units purchased by each agent; all entries are nonnegative.
class ConsumptionVector {
 public:
  ConsumptionVector() = default;
  explicit ConsumptionVector(Vector x);

  Index size() const { return x_.size(); }
  const Vector& values() const { return x_; }
  double operator[](Index i) const { return x_(i); }

 private:
  Vector x_;
};

enum class ViolationKind {
  NonzeroDiagonal,
  InfluenceOutOfRange,
  NonpositiveCurvature,
  Concavity,     // b_i > sum_j g_ij
  Participation  // a_i > c
};

struct Violation {
  ViolationKind kind;
  std::vector<Index> indices;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
  std::string to_string() const;
};

ValidationReport validate(const MarketInstance& instance);

/// Throws InvalidInstance carrying the report when validate() is not clean.
void require_admissible(const MarketInstance& instance);

/// Shape, diagonal and range checks only (the concavity condition b_i > sum_j g_ij is not required).
void require_structural(const MarketInstance& instance);

/// u_i = a_i x_i - b_i x_i^2 + x_i sum_j g_ij x_j - p_i x_i.
double utility(const MarketInstance& instance, Index i, const ConsumptionVector& x, double price);

/// sum_i (p_i - c) x_i.
double profit(const MarketInstance& instance, const PriceVector& p, const ConsumptionVector& x);

}  // namespace netprice
