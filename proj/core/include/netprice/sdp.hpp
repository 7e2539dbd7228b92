#pragma once

#include <cstdint>
#include <functional>

#include "netprice/linalg.hpp"

namespace netprice {

/// max y^T Q y + 2 d^T y + z over y in {-1, 1}^n, with Q symmetric and zero
/// on the diagonal. `homogenized` is the (n+1) x (n+1) block matrix
/// [[Q, d], [d^T, 0]] whose last coordinate plays the role of a sign
/// reference.
struct QuboProblem {
  Matrix Q;
  Vector d;
  double z = 0.0;
  Matrix homogenized;

  QuboProblem() = default;
  QuboProblem(Matrix Q, Vector d, double z);

  Index n() const { return d.size(); }
  double evaluate(const Vector& y) const { return y.dot(Q * y) + 2.0 * d.dot(y) + z; }
  /// sum_ij |Qhat_ij| - z: the constant that makes the shifted objective
  /// nonnegative everywhere.
  double homogenization_offset() const;
};

struct SdpOptions {
  double tol = 1e-7;
  int max_iter = 20'000;
};

/// Unit-diagonal PSD matrix Y maximizing <Qhat, Y> + z.
struct SdpSolution {
  Matrix Y;
  /// <Qhat, Y> + z at the returned (exactly feasible) Y.
  double objective = 0.0;
  /// Weak-duality bound on the relaxation optimum; >= objective and >= every
  /// binary objective value.
  double upper_bound = 0.0;
  /// Columns are the unit vectors nu_i with Y = F^T F.
  Matrix factor;
  int iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  bool converged = false;
};

/// ADMM splitting between the unit-diagonal affine set and the PSD cone.
/// Never throws on slow convergence; `converged` reports the outcome.
SdpSolution solve_sdp(const QuboProblem& qubo, const SdpOptions& options = {});

/// Factor F (columns nu_i) with Y ~ F^T F from a clamped eigendecomposition.
Matrix psd_factor(const Matrix& Y);

struct RoundingStats {
  std::int64_t count = 0;
  double mean = 0.0;
  double best = 0.0;
  std::int64_t best_trial = -1;
  /// Standard error of the mean objective.
  double std_error = 0.0;
};

struct RoundingOutcome {
  Vector y;  // +1 / -1 per agent
  RoundingStats stats;
};

/// Hyperplane rounding: r uniform on the unit sphere, agent i gets +1 when
/// it falls on the same side of r as the homogenizing coordinate (the last
/// column of the factor), -1 otherwise. Trial t draws from its own generator
/// seeded by (seed, t), so results do not depend on how trials are scheduled.
RoundingOutcome round_hyperplane(const Matrix& factor, const std::function<double(const Vector&)>& objective,
                                 std::int64_t trials, std::uint64_t seed);

/// The assignment produced by one rounding trial.
Vector hyperplane_assignment(const Matrix& factor, std::uint64_t seed, std::int64_t trial);

}  // namespace netprice
