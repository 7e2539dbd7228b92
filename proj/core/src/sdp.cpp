#include "netprice/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "netprice/errors.hpp"
#include "netprice/random.hpp"
#include "parallel.hpp"

namespace netprice {
namespace {

Matrix project_psd(const Matrix& S) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(S);
  if (es.info() != Eigen::Success) throw NoConvergence("sdp: eigendecomposition failed");
  const Vector clamped = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * clamped.asDiagonal() * es.eigenvectors().transpose();
}

Matrix symmetrize(const Matrix& A) { return 0.5 * (A + A.transpose()); }

// Rescale a PSD matrix to unit diagonal: D^{-1/2} Z D^{-1/2}.
Matrix unit_diagonal(const Matrix& Z) {
  const Index N = Z.rows();
  Vector s(N);
  for (Index i = 0; i < N; ++i) s(i) = Z(i, i) > 1e-300 ? 1.0 / std::sqrt(Z(i, i)) : 0.0;
  Matrix Y = s.asDiagonal() * Z * s.asDiagonal();
  for (Index i = 0; i < N; ++i) {
    if (s(i) == 0.0) {
      Y.row(i).setZero();
      Y.col(i).setZero();
    }
    Y(i, i) = 1.0;
  }
  return symmetrize(Y);
}

// For any multipliers lambda, <C, Y> <= 1^T lambda - N lambda_min(Diag(lambda) - C)
// on the feasible set {diag(Y) = 1, Y psd}.
double dual_bound(const Matrix& C, const Vector& lambda) {
  Matrix S = -C;
  S.diagonal() += lambda;
  const double lmin = linalg::symmetric_eigenvalues(symmetrize(S))(0);
  return lambda.sum() - static_cast<double>(C.rows()) * lmin;
}

}  // namespace

QuboProblem::QuboProblem(Matrix Q_, Vector d_, double z_) : Q(std::move(Q_)), d(std::move(d_)), z(z_) {
  const Index n = d.size();
  if (Q.rows() != n || Q.cols() != n) throw InvalidArgument("qubo: Q must be n x n");
  homogenized = Matrix::Zero(n + 1, n + 1);
  homogenized.topLeftCorner(n, n) = Q;
  homogenized.topRightCorner(n, 1) = d;
  homogenized.bottomLeftCorner(1, n) = d.transpose();
}

double QuboProblem::homogenization_offset() const { return homogenized.cwiseAbs().sum() - z; }

SdpSolution solve_sdp(const QuboProblem& qubo, const SdpOptions& options) {
  const Matrix C = symmetrize(qubo.homogenized);
  const Index N = C.rows();
  const double dimension = static_cast<double>(N);

  Matrix Z = Matrix::Identity(N, N);
  Matrix U = Matrix::Zero(N, N);
  Matrix Y = Z;
  const double cnorm = C.norm();
  double rho = cnorm > 0.0 ? cnorm / dimension : 1.0;

  SdpSolution sol;
  double r = 0.0, s = 0.0;
  int it = 0;
  for (; it < options.max_iter; ++it) {
    // Affine step on the linear objective, then back onto diag(Y) = 1.
    Y = Z - U + C / rho;
    Y.diagonal().setOnes();
    const Matrix Z_old = Z;
    Z = symmetrize(project_psd(Y + U));
    U += Y - Z;

    r = (Y - Z).norm();
    s = rho * (Z - Z_old).norm();
    const double eps_pri = options.tol * std::max({1.0, Y.norm(), Z.norm()});
    const double eps_dual = options.tol * std::max(1.0, rho * U.norm());
    if (it > 0 && r <= eps_pri && s <= eps_dual) {
      sol.converged = true;
      ++it;
      break;
    }
    if (it % 10 == 9) {
      if (r > 10.0 * s) {
        rho *= 2.0;
        U /= 2.0;
      } else if (s > 10.0 * r) {
        rho /= 2.0;
        U *= 2.0;
      }
    }
  }

  sol.iterations = it;
  sol.primal_residual = std::max(r, (Z.diagonal().array() - 1.0).abs().maxCoeff());
  sol.dual_residual = s;
  sol.Y = unit_diagonal(Z);
  sol.objective = (C.array() * sol.Y.array()).sum() + qubo.z;

  const Vector lambda_primal = (C * sol.Y).diagonal();
  const Vector lambda_admm = (C - rho * U).diagonal();
  sol.upper_bound = std::min(dual_bound(C, lambda_primal), dual_bound(C, lambda_admm)) + qubo.z;
  sol.upper_bound = std::max(sol.upper_bound, sol.objective);
  sol.factor = psd_factor(sol.Y);
  return sol;
}

Matrix psd_factor(const Matrix& Y) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(symmetrize(Y));
  if (es.info() != Eigen::Success) throw NoConvergence("sdp: eigendecomposition failed");
  const Vector root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  Matrix F = root.asDiagonal() * es.eigenvectors().transpose();
  for (Index j = 0; j < F.cols(); ++j) {
    const double norm = F.col(j).norm();
    if (norm > 0.0) F.col(j) /= norm;
  }
  return F;
}

Vector hyperplane_assignment(const Matrix& factor, std::uint64_t seed, std::int64_t trial) {
  Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
  Vector r(factor.rows());
  for (Index k = 0; k < r.size(); ++k) r(k) = rng.normal();
  r /= std::max(r.norm(), 1e-300);
  const Vector side = factor.transpose() * r;
  const Index ref = side.size() - 1;
  const bool ref_positive = side(ref) >= 0.0;
  Vector y(ref);
  for (Index i = 0; i < ref; ++i) y(i) = (side(i) >= 0.0) == ref_positive ? 1.0 : -1.0;
  return y;
}

RoundingOutcome round_hyperplane(const Matrix& factor, const std::function<double(const Vector&)>& objective,
                                 std::int64_t trials, std::uint64_t seed) {
  if (trials <= 0) throw InvalidArgument("round_hyperplane: trials must be positive");
  if (factor.cols() < 1) throw InvalidArgument("round_hyperplane: empty factor");

  std::vector<double> values(static_cast<std::size_t>(trials));
  detail::parallel_for(
      trials,
      [&](std::int64_t t) { values[static_cast<std::size_t>(t)] = objective(hyperplane_assignment(factor, seed, t)); },
      1024);

  RoundingOutcome out;
  out.stats.count = trials;
  double sum = 0.0;
  for (std::int64_t t = 0; t < trials; ++t) {
    const double v = values[static_cast<std::size_t>(t)];
    sum += v;
    if (out.stats.best_trial < 0 || v > out.stats.best) {
      out.stats.best = v;
      out.stats.best_trial = t;
    }
  }
  out.stats.mean = sum / static_cast<double>(trials);
  double sq = 0.0;
  for (double v : values) sq += (v - out.stats.mean) * (v - out.stats.mean);
  if (trials > 1) out.stats.std_error = std::sqrt(sq / static_cast<double>(trials - 1) / static_cast<double>(trials));
  out.y = hyperplane_assignment(factor, seed, out.stats.best_trial);
  return out;
}

}  // namespace netprice
