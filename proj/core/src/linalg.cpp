#include "netprice/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "netprice/errors.hpp"

namespace netprice::linalg {
namespace {

Eigen::PartialPivLU<Matrix> factor(const Matrix& A, double rcond_floor) {
  if (A.rows() != A.cols()) throw InvalidArgument("linalg: matrix is not square");
  Eigen::PartialPivLU<Matrix> lu(A);
  if (A.rows() > 0) {
    const double rc = lu.rcond();
    if (!(rc > rcond_floor)) {
      throw SingularSystem("linalg: matrix is singular to working precision (rcond=" + std::to_string(rc) + ")");
    }
  }
  return lu;
}

}  // namespace

Vector solve(const Matrix& A, const Vector& rhs, double rcond_floor) {
  if (A.rows() != rhs.size()) throw InvalidArgument("linalg: dimension mismatch in solve");
  if (A.rows() == 0) return Vector(0);
  return factor(A, rcond_floor).solve(rhs);
}

Matrix solve(const Matrix& A, const Matrix& rhs, double rcond_floor) {
  if (A.rows() != rhs.rows()) throw InvalidArgument("linalg: dimension mismatch in solve");
  if (A.rows() == 0) return Matrix(0, rhs.cols());
  return factor(A, rcond_floor).solve(rhs);
}

Matrix inverse(const Matrix& A, double rcond_floor) {
  if (A.rows() == 0) return Matrix(0, 0);
  return factor(A, rcond_floor).inverse();
}

Matrix principal(const Matrix& A, std::span<const Index> idx) {
  const auto k = static_cast<Index>(idx.size());
  Matrix out(k, k);
  for (Index r = 0; r < k; ++r)
    for (Index c = 0; c < k; ++c) out(r, c) = A(idx[r], idx[c]);
  return out;
}

Vector restrict(const Vector& v, std::span<const Index> idx) {
  Vector out(static_cast<Index>(idx.size()));
  for (Index r = 0; r < out.size(); ++r) out(r) = v(idx[r]);
  return out;
}

Vector symmetric_eigenvalues(const Matrix& S) {
  if (S.rows() == 0) return Vector(0);
  Eigen::SelfAdjointEigenSolver<Matrix> es(S, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NoConvergence("linalg: symmetric eigensolver failed");
  return es.eigenvalues();
}

Matrix symmetric_sqrt(const Matrix& S) {
  if (S.rows() == 0) return Matrix(0, 0);
  Eigen::SelfAdjointEigenSolver<Matrix> es(S);
  if (es.info() != Eigen::Success) throw NoConvergence("linalg: symmetric eigensolver failed");
  const Vector root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * root.asDiagonal() * es.eigenvectors().transpose();
}

SpectralRadiusBounds nonnegative_spectral_radius(const Matrix& M, int max_iter, double tol) {
  SpectralRadiusBounds out;
  const Index n = M.rows();
  if (n == 0) return out;
  Vector x = Vector::Ones(n);
  for (int it = 0; it <= max_iter; ++it) {
    const Vector y = M * x;
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (Index i = 0; i < n; ++i) {
      const double q = y(i) / x(i);
      lo = std::min(lo, q);
      hi = std::max(hi, q);
    }
    out.lower = std::max(out.lower, lo);
    out.upper = it == 0 ? hi : std::min(out.upper, hi);
    out.iterations = it;
    if (out.upper - out.lower <= tol * std::max(1.0, out.upper)) break;
    x = y + x;
    x /= x.maxCoeff();
  }
  return out;
}

}  // namespace netprice::linalg
