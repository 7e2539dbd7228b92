#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace netprice {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

namespace linalg {

/// Solves A x = rhs by LU with partial pivoting. Throws SingularSystem when the
/// reciprocal condition estimate drops below `rcond_floor`.
Vector solve(const Matrix& A, const Vector& rhs, double rcond_floor = 1e-14);
Matrix solve(const Matrix& A, const Matrix& rhs, double rcond_floor = 1e-14);

/// Explicit inverse. Only for call sites that need the whole matrix.
Matrix inverse(const Matrix& A, double rcond_floor = 1e-14);

/// Principal submatrix / subvector on the given index set (order preserved).
Matrix principal(const Matrix& A, std::span<const Index> idx);
Vector restrict(const Vector& v, std::span<const Index> idx);

/// Eigenvalues of a symmetric matrix, ascending.
Vector symmetric_eigenvalues(const Matrix& S);

/// Symmetric square root of a symmetric positive semidefinite matrix.
/// Negative eigenvalues (round-off) are clamped to zero.
Matrix symmetric_sqrt(const Matrix& S);

/// Bounds on the spectral radius of a nonnegative matrix from the
/// Collatz-Wielandt quotients of the shifted power iteration on (M + I).
struct SpectralRadiusBounds {
  double lower = 0.0;
  double upper = 0.0;
  int iterations = 0;
};
SpectralRadiusBounds nonnegative_spectral_radius(const Matrix& M, int max_iter = 200, double tol = 1e-10);

inline double inf_norm(const Vector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

}  // namespace linalg
}  // namespace netprice
