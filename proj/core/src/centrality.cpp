#include "netprice/centrality.hpp"

#include "netprice/errors.hpp"

namespace netprice {
namespace {

constexpr double kNegativeSlack = 1e-12;

// (I - W), after checking that W does not push the Neumann series past its
// radius of convergence.
Matrix identity_minus(const Matrix& W) {
  if (W.rows() != W.cols()) throw InvalidArgument("centrality: matrix is not square");
  if (W.size() > 0 && W.minCoeff() >= 0.0) {
    const auto rho = linalg::nonnegative_spectral_radius(W);
    if (rho.lower >= 1.0) throw IllDefined("centrality: spectral radius is at least 1");
  }
  Matrix M = -W;
  M.diagonal().array() += 1.0;
  return M;
}

void require_nonnegative(const Matrix& K, const char* what) {
  if (K.size() > 0 && K.minCoeff() < -kNegativeSlack * std::max(1.0, K.cwiseAbs().maxCoeff()))
    throw IllDefined(std::string(what) + ": result has negative entries");
}

Matrix solve_or_ill_defined(const Matrix& M, const Matrix& rhs) {
  try {
    return linalg::solve(M, rhs);
  } catch (const SingularSystem& e) {
    throw IllDefined(std::string("centrality: ") + e.what());
  }
}

}  // namespace

CentralityVector bonacich(const Matrix& G, double alpha) {
  const Matrix M = identity_minus(alpha * G);
  Vector k = solve_or_ill_defined(M, Vector::Ones(G.rows()));
  require_nonnegative(k, "bonacich");
  return k;
}

CentralityVector weighted_bonacich(const Matrix& G, const Vector& d, const Vector& v) {
  if (d.size() != G.rows() || v.size() != G.rows()) throw InvalidArgument("weighted_bonacich: dimension mismatch");
  const Matrix M = identity_minus(G * d.asDiagonal());
  Vector k = solve_or_ill_defined(M, v);
  if (v.size() > 0 && d.minCoeff() >= 0.0 && v.minCoeff() >= 0.0) require_nonnegative(k, "weighted_bonacich");
  return k;
}

Vector centrality_gain(const Matrix& G, const Vector& d, const Vector& v) {
  const Index n = G.rows();
  if (d.size() != n || v.size() != n) throw InvalidArgument("centrality_gain: dimension mismatch");
  const Matrix M = identity_minus(G * d.asDiagonal());
  Matrix rhs(n, 2);
  rhs.col(0) = v;
  rhs.col(1) = Vector::Ones(n);
  const Matrix K = solve_or_ill_defined(M, rhs);
  if (d.minCoeff() >= 0.0) require_nonnegative(K.col(1), "centrality_gain");
  Vector H(n);
  for (Index i = 0; i < n; ++i) {
    if (!(K(i, 1) > 0.0)) throw IllDefined("centrality_gain: zero denominator");
    H(i) = K(i, 0) / K(i, 1);
  }
  return H;
}

}  // namespace netprice
