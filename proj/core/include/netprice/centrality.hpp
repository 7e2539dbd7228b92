#pragma once

#include "netprice/linalg.hpp"

namespace netprice {

/// Nonnegative centrality scores, one per agent.
using CentralityVector = Vector;

/// Bonacich centrality (I - alpha G)^{-1} 1.
///
/// Throws IllDefined when (I - alpha G) is singular, when alpha G is
/// nonnegative with spectral radius >= 1, or when the result has a negative
/// entry.
CentralityVector bonacich(const Matrix& G, double alpha);

/// Weighted Bonacich centrality (I - G D)^{-1} v with D = diag(d).
CentralityVector weighted_bonacich(const Matrix& G, const Vector& d, const Vector& v);

/// Centrality gain H_i = K_i(G, D, v) / K_i(G, D, 1).
Vector centrality_gain(const Matrix& G, const Vector& d, const Vector& v);

}  // namespace netprice
