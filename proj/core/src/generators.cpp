#include "netprice/generators.hpp"

#include <vector>

#include "netprice/errors.hpp"
#include "netprice/random.hpp"

namespace netprice {
namespace {

void normalize_rows(Matrix& G) {
  for (Index i = 0; i < G.rows(); ++i) {
    const double nonzero = static_cast<double>((G.row(i).array() != 0.0).count());
    if (nonzero > 0.0) G.row(i) = (G.row(i).array() != 0.0).cast<double>() / nonzero;
  }
}

void check_influence(const Matrix& G, const char* name) {
  if (G.rows() != G.cols()) throw InvalidArgument(std::string("blend: ") + name + " is not square");
  for (Index i = 0; i < G.rows(); ++i)
    if (G(i, i) != 0.0) throw InvalidArgument(std::string("blend: ") + name + " has a nonzero diagonal");
  if (G.size() > 0 && (G.minCoeff() < 0.0 || G.maxCoeff() > 1.0))
    throw InvalidArgument(std::string("blend: ") + name + " has entries outside [0,1]");
}

// Degree-proportional draw over agents [0, count), skipping `excluded`.
Index draw_by_degree(Rng& rng, const std::vector<double>& degree, Index count, Index excluded) {
  double total = 0.0;
  for (Index j = 0; j < count; ++j)
    if (j != excluded) total += degree[static_cast<std::size_t>(j)];
  double u = rng.uniform() * total;
  Index last = -1;
  for (Index j = 0; j < count; ++j) {
    if (j == excluded) continue;
    last = j;
    u -= degree[static_cast<std::size_t>(j)];
    if (u < 0.0) return j;
  }
  return last;
}

}  // namespace

NetworkPair star_pair(Index n) {
  if (n < 2) throw InvalidArgument("star_pair: n must be at least 2");
  Matrix g1 = Matrix::Zero(n, n);
  g1.row(0).tail(n - 1).setOnes();
  Matrix g2 = g1.transpose();
  return {std::move(g1), std::move(g2)};
}

NetworkPair triangular_pair(Index n, std::uint64_t seed) {
  if (n < 2) throw InvalidArgument("triangular_pair: n must be at least 2");
  Rng rng(seed);
  Matrix g1 = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) g1(i, j) = rng.uniform();
  Matrix g2 = g1.transpose();
  return {std::move(g1), std::move(g2)};
}

std::vector<std::pair<Index, Index>> preferential_attachment_edges(Index n, std::uint64_t seed) {
  if (n < 3) throw InvalidArgument("preferential_attachment_pair: n must be at least 3");
  Rng rng(seed);
  std::vector<double> degree(static_cast<std::size_t>(n), 0.0);
  std::vector<std::pair<Index, Index>> edges{{1, 0}};
  degree[0] = degree[1] = 1.0;
  for (Index t = 2; t < n; ++t) {
    const Index first = draw_by_degree(rng, degree, t, -1);
    const Index second = draw_by_degree(rng, degree, t, first);
    for (Index older : {first, second}) {
      edges.emplace_back(t, older);
      degree[static_cast<std::size_t>(older)] += 1.0;
      degree[static_cast<std::size_t>(t)] += 1.0;
    }
  }
  return edges;
}

NetworkPair preferential_attachment_pair(Index n, std::uint64_t seed) {
  const auto edges = preferential_attachment_edges(n, seed);
  Matrix g1 = Matrix::Zero(n, n);
  Matrix g2 = Matrix::Zero(n, n);
  for (const auto& [young, old] : edges) {
    g1(old, young) = 1.0;  // the younger agent influences the older one
    g2(young, old) = 1.0;
  }
  normalize_rows(g1);
  normalize_rows(g2);
  return {std::move(g1), std::move(g2)};
}

Matrix blend(const BlendSpec& spec) {
  if (!(spec.alpha >= 0.0 && spec.alpha <= 1.0)) throw InvalidArgument("blend: alpha must lie in [0,1]");
  check_influence(spec.g1, "g1");
  check_influence(spec.g2, "g2");
  if (spec.g1.rows() != spec.g2.rows()) throw InvalidArgument("blend: size mismatch");
  if (spec.alpha == 1.0) return spec.g1;
  if (spec.alpha == 0.0) return spec.g2;
  return spec.alpha * spec.g1 + (1.0 - spec.alpha) * spec.g2;
}

Matrix blend(const NetworkPair& pair, double alpha) { return blend(BlendSpec{pair.g1, pair.g2, alpha}); }

}  // namespace netprice
