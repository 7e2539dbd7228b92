#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "netprice/linalg.hpp"

namespace netprice {

/// Two extreme influence matrices of one network family; blends between them
/// interpolate from one orientation of influence to the other.
struct NetworkPair {
  Matrix g1;
  Matrix g2;
};

struct BlendSpec {
  Matrix g1;
  Matrix g2;
  double alpha = 0.0;
};

/// Star on n agents with agent 0 as the center. g1: the center is influenced
/// by every other agent (row 0 all ones). g2 = g1^T: the center influences
/// everyone.
NetworkPair star_pair(Index n);

/// g1 strictly upper triangular with i.i.d. uniform [0,1] entries, g2 = g1^T.
NetworkPair triangular_pair(Index n, std::uint64_t seed);

/// Preferential attachment: start from two connected agents, each newcomer
/// links to two distinct earlier agents chosen with probability proportional
/// to degree. g1 lets younger agents influence older ones, g2 the reverse;
/// each nonzero row is normalized to sum to one.
NetworkPair preferential_attachment_pair(Index n, std::uint64_t seed);

/// alpha g1 + (1 - alpha) g2.
Matrix blend(const BlendSpec& spec);
Matrix blend(const NetworkPair& pair, double alpha);

/// Undirected edge list (younger, older) of the preferential attachment
/// process, exposed for degree statistics.
std::vector<std::pair<Index, Index>> preferential_attachment_edges(Index n, std::uint64_t seed);

}  // namespace netprice
