#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "netprice/generators.hpp"
#include "netprice/model.hpp"

namespace netprice {

enum class Family { Star, Triangular, PreferentialAttachment };

Family parse_family(const std::string& name);
std::string family_name(Family family);

/// Curvature rule for the simulations: "n/<k>" scales with the network size,
/// a plain number is used as is.
struct CurvatureRule {
  double divisor = 0.0;  // > 0 for "n/<k>"
  double constant = 0.0;
  std::string text;

  double value(Index n) const;
};

CurvatureRule parse_curvature_rule(const std::string& text);

/// Homogeneous agents with a - c = 1 (a = 1, c = 0) on the given network.
MarketInstance simulation_instance(const Matrix& G, double b);

struct FigureConfig {
  Family family = Family::Star;
  Index n = 100;
  CurvatureRule b_rule = parse_curvature_rule("n/10");
  Index alpha_points = 101;
  Index instances = 100;  // ignored for the star, which is deterministic
  std::uint64_t seed = 0;
};

struct FigureRow {
  double alpha = 0.0;
  double ratio_mean = 0.0;
  double lower_mean = 0.0;
  double upper_mean = 0.0;
  double ratio_sd = 0.0;
  // per-instance sandwich lower <= ratio <= upper held everywhere
  bool sandwich = true;
};

/// Alpha grid with `points` equally spaced values in [0,1].
std::vector<double> alpha_grid(Index points);

NetworkPair figure_network(const FigureConfig& config, Index instance);

/// Mean of pi0 / piN and of its two spectral bounds over the instances, for
/// every alpha on the grid. Instances run in parallel; rows are ordered by
/// alpha and averages accumulate in instance order.
std::vector<FigureRow> run_figure(const FigureConfig& config);

/// Header plus one line per row, 12 significant digits.
void write_figure_csv(std::ostream& out, const std::vector<FigureRow>& rows);

}  // namespace netprice
