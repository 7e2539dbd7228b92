#include "netprice/experiments.hpp"

#include <charconv>
#include <algorithm>
#include <cmath>
#include <ostream>

#include "netprice/errors.hpp"
#include "netprice/random.hpp"
#include "netprice/value_of_info.hpp"
#include "parallel.hpp"

namespace netprice {
namespace {

constexpr double kSandwichSlack = 1e-10;

double parse_number(const std::string& text, const std::string& context) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value))
    throw InvalidArgument(context + ": cannot parse '" + text + "'");
  return value;
}

}  // namespace

Family parse_family(const std::string& name) {
  if (name == "star") return Family::Star;
  if (name == "triangular") return Family::Triangular;
  if (name == "pa") return Family::PreferentialAttachment;
  throw InvalidArgument("unknown network family '" + name + "' (star|triangular|pa)");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::Star: return "star";
    case Family::Triangular: return "triangular";
    case Family::PreferentialAttachment: return "pa";
  }
  return "?";
}

double CurvatureRule::value(Index n) const {
  return divisor > 0.0 ? static_cast<double>(n) / divisor : constant;
}

CurvatureRule parse_curvature_rule(const std::string& text) {
  CurvatureRule rule;
  rule.text = text;
  if (text.rfind("n/", 0) == 0) {
    rule.divisor = parse_number(text.substr(2), "b rule");
    if (!(rule.divisor > 0.0)) throw InvalidArgument("b rule: divisor must be positive");
  } else {
    rule.constant = parse_number(text, "b rule");
    if (!(rule.constant > 0.0)) throw InvalidArgument("b rule: b must be positive");
  }
  return rule;
}

MarketInstance simulation_instance(const Matrix& G, double b) {
  const Index n = G.rows();
  return MarketInstance(G, Vector::Ones(n), Vector::Constant(n, b), 0.0);
}

std::vector<double> alpha_grid(Index points) {
  if (points < 1) throw InvalidArgument("alpha grid needs at least one point");
  if (points == 1) return {0.0};
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (Index k = 0; k < points; ++k)
    grid[static_cast<std::size_t>(k)] = static_cast<double>(k) / static_cast<double>(points - 1);
  return grid;
}

NetworkPair figure_network(const FigureConfig& config, Index instance) {
  const std::uint64_t seed = derive_seed(config.seed, static_cast<std::uint64_t>(instance));
  switch (config.family) {
    case Family::Star: return star_pair(config.n);
    case Family::Triangular: return triangular_pair(config.n, seed);
    case Family::PreferentialAttachment: return preferential_attachment_pair(config.n, seed);
  }
  throw InvalidArgument("unknown family");
}

std::vector<FigureRow> run_figure(const FigureConfig& config) {
  const auto grid = alpha_grid(config.alpha_points);
  const Index count = config.family == Family::Star ? 1 : config.instances;
  if (count < 1) throw InvalidArgument("figure: need at least one instance");
  const double b = config.b_rule.value(config.n);
  const std::size_t points = grid.size();

  // results[instance][alpha]
  std::vector<std::vector<ProfitComparison>> results(static_cast<std::size_t>(count));
  detail::parallel_for(count, [&](std::int64_t i) {
    const NetworkPair pair = figure_network(config, i);
    auto& slot = results[static_cast<std::size_t>(i)];
    slot.reserve(points);
    for (double alpha : grid) slot.push_back(compare_profits(simulation_instance(blend(pair, alpha), b)));
  });

  std::vector<FigureRow> rows(points);
  for (std::size_t k = 0; k < points; ++k) {
    FigureRow& row = rows[k];
    row.alpha = grid[k];
    double sum_sq = 0.0;
    for (const auto& inst : results) {
      const ProfitComparison& r = inst[k];
      row.ratio_mean += r.ratio;
      row.lower_mean += r.lower_bound;
      row.upper_mean += r.upper_bound;
      sum_sq += r.ratio * r.ratio;
      if (!(r.lower_bound <= r.ratio + kSandwichSlack && r.ratio <= r.upper_bound + kSandwichSlack)) row.sandwich = false;
    }
    const double m = static_cast<double>(count);
    row.ratio_mean /= m;
    row.lower_mean /= m;
    row.upper_mean /= m;
    row.ratio_sd = count > 1 ? std::sqrt(std::max(0.0, (sum_sq - m * row.ratio_mean * row.ratio_mean) / (m - 1.0))) : 0.0;
  }
  return rows;
}

void write_figure_csv(std::ostream& out, const std::vector<FigureRow>& rows) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out.precision(12);
  out << "alpha,ratio_mean,lower_mean,upper_mean\n";
  for (const auto& row : rows)
    out << row.alpha << ',' << row.ratio_mean << ',' << row.lower_mean << ',' << row.upper_mean << '\n';
  out.flags(flags);
  out.precision(precision);
}

}  // namespace netprice
