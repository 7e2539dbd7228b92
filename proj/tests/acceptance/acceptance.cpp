// Acceptance checks. Each criterion prints exactly one PASS/FAIL line; with
// --criterion N only that one runs. Exit status is nonzero if any ran criterion
// failed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Eigenvalues>

#include "instances.hpp"
#include "netprice/discriminatory_pricing.hpp"
#include "netprice/equilibrium.hpp"
#include "netprice/experiments.hpp"
#include "netprice/two_price.hpp"
#include "netprice/uniform_pricing.hpp"
#include "netprice/value_of_info.hpp"

namespace netprice {
namespace {

using testing::random_instance;
using testing::uniform;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;  // <= 0: none
  std::function<Outcome()> run;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Index draw_size(Rng& rng, Index lo, Index hi) {
  return lo + static_cast<Index>(rng.next() % static_cast<std::uint64_t>(hi - lo + 1));
}

double profit_at(const MarketInstance& m, const Vector& p, const EquilibriumOptions& opts = {}) {
  const PriceVector pv(p);
  return profit(m, pv, solve_equilibrium(m, pv, opts).x);
}

// 1. Symmetric networks: optimal discriminatory prices are (a + c)/2.
Outcome symmetric_prices() {
  Rng rng(1001);
  testing::InstanceShape shape;
  shape.symmetric = true;
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto m = random_instance(rng, draw_size(rng, 1, 50), shape);
    const Vector nominal = (m.a().array() + m.c()).matrix() / 2.0;
    worst = std::max(worst, (optimal_prices(m).p.values() - nominal).lpNorm<Eigen::Infinity>());
  }
  return {worst <= 1e-8, "max |p* - (a+c)/2| = " + fmt(worst) + " over 100 instances (limit 1e-8)"};
}

// 2. Fixed-point solver vs support enumeration, and uniqueness from random starts.
Outcome equilibrium_oracle() {
  Rng rng(1002);
  double worst = 0.0, worst_start = 0.0;
  int support_mismatch = 0;
  for (int k = 0; k < 100; ++k) {
    const Index n = draw_size(rng, 1, 10);
    const auto m = random_instance(rng, n);
    const PriceVector p(testing::random_prices(rng, m));
    const auto eq = solve_equilibrium(m, p);
    const auto ex = solve_equilibrium_exact(m, p);
    worst = std::max(worst, (eq.x.values() - ex.x.values()).lpNorm<Eigen::Infinity>());
    if (eq.support != ex.support) ++support_mismatch;
    for (int s = 0; s < 50; ++s) {
      EquilibriumOptions opts;
      Vector start(n);
      for (Index i = 0; i < n; ++i) start(i) = uniform(rng, 0.0, 10.0);
      opts.start = start;
      worst_start = std::max(worst_start, (solve_equilibrium(m, p, opts).x.values() - ex.x.values()).lpNorm<Eigen::Infinity>());
    }
  }
  const bool pass = worst <= 1e-8 && worst_start <= 1e-8 && support_mismatch == 0;
  return {pass, "solver vs enumeration " + fmt(worst) + ", over 50 starts " + fmt(worst_start) +
                    ", support mismatches " + std::to_string(support_mismatch) + " (limit 1e-8)"};
}

// 3. No perturbation of the closed-form prices improves profit.
Outcome discriminatory_optimality() {
  Rng rng(1003);
  double worst_gain = -INFINITY;
  for (int k = 0; k < 100; ++k) {
    const Index n = draw_size(rng, 1, 20);
    const auto m = random_instance(rng, n);
    const Vector p = optimal_prices(m).p.values();
    const double base = profit_at(m, p);
    for (int t = 0; t < 1000; ++t) {
      Vector d(n);
      for (Index i = 0; i < n; ++i) d(i) = rng.normal();
      d.normalize();
      worst_gain = std::max(worst_gain, profit_at(m, p + 1e-5 * d) - base);
    }
  }
  return {worst_gain <= 1e-8, "max profit gain over 100x1000 perturbations = " + fmt(worst_gain) + " (limit 1e-8)"};
}

// 4. Breakpoint algorithm vs grid search through the equilibrium solver.
Outcome uniform_vs_grid() {
  Rng rng(1004);
  double worst_gap = 0.0;
  int non_increasing = 0, midpoint_mismatch = 0;
  for (int k = 0; k < 100; ++k) {
    const Index n = draw_size(rng, 1, 15);
    const auto m = random_instance(rng, n);
    const auto r = optimal_uniform_price(m);

    // grid with warm starts along the price path
    double best = -INFINITY;
    EquilibriumOptions opts;
    const double top = m.a().maxCoeff();
    const auto steps = static_cast<long>(std::floor((top - m.c()) / 1e-4));
    for (long s = 0; s <= steps; ++s) {
      const double p = m.c() + static_cast<double>(s) * 1e-4;
      const PriceVector pv = PriceVector::uniform(n, p);
      const auto eq = solve_equilibrium(m, pv, opts);
      opts.start = eq.x.values();
      best = std::max(best, profit(m, pv, eq.x));
    }
    worst_gap = std::max(worst_gap, std::abs(r.profit - best));

    const auto bp = breakpoints(m);
    for (std::size_t j = 1; j < bp.prices.size(); ++j)
      if (!(bp.prices[j] > bp.prices[j - 1])) ++non_increasing;
    std::vector<Index> active(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) active[static_cast<std::size_t>(i)] = i;
    double lower = m.c();
    for (std::size_t j = 0; j < bp.prices.size(); ++j) {
      if (bp.prices[j] > lower) {
        const double mid = 0.5 * (lower + bp.prices[j]);
        if (solve_equilibrium(m, PriceVector::uniform(n, mid)).support != active) ++midpoint_mismatch;
        lower = bp.prices[j];
      }
      std::vector<Index> next;
      for (Index i : active)
        if (std::find(bp.dropout_sets[j].begin(), bp.dropout_sets[j].end(), i) == bp.dropout_sets[j].end())
          next.push_back(i);
      active = std::move(next);
    }
  }
  const bool pass = worst_gap <= 1e-3 && non_increasing == 0 && midpoint_mismatch == 0;
  return {pass, "max |profit - grid| = " + fmt(worst_gap) + " (limit 1e-3), non-increasing breakpoints " +
                    std::to_string(non_increasing) + ", midpoint support mismatches " +
                    std::to_string(midpoint_mismatch)};
}

// 5. Rounding guarantee with the stated offset m; relaxation dominates the
// optimum. The same inequality with the exact homogenization offset is
// reported alongside but does not decide the outcome.
Outcome two_price_guarantee() {
  Rng rng(1005);
  int guarantee_fail = 0, exact_offset_fail = 0, negative_shift = 0, bound_fail = 0, objective_fail = 0;
  double min_margin = INFINITY;
  for (int k = 0; k < 100; ++k) {
    const Index n = draw_size(rng, 1, 12);
    const auto m = random_instance(rng, n);
    const double top = m.a().minCoeff();
    const double lo = m.c() + uniform(rng, 0.0, 0.6) * (top - m.c());
    const double hi = lo + uniform(rng, 0.05, 0.99) * (top - lo);
    const TwoPriceInstance tp(m, lo, hi);
    const double w_opt = brute_force(tp).profit;
    TwoPriceOptions opts;
    opts.force_sdp = true;
    opts.trials = 10000;
    opts.seed = static_cast<std::uint64_t>(k);
    const auto r = approximate(tp, opts);
    const double margin = (r.trials.mean + r.m_offset) - kRoundingRatio * (w_opt + r.m_offset);
    min_margin = std::min(min_margin, margin);
    if (!(margin > 0.0)) ++guarantee_fail;
    if (w_opt + r.m_offset < 0.0) ++negative_shift;
    const double exact = to_qubo(tp).homogenization_offset();
    if (!((r.trials.mean + exact) > kRoundingRatio * (w_opt + exact))) ++exact_offset_fail;
    // floating-point comparison: the relaxation is often tight
    const double slack = 1e-12 * std::max(1.0, std::abs(w_opt));
    if (!(*r.sdp_upper_bound >= w_opt - slack)) ++bound_fail;
    if (!(*r.sdp_objective >= w_opt - 1e-6 * std::max(1.0, std::abs(w_opt)))) ++objective_fail;
  }
  const bool pass = guarantee_fail == 0 && bound_fail == 0 && objective_fail == 0;
  return {pass, "guarantee failures with stated m " + std::to_string(guarantee_fail) + " (min margin " +
                    fmt(min_margin) + ", W_OPT+m<0 in " + std::to_string(negative_shift) +
                    "); with exact offset " + std::to_string(exact_offset_fail) + "; certified bound < optimum " +
                    std::to_string(bound_fail) + ", relaxation value < optimum " + std::to_string(objective_fail)};
}

std::vector<FigureRow> figure(Family family, const char* rule, Index points, Index instances, std::uint64_t seed) {
  FigureConfig cfg;
  cfg.family = family;
  cfg.n = 100;
  cfg.b_rule = parse_curvature_rule(rule);
  cfg.alpha_points = points;
  cfg.instances = instances;
  cfg.seed = seed;
  return run_figure(cfg);
}

// 6. Star network sweep.
Outcome star_figure() {
  const auto r10 = figure(Family::Star, "n/10", 101, 1, 0);
  const auto r20 = figure(Family::Star, "n/20", 101, 1, 0);
  const double mid = std::max(std::abs(r10[50].ratio_mean - 1.0), std::abs(r20[50].ratio_mean - 1.0));
  const double gain10_0 = 1.0 / r10.front().ratio_mean, gain10_1 = 1.0 / r10.back().ratio_mean;
  const double gain20_0 = 1.0 / r20.front().ratio_mean, gain20_1 = 1.0 / r20.back().ratio_mean;
  double lower_gap = 0.0;
  for (const auto* rows : {&r10, &r20})
    for (const auto& row : *rows) lower_gap = std::max(lower_gap, std::abs(row.lower_mean - row.ratio_mean));
  const bool mid_ok = mid <= 1e-8;
  const bool b10_ok = std::abs(gain10_0 - 1.15) <= 0.05 && std::abs(gain10_1 - 1.15) <= 0.05;
  const bool b20_ok = gain20_0 >= 50.0 && gain20_1 >= 50.0;
  const bool lower_ok = lower_gap <= 1e-6;
  std::ostringstream os;
  os << "alpha=0.5 |ratio-1| " << fmt(mid) << (mid_ok ? " ok" : " FAIL") << "; b=n/10 piN/pi0 " << fmt(gain10_0)
     << "/" << fmt(gain10_1) << " (want 1.15+-0.05)" << (b10_ok ? " ok" : " FAIL") << "; b=n/20 piN/pi0 "
     << fmt(gain20_0) << "/" << fmt(gain20_1) << " (want >=50)" << (b20_ok ? " ok" : " FAIL")
     << "; max |lower-ratio| " << fmt(lower_gap) << (lower_ok ? " ok" : " FAIL");
  return {mid_ok && b10_ok && b20_ok && lower_ok, os.str()};
}

// 7. Triangular network sweep.
Outcome triangular_figure() {
  const Index instances = 100;
  std::ostringstream os;
  bool pass = true;
  struct Case {
    const char* rule;
    double target;
  };
  for (const Case c : {Case{"n/2", 0.15}, Case{"n/3", 0.40}}) {
    const auto rows = figure(Family::Triangular, c.rule, 21, instances, 7);
    double worst_asym = 0.0;
    bool sym_ok = true, sandwich_ok = true;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const auto& a = rows[k];
      const auto& b = rows[rows.size() - 1 - k];
      const double se = std::sqrt((a.ratio_sd * a.ratio_sd + b.ratio_sd * b.ratio_sd) / static_cast<double>(instances));
      const double diff = std::abs(a.ratio_mean - b.ratio_mean);
      worst_asym = std::max(worst_asym, diff);
      if (diff > 3.0 * se + 1e-12) sym_ok = false;
      if (!a.sandwich || !(a.lower_mean <= a.ratio_mean && a.ratio_mean <= a.upper_mean)) sandwich_ok = false;
    }
    const double gain0 = 1.0 / rows.front().ratio_mean - 1.0;
    const double gain1 = 1.0 / rows.back().ratio_mean - 1.0;
    const bool gain_ok = std::abs(gain0 - c.target) <= 0.10 && std::abs(gain1 - c.target) <= 0.10;
    pass = pass && sym_ok && sandwich_ok && gain_ok;
    os << "b=" << c.rule << ": asymmetry " << fmt(worst_asym) << (sym_ok ? " ok" : " FAIL") << ", gain at ends "
       << fmt(100 * gain0) << "%/" << fmt(100 * gain1) << "% (want " << fmt(100 * c.target) << "+-10)"
       << (gain_ok ? " ok" : " FAIL") << ", sandwich" << (sandwich_ok ? " ok" : " FAIL") << "; ";
  }
  return {pass, os.str()};
}

// 8. Spectral bounds on random positive definite instances.
Outcome bound_properties() {
  Rng rng(1008);
  int order_fail = 0;
  double worst_modulus = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const Index n = draw_size(rng, 1, 15);
    const auto m = testing::random_pd_instance(rng, n);
    const auto r = compare_profits(m);
    const double eps = 1e-8;
    if (!(r.lower_bound >= -eps && r.lower_bound <= r.ratio + eps && r.ratio <= r.upper_bound + eps &&
          r.upper_bound <= 1.0 + eps))
      ++order_fail;
    const Matrix M = m.lambda_minus_G();
    const Eigen::EigenSolver<Matrix> es(M * M.transpose().inverse());
    for (Index i = 0; i < n; ++i) worst_modulus = std::max(worst_modulus, std::abs(std::abs(es.eigenvalues()(i)) - 1.0));
  }
  return {order_fail == 0 && worst_modulus <= 1e-8,
          "ordering failures " + std::to_string(order_fail) + " of 1000, max ||lambda|-1| = " + fmt(worst_modulus)};
}

// 9. Preferential attachment sweep.
Outcome pa_figure() {
  std::ostringstream os;
  bool pass = true;
  for (const char* rule : {"2", "1.5"}) {
    const auto rows = figure(Family::PreferentialAttachment, rule, 21, 100, 9);
    double max_ratio = 0.0;
    for (const auto& row : rows) max_ratio = std::max(max_ratio, row.ratio_mean);
    const double loss0 = 1.0 - rows.front().ratio_mean;
    const double loss1 = 1.0 - rows.back().ratio_mean;
    const bool below = max_ratio < 1.0;
    const bool order = loss0 > loss1;
    pass = pass && below && order;
    os << "b=" << rule << ": max mean ratio " << fmt(max_ratio) << (below ? " ok" : " FAIL") << ", loss alpha=0 "
       << fmt(loss0) << " vs alpha=1 " << fmt(loss1) << (order ? " ok" : " FAIL") << "; ";
  }
  return {pass, os.str()};
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "symmetric network: discriminatory prices equal (a+c)/2", 5.0, symmetric_prices},
      {2, "equilibrium solver matches support enumeration, unique", 60.0, equilibrium_oracle},
      {3, "discriminatory prices are locally optimal", 0.0, discriminatory_optimality},
      {4, "uniform price matches grid search, breakpoint structure", 0.0, uniform_vs_grid},
      {5, "two-price rounding guarantee and relaxation bound", 600.0, two_price_guarantee},
      {6, "star network profit ratio sweep", 30.0, star_figure},
      {7, "triangular network profit ratio sweep", 0.0, triangular_figure},
      {8, "spectral ratio bounds and unimodular spectrum", 60.0, bound_properties},
      {9, "preferential attachment profit loss ordering", 0.0, pa_figure},
  };
  return all;
}

}  // namespace
}  // namespace netprice

int main(int argc, char** argv) {
  using namespace netprice;
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit_s > 0.0 && secs > c.time_limit_s) {
      out.pass = false;
      out.detail += "; runtime over " + fmt(c.time_limit_s) + " s";
    }
    all_pass = all_pass && out.pass;
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " | " << out.detail
              << " | " << fmt(secs) << " s" << std::endl;
  }
  return all_pass ? 0 : 1;
}
