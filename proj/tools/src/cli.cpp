#include "cli.hpp"

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "netprice/discriminatory_pricing.hpp"
#include "netprice/equilibrium.hpp"
#include "netprice/errors.hpp"
#include "netprice/experiments.hpp"
#include "netprice/generators.hpp"
#include "netprice/io.hpp"
#include "netprice/two_price.hpp"
#include "netprice/uniform_pricing.hpp"
#include "netprice/value_of_info.hpp"

namespace netprice::cli {
namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

struct Params {
  std::string instance;
  std::string prices;
  std::string out;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  std::int64_t trials = 1000;
  Index alpha_points = 101;
  Index instances = 100;
  double p_low = 0.0;
  double p_high = 0.0;
  Index n = 100;
  std::string b_rule = "n/10";
  double alpha = 0.5;
  bool force_sdp = false;
  std::string family;
};

json to_json(const Vector& v) {
  json arr = json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

json to_json(const std::vector<Index>& v) {
  json arr = json::array();
  for (Index i : v) arr.push_back(i);
  return arr;
}

json tolerances(const Params& prm) {
  return {{"equilibrium_tol", prm.tol},
          {"support_threshold", kSupportThreshold},
          {"gain_tie_tolerance", kGainTieTolerance},
          {"sdp_tol", SdpOptions{}.tol},
          {"sdp_max_iter", SdpOptions{}.max_iter},
          {"rounding_ratio", kRoundingRatio},
          {"brute_force_limit", kBruteForceLimit}};
}

json manifest(const std::string& command, json parameters, const Params& prm) {
  return {{"tool", "netprice"},
          {"version", kVersion},
          {"command", command},
          {"parameters", std::move(parameters)},
          {"tolerances", tolerances(prm)}};
}

void write_manifest(const Params& prm, const json& man) {
  if (!prm.out.empty()) write_text_file(prm.out + ".manifest.json", man.dump(2) + "\n");
}

// Result document with the manifest embedded; also written next to --out.
void emit(const Params& prm, json result, const json& man, std::ostream& out) {
  result["manifest"] = man;
  const std::string text = result.dump(2) + "\n";
  if (prm.out.empty()) {
    out << text;
  } else {
    write_text_file(prm.out, text);
    write_manifest(prm, man);
  }
}

MarketInstance require_instance(const Params& prm) {
  if (prm.instance.empty()) throw InvalidArgument("--instance is required");
  return load_instance(prm.instance);
}

int cmd_validate(const Params& prm, std::ostream& out) {
  const MarketInstance inst = require_instance(prm);
  const ValidationReport report = validate(inst);
  json violations = json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"indices", to_json(v.indices)}, {"message", v.message}});
  emit(prm, {{"ok", report.ok()}, {"n", inst.n()}, {"violations", violations}},
       manifest("validate", {{"instance", prm.instance}}, prm), out);
  return report.ok() ? kOk : kInvalidInstance;
}

int cmd_equilibrium(const Params& prm, std::ostream& out) {
  const MarketInstance inst = require_instance(prm);
  if (prm.prices.empty()) throw InvalidArgument("--prices is required");
  const PriceVector p = load_prices(prm.prices);
  EquilibriumOptions opts;
  opts.tol = prm.tol;
  const ConsumptionEquilibrium eq = solve_equilibrium(inst, p, opts);
  emit(prm,
       {{"x", to_json(eq.x.values())},
        {"support", to_json(eq.support)},
        {"residual", eq.residual},
        {"iterations", eq.iterations},
        {"profit", profit(inst, p, eq.x)}},
       manifest("equilibrium", {{"instance", prm.instance}, {"prices", prm.prices}, {"tol", prm.tol}}, prm), out);
  return kOk;
}

int cmd_discriminate(const Params& prm, std::ostream& out) {
  const MarketInstance inst = require_instance(prm);
  const DiscriminatoryPricingResult r = optimal_prices(inst);
  emit(prm,
       {{"mode", "discriminate"},
        {"p", to_json(r.p.values())},
        {"x", to_json(r.x.values())},
        {"profit", r.profit},
        {"nominal", to_json(r.nominal)},
        {"markup", to_json(r.markup)},
        {"discount", to_json(r.discount)}},
       manifest("price discriminate", {{"instance", prm.instance}}, prm), out);
  return kOk;
}

int cmd_uniform(const Params& prm, std::ostream& out) {
  const MarketInstance inst = require_instance(prm);
  const UniformPriceResult r = optimal_uniform_price(inst);
  EquilibriumOptions opts;
  opts.tol = prm.tol;
  const PriceVector p = PriceVector::uniform(inst.n(), r.p_opt);
  const ConsumptionEquilibrium eq = solve_equilibrium(inst, p, opts);
  json sets = json::array();
  for (const auto& s : r.dropout_sets) sets.push_back(to_json(s));
  json bps = json::array();
  for (double b : r.breakpoints) bps.push_back(b);
  emit(prm,
       {{"mode", "uniform"},
        {"p_opt", r.p_opt},
        {"p", to_json(p.values())},
        {"x", to_json(eq.x.values())},
        {"profit", r.profit},
        {"breakpoints", bps},
        {"dropout_sets", sets},
        {"active_profile", to_json(r.active_profile)},
        {"segment", {r.segment_lower, r.segment_upper}}},
       manifest("price uniform", {{"instance", prm.instance}, {"tol", prm.tol}}, prm), out);
  return kOk;
}

int cmd_two(const Params& prm, std::ostream& out) {
  const MarketInstance inst = require_instance(prm);
  const TwoPriceInstance tp(inst, prm.p_low, prm.p_high);
  TwoPriceOptions opts;
  opts.trials = prm.trials;
  opts.seed = prm.seed;
  opts.force_sdp = prm.force_sdp;
  const TwoPriceResult r = approximate(tp, opts);
  const ConsumptionEquilibrium eq = solve_equilibrium(inst, r.prices);
  json result = {{"mode", "two"},
                 {"method", r.method},
                 {"y", to_json(r.y)},
                 {"p", to_json(r.prices.values())},
                 {"x", to_json(eq.x.values())},
                 {"profit", r.profit},
                 {"m", r.m_offset}};
  result["sdp_upper_bound"] = r.sdp_upper_bound ? json(*r.sdp_upper_bound) : json(nullptr);
  result["sdp_objective"] = r.sdp_objective ? json(*r.sdp_objective) : json(nullptr);
  result["guarantee_holds"] = r.guarantee_holds ? json(*r.guarantee_holds) : json(nullptr);
  if (r.method == "sdp_rounding")
    result["rounding"] = {{"trials", r.trials.count},
                          {"mean", r.trials.mean},
                          {"best", r.trials.best},
                          {"best_trial", r.trials.best_trial},
                          {"std_error", r.trials.std_error}};
  emit(prm, std::move(result),
       manifest("price two",
                {{"instance", prm.instance},
                 {"p_low", prm.p_low},
                 {"p_high", prm.p_high},
                 {"trials", prm.trials},
                 {"seed", prm.seed},
                 {"force_sdp", prm.force_sdp}},
                prm),
       out);
  return kOk;
}

int cmd_value_of_info(const Params& prm, std::ostream& out) {
  const MarketInstance inst = require_instance(prm);
  const ProfitComparison r = compare_profits(inst);
  emit(prm,
       {{"pi0", r.pi0}, {"piN", r.piN}, {"ratio", r.ratio}, {"lower_bound", r.lower_bound},
        {"upper_bound", r.upper_bound}},
       manifest("value-of-info", {{"instance", prm.instance}}, prm), out);
  return kOk;
}

int cmd_generate(const Params& prm, std::ostream& out) {
  FigureConfig cfg;
  cfg.family = parse_family(prm.family);
  cfg.n = prm.n;
  cfg.seed = prm.seed;
  const CurvatureRule rule = parse_curvature_rule(prm.b_rule);
  const NetworkPair pair = figure_network(cfg, 0);
  const MarketInstance inst = simulation_instance(blend(pair, prm.alpha), rule.value(prm.n));
  const std::string text = instance_to_json(inst);
  if (prm.out.empty()) {
    out << text;
  } else {
    write_text_file(prm.out, text);
    write_manifest(prm, manifest("generate " + prm.family,
                                 {{"n", prm.n}, {"alpha", prm.alpha}, {"seed", prm.seed}, {"b_rule", prm.b_rule}},
                                 prm));
  }
  return kOk;
}

int cmd_figure(const Params& prm, std::ostream& out) {
  FigureConfig cfg;
  cfg.family = parse_family(prm.family);
  cfg.n = prm.n;
  cfg.b_rule = parse_curvature_rule(prm.b_rule);
  cfg.alpha_points = prm.alpha_points;
  cfg.instances = prm.instances;
  cfg.seed = prm.seed;
  const auto rows = run_figure(cfg);
  std::ostringstream csv;
  write_figure_csv(csv, rows);
  if (prm.out.empty()) {
    out << csv.str();
  } else {
    write_text_file(prm.out, csv.str());
    write_manifest(prm, manifest("figure " + prm.family,
                                 {{"n", prm.n},
                                  {"b_rule", prm.b_rule},
                                  {"alpha_points", prm.alpha_points},
                                  {"instances", cfg.family == Family::Star ? Index{1} : prm.instances},
                                  {"seed", prm.seed}},
                                 prm));
  }
  return kOk;
}

void add_out(CLI::App* app, Params& prm) { app->add_option("--out", prm.out, "Output file (default: stdout)"); }

void add_instance(CLI::App* app, Params& prm) {
  app->add_option("--instance", prm.instance, "Instance JSON file")->required();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Params prm;
  CLI::App app{"Pricing in linear-quadratic network games"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto* validate_cmd = app.add_subcommand("validate", "Check the model assumptions of an instance");
  add_instance(validate_cmd, prm);
  add_out(validate_cmd, prm);

  auto* eq_cmd = app.add_subcommand("equilibrium", "Consumption equilibrium at given prices");
  add_instance(eq_cmd, prm);
  eq_cmd->add_option("--prices", prm.prices, "Price vector JSON file")->required();
  eq_cmd->add_option("--tol", prm.tol, "Fixed-point tolerance")->check(CLI::PositiveNumber);
  add_out(eq_cmd, prm);

  auto* price_cmd = app.add_subcommand("price", "Optimal pricing");
  price_cmd->require_subcommand(1);
  auto* disc_cmd = price_cmd->add_subcommand("discriminate", "Individualized prices");
  add_instance(disc_cmd, prm);
  add_out(disc_cmd, prm);
  auto* uni_cmd = price_cmd->add_subcommand("uniform", "Single price for all agents");
  add_instance(uni_cmd, prm);
  uni_cmd->add_option("--tol", prm.tol, "Equilibrium tolerance")->check(CLI::PositiveNumber);
  add_out(uni_cmd, prm);
  auto* two_cmd = price_cmd->add_subcommand("two", "Full or discounted price per agent");
  add_instance(two_cmd, prm);
  two_cmd->add_option("--p-low", prm.p_low, "Discounted price")->required();
  two_cmd->add_option("--p-high", prm.p_high, "Full price")->required();
  two_cmd->add_option("--trials", prm.trials, "Hyperplane rounding trials")->check(CLI::PositiveNumber);
  two_cmd->add_option("--seed", prm.seed, "Rounding seed");
  two_cmd->add_flag("--force-sdp", prm.force_sdp, "Use the relaxation even when brute force is feasible");
  add_out(two_cmd, prm);

  auto* voi_cmd = app.add_subcommand("value-of-info", "Profit with and without network information");
  add_instance(voi_cmd, prm);
  add_out(voi_cmd, prm);

  auto* gen_cmd = app.add_subcommand("generate", "Write a simulation instance");
  gen_cmd->add_option("family", prm.family, "star|triangular|pa")
      ->required()
      ->check(CLI::IsMember({"star", "triangular", "pa"}));
  gen_cmd->add_option("--n", prm.n, "Number of agents");
  gen_cmd->add_option("--alpha", prm.alpha, "Blend weight on the first matrix")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", prm.seed, "Generator seed");
  gen_cmd->add_option("--b-rule", prm.b_rule, "Curvature: n/<k> or a number");
  add_out(gen_cmd, prm);

  auto* fig_cmd = app.add_subcommand("figure", "Profit ratio sweep over the blend weight, as CSV");
  fig_cmd->add_option("family", prm.family, "star|triangular|pa")
      ->required()
      ->check(CLI::IsMember({"star", "triangular", "pa"}));
  fig_cmd->add_option("--n", prm.n, "Number of agents");
  fig_cmd->add_option("--b-rule", prm.b_rule, "Curvature: n/<k> or a number");
  fig_cmd->add_option("--alpha-points", prm.alpha_points, "Grid points in [0,1]")->check(CLI::PositiveNumber);
  fig_cmd->add_option("--instances", prm.instances, "Random networks averaged per point")
      ->check(CLI::PositiveNumber);
  fig_cmd->add_option("--seed", prm.seed, "Base seed");
  add_out(fig_cmd, prm);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(prm, out);
    if (*eq_cmd) return cmd_equilibrium(prm, out);
    if (*disc_cmd) return cmd_discriminate(prm, out);
    if (*uni_cmd) return cmd_uniform(prm, out);
    if (*two_cmd) return cmd_two(prm, out);
    if (*voi_cmd) return cmd_value_of_info(prm, out);
    if (*gen_cmd) return cmd_generate(prm, out);
    if (*fig_cmd) return cmd_figure(prm, out);
  } catch (const InvalidInstance& e) {
    err << "invalid instance: " << e.what() << '\n';
    return kInvalidInstance;
  } catch (const NotPositiveDefinite& e) {
    err << "invalid instance: " << e.what() << '\n';
    return kInvalidInstance;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const FileError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "solver failure: " << e.what() << '\n';
    return kSolverFailure;
  }
  return kUsage;
}

}  // namespace netprice::cli
