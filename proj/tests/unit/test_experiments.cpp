#include <gtest/gtest.h>

#include <sstream>

#include "netprice/errors.hpp"
#include "netprice/experiments.hpp"

namespace netprice {
namespace {

TEST(CurvatureRule, Parsing) {
  EXPECT_DOUBLE_EQ(parse_curvature_rule("n/10").value(100), 10.0);
  EXPECT_DOUBLE_EQ(parse_curvature_rule("n/3").value(99), 33.0);
  EXPECT_DOUBLE_EQ(parse_curvature_rule("1.5").value(100), 1.5);
  EXPECT_THROW(parse_curvature_rule("n/0"), InvalidArgument);
  EXPECT_THROW(parse_curvature_rule("n/x"), InvalidArgument);
  EXPECT_THROW(parse_curvature_rule("-2"), InvalidArgument);
  EXPECT_THROW(parse_curvature_rule(""), InvalidArgument);
}

TEST(Family, Names) {
  for (auto f : {Family::Star, Family::Triangular, Family::PreferentialAttachment})
    EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_THROW(parse_family("ring"), InvalidArgument);
}

TEST(AlphaGrid, EndpointsAndSpacing) {
  const auto g = alpha_grid(101);
  ASSERT_EQ(g.size(), 101U);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 1.0);
  EXPECT_DOUBLE_EQ(g[50], 0.5);
  EXPECT_THROW(alpha_grid(0), InvalidArgument);
}

TEST(RunFigure, StarHasOneRowPerAlpha) {
  FigureConfig cfg;
  cfg.family = Family::Star;
  cfg.alpha_points = 101;
  const auto rows = run_figure(cfg);
  ASSERT_EQ(rows.size(), 101U);
  std::ostringstream csv;
  write_figure_csv(csv, rows);
  std::istringstream in(csv.str());
  std::string line;
  int count = 0;
  std::getline(in, line);
  EXPECT_EQ(line, "alpha,ratio_mean,lower_mean,upper_mean");
  while (std::getline(in, line)) ++count;
  EXPECT_EQ(count, 101);
  EXPECT_NEAR(rows[50].ratio_mean, 1.0, 1e-12);
}

TEST(RunFigure, PreferentialAttachmentIsReproducible) {
  FigureConfig cfg;
  cfg.family = Family::PreferentialAttachment;
  cfg.b_rule = parse_curvature_rule("2");
  cfg.instances = 100;
  cfg.alpha_points = 5;
  cfg.seed = 12;
  std::ostringstream a, b;
  write_figure_csv(a, run_figure(cfg));
  write_figure_csv(b, run_figure(cfg));
  EXPECT_EQ(a.str(), b.str());
  cfg.seed = 13;
  std::ostringstream c;
  write_figure_csv(c, run_figure(cfg));
  EXPECT_NE(a.str(), c.str());
}

TEST(RunFigure, TriangularSandwichRowWise) {
  FigureConfig cfg;
  cfg.family = Family::Triangular;
  cfg.b_rule = parse_curvature_rule("n/2");
  cfg.instances = 100;
  cfg.alpha_points = 11;
  for (const auto& row : run_figure(cfg)) {
    EXPECT_TRUE(row.sandwich);
    EXPECT_LE(row.lower_mean, row.ratio_mean);
    EXPECT_LE(row.ratio_mean, row.upper_mean);
  }
}

}  // namespace
}  // namespace netprice
