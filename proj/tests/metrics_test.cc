#include <gtest/gtest.h>

#include <random>

#include "lex2vec/error.hpp"
#include "lex2vec/metrics.hpp"
#include "support.hpp"

using namespace lex2vec;
namespace lt = lex2vec::testing;

namespace {

DimensionLabeling make(std::vector<LabelCounts> dims) {
  DimensionLabeling l;
  l.dim_count = dims.size();
  l.per_dimension = std::move(dims);
  return l;
}

// Counts 2 and 1 on two dimensions, as produced by the good/bad/table case.
DimensionLabeling two_dim_example() {
  return make({{{"negemo", 1}, {"posemo", 1}}, {{"posemo", 1}}});
}

}  // namespace

TEST(UnnamedRatio, Examples) {
  EXPECT_EQ(0.0, unnamed_ratio(two_dim_example()));
  EXPECT_EQ(1.0, unnamed_ratio(make({{}, {}, {}, {}})));
  EXPECT_DOUBLE_EQ(1.0 / 3.0, unnamed_ratio(make({{{"a", 1}}, {}, {{"b", 2}}})));
}

TEST(AvgLabels, Examples) {
  EXPECT_EQ(1.5, avg_labels_per_dimension(two_dim_example(), AvgMode::All));
  EXPECT_EQ(1.5, avg_labels_per_dimension(two_dim_example(), AvgMode::NamedOnly));
  EXPECT_EQ(0.0, avg_labels_per_dimension(make({{}, {}}), AvgMode::All));
  auto half = make({{{"a", 3}}, {}});
  EXPECT_EQ(1.5, avg_labels_per_dimension(half, AvgMode::All));
  EXPECT_EQ(3.0, avg_labels_per_dimension(half, AvgMode::NamedOnly));
}

TEST(AvgLabels, NamedOnlyNeedsANamedDimension) {
  try {
    avg_labels_per_dimension(make({{}, {}}), AvgMode::NamedOnly);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(ErrorKind::NoNamedDimensions, e.kind());
  }
}

TEST(AvgLabels, DistinctVariant) {
  auto l = make({{{"a", 3}, {"b", 1}}, {}});
  EXPECT_EQ(1.0, avg_distinct_labels_per_dimension(l, AvgMode::All));
  EXPECT_EQ(2.0, avg_distinct_labels_per_dimension(l, AvgMode::NamedOnly));
}

TEST(Sweep, PaperGridGivesEightRowsInTableOrder) {
  std::mt19937_64 rng(1);
  auto f = lt::random_fixture(rng, 32, 8, 20);
  auto table = lt::to_table(f);
  // Deliberately pass nrc first; rows are ordered by resource name.
  std::vector<Lexicon> lexicons{lt::build_lexicon(f.entries, "nrc"),
                                lt::build_lexicon(f.entries, "liwc")};
  std::vector<Theta> thetas{Theta(0.75), Theta(0.81), Theta(0.77), Theta(0.79)};
  auto report = sweep(table, lexicons, thetas);
  ASSERT_EQ(8u, report.rows.size());
  const double order[] = {0.81, 0.79, 0.77, 0.75};
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(i < 4 ? "liwc" : "nrc", report.rows[i].resource);
    EXPECT_EQ(order[i % 4], report.rows[i].theta);
  }
  EXPECT_EQ(std::nullopt, find_trend_violation(report));
}

TEST(Sweep, SingleCellMatchesDirectMetrics) {
  std::mt19937_64 rng(2);
  auto f = lt::random_fixture(rng, 32, 8, 20);
  auto table = lt::to_table(f);
  auto lex = lt::build_lexicon(f.entries);
  std::vector<Lexicon> lexicons{lex};
  std::vector<Theta> thetas{Theta(0.7)};
  auto report = sweep(table, lexicons, thetas);
  ASSERT_EQ(1u, report.rows.size());
  auto labeling = label_dimensions(table, lex, Theta(0.7));
  EXPECT_EQ(unnamed_ratio(labeling), report.rows[0].unnamed_ratio);
  EXPECT_EQ(avg_labels_per_dimension(labeling), report.rows[0].avg_labels_all);
}

TEST(Sweep, EmptyInputsRejected) {
  std::mt19937_64 rng(2);
  auto f = lt::random_fixture(rng, 4, 2, 2);
  std::vector<Lexicon> lexicons{lt::build_lexicon(f.entries)};
  std::vector<Theta> none;
  EXPECT_THROW(sweep(lt::to_table(f), lexicons, none), Error);
  std::vector<Theta> one{Theta(0.8)};
  EXPECT_THROW(sweep(lt::to_table(f), std::span<const Lexicon>{}, one), Error);
}

TEST(Sweep, TwoThetasFollowTrendOnOracle) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = lt::random_fixture(rng, 32, 8, 25);
    std::vector<Lexicon> lexicons{lt::build_lexicon(f.entries)};
    std::vector<Theta> thetas{Theta(0.6), Theta(0.85)};
    auto report = sweep(lt::to_table(f), lexicons, thetas);
    // Brute-force side: the same two cells from the oracle.
    auto unnamed = [&](double th) {
      auto counts = lt::oracle_label(f, th);
      return std::count_if(counts.begin(), counts.end(), [](const auto& c) { return c.empty(); });
    };
    EXPECT_GE(unnamed(0.85), unnamed(0.6));
    EXPECT_EQ(0.85, report.rows[0].theta);
    EXPECT_GE(report.rows[0].unnamed_ratio, report.rows[1].unnamed_ratio);
    EXPECT_LE(report.rows[0].avg_labels_all, report.rows[1].avg_labels_all);
    EXPECT_DOUBLE_EQ(static_cast<double>(unnamed(0.85)) / f.dims, report.rows[0].unnamed_ratio);
  }
}

TEST(TrendCheck, DetectsViolation) {
  SweepReport r;
  r.rows = {{0.81, "x", 0.2, 5.0, std::nullopt}, {0.75, "x", 0.3, 6.0, std::nullopt}};
  EXPECT_EQ(1u, find_trend_violation(r));
  r.rows[1].unnamed_ratio = 0.1;
  EXPECT_EQ(std::nullopt, find_trend_violation(r));
  r.rows[1].avg_labels_all = 4.0;
  EXPECT_EQ(1u, find_trend_violation(r));
}

TEST(MetricsProperty, ConsistencyAndFilters) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = lt::random_fixture(rng, 32, 8, 25);
    auto labeling = label_dimensions(lt::to_table(f), lt::build_lexicon(f.entries), Theta(0.6 + (trial % 4) * 0.1));
    const double ratio = unnamed_ratio(labeling);
    const double all = avg_labels_per_dimension(labeling, AvgMode::All);
    EXPECT_EQ(ratio == 1.0, all == 0.0);
    if (ratio < 1.0) {
      const double named = avg_labels_per_dimension(labeling, AvgMode::NamedOnly);
      EXPECT_GE(named, all);
      EXPECT_EQ(ratio == 0.0, named == all);
    }
    for (std::size_t k : {1u, 2u, 3u}) {
      auto capped = cap_labels(labeling, k);
      EXPECT_GE(unnamed_ratio(capped), ratio);
      EXPECT_LE(avg_labels_per_dimension(capped, AvgMode::All), all);
      if (unnamed_ratio(capped) < 1.0) {
        EXPECT_LE(avg_labels_per_dimension(capped, AvgMode::NamedOnly),
                  avg_labels_per_dimension(labeling, AvgMode::NamedOnly));
      }
    }
  }
}
