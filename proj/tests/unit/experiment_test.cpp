#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "infseed/error.hpp"
#include "infseed/experiment.hpp"
#include "infseed/parallel.hpp"

namespace infseed {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class ExperimentTest : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() /
            ("infseed_experiment_" + std::string(::testing::UnitTest::GetInstance()
                                                     ->current_test_info()
                                                     ->name()));
    fs::remove_all(root_);
    fs::create_directories(root_);
  }
  void TearDown() override { fs::remove_all(root_); }

  ExperimentConfig config(const std::string& out) const {
    ExperimentConfig c;
    c.dataset = testing::data_dir() / "sample_network_19.txt";
    c.methods = {Method::Degree, Method::DegreeDistance, Method::Fidd, Method::Sidd,
                 Method::PageRank, Method::Random, Method::Greedy};
    c.k_values = {1, 2, 4};
    c.selection.distance_threshold = 2;
    c.ic = {.p = 0.2, .replications = 400, .master_seed = 1};
    c.greedy_replications = 30;
    c.output_dir = root_ / out;
    c.master_seed = 42;
    return c;
  }

  fs::path root_;
};

TEST_F(ExperimentTest, ConfigValidation) {
  auto c = config("a");
  c.methods.clear();
  EXPECT_THROW(c.validate(), DomainError);
  c = config("a");
  c.k_values = {4, 2};
  EXPECT_THROW(c.validate(), DomainError);
  c = config("a");
  c.ic.p = 2;
  EXPECT_THROW(c.validate(), DomainError);
  c = config("a");
  c.dataset = root_ / "missing.txt";
  EXPECT_THROW(run_experiment(c), std::runtime_error);
}

TEST_F(ExperimentTest, ZeroProbabilitySpreadIsK) {
  auto c = config("zero");
  c.ic.p = 0.0;
  const auto g = testing::sample_network();
  const auto report = run_experiment(g, c, "sample");
  ASSERT_EQ(report.rows.size(), c.methods.size() * c.k_values.size());
  for (const auto& row : report.rows) {
    ASSERT_TRUE(row.ok()) << row.error;
    EXPECT_EQ(row.spread->mean, static_cast<double>(row.seeds_found));
    if (!row.exhausted) EXPECT_EQ(row.seeds_found, row.k);
  }
}

TEST_F(ExperimentTest, ReportIsByteIdenticalAcrossRunsAndThreads) {
  set_thread_count(1);
  run_experiment(config("one"));
  set_thread_count(4);
  run_experiment(config("two"));
  set_thread_count(0);
  const auto a = slurp(root_ / "one" / "report.csv");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, slurp(root_ / "two" / "report.csv"));
  EXPECT_EQ(slurp(root_ / "one" / "seeds" / "sidd_k4.txt"),
            slurp(root_ / "two" / "seeds" / "sidd_k4.txt"));
  EXPECT_EQ(a.rfind("# infseed report v1\n", 0), 0u);
}

TEST_F(ExperimentTest, WritesSeedsTimingAndLog) {
  const auto c = config("files");
  run_experiment(c);
  const auto g = testing::sample_network();
  std::ifstream seeds(c.output_dir / "seeds" / "degreedistance_k2.txt");
  ASSERT_TRUE(seeds);
  EXPECT_EQ(read_seed_file(seeds, g).size(), 2u);
  const auto timing = slurp(c.output_dir / "timing.csv");
  EXPECT_NE(timing.find("selection_ms,simulation_ms"), std::string::npos);
  const auto log = slurp(c.output_dir / "run.log");
  EXPECT_NE(log.find("duplicates_dropped 1"), std::string::npos);
  EXPECT_NE(log.find("theta 2"), std::string::npos);
}

TEST_F(ExperimentTest, FailingMethodBecomesAnErrorRow) {
  auto c = config("errors");
  c.methods = {Method::Degree, Method::Katz, Method::Sidd};
  c.katz.beta = 0.9;  // diverges on this graph
  const auto report = run_experiment(testing::sample_network(), c, "sample");
  for (const auto& row : report.rows) {
    if (row.method == Method::Katz) {
      EXPECT_FALSE(row.ok());
      EXPECT_FALSE(row.spread.has_value());
    } else {
      EXPECT_TRUE(row.ok()) << row.error;
      EXPECT_TRUE(row.spread.has_value());
    }
  }
  std::stringstream csv;
  report.write_csv(csv);
  EXPECT_NE(csv.str().find("katz,1,error: "), std::string::npos);
}

TEST_F(ExperimentTest, ComColumnsAgainstSelfAreFull) {
  const auto report = run_experiment(testing::sample_network(), config("com"), "sample");
  for (const auto& row : report.rows) {
    const auto self = static_cast<std::size_t>(
        std::find(report.methods.begin(), report.methods.end(), row.method) -
        report.methods.begin());
    ASSERT_TRUE(row.com[self].has_value());
    EXPECT_EQ(*row.com[self], 100.0);
  }
}

TEST_F(ExperimentTest, ExhaustedSelectorIsPartial) {
  auto c = config("partial");
  c.methods = {Method::DegreeDistance};
  c.selection.distance_threshold = 5;
  c.k_values = {3};
  const auto report = run_experiment(testing::sample_network(), c, "sample");
  ASSERT_TRUE(report.rows[0].ok());
  EXPECT_TRUE(report.rows[0].exhausted);
  std::stringstream csv;
  report.write_csv(csv);
  EXPECT_NE(csv.str().find(",partial,"), std::string::npos);
}

TEST_F(ExperimentTest, ScoresRejectSelectors) {
  const auto g = testing::sample_network();
  EXPECT_THROW(compute_scores(g, Method::Sidd, config("x")), DomainError);
  EXPECT_EQ(compute_scores(g, Method::Degree, config("x")).scores.size(), 19u);
}

TEST_F(ExperimentTest, ScoreCsvFollowsRanking) {
  const auto g = testing::sample_network();
  const auto scores = compute_scores(g, Method::Degree, config("x"));
  std::stringstream csv;
  write_score_csv(csv, g, scores);
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "original_id,score,rank");
  std::getline(csv, line);
  // v1 has the largest degree in the sample network.
  EXPECT_EQ(line, "1,6,1");
  std::size_t rows = 1;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 19u);
}

TEST_F(ExperimentTest, OverlapSummaryDefaultsToGrid) {
  auto c = config("overlap");
  c.dataset = testing::data_dir() / "sample_network_19.txt";
  c.k_values.clear();
  c.methods = {Method::Degree, Method::Degree};
  const auto g = testing::sample_network();
  // The default grid exceeds this graph, so every cell is empty.
  const auto empty = summarize_overlap(g, c, "sample");
  ASSERT_EQ(empty.com.size(), kOverlapGrid.size() * 4);
  for (const auto& row : empty.com) EXPECT_FALSE(row.com_percent.has_value());

  c.k_values = {2, 5, 10};
  c.methods = {Method::Degree, Method::Betweenness, Method::Sidd};
  const auto s = summarize_overlap(g, c, "sample");
  for (const auto& row : s.com) {
    ASSERT_TRUE(row.com_percent.has_value());
    if (row.a == row.b) EXPECT_EQ(*row.com_percent, 100.0);
  }
  for (const auto& row : s.coverage) ASSERT_TRUE(row.coverage.has_value());

  c.methods = {Method::Degree};
  EXPECT_THROW(summarize_overlap(g, c, "sample"), DomainError);
}

}  // namespace
}  // namespace infseed
