// Copyright (c) 2026 The selaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "selaug/inventory.h"
#include "selaug/metrics.h"
#include "selaug/random.h"
#include "selaug/report.h"
#include "selaug/synth.h"
#include "test_support.h"

namespace selaug {
namespace {

const Inventory& Inv() { return Inventory::Default(); }
const OnsetGroups& Groups() { return OnsetGroups::Default(); }

EvaluationResult EvaluateFixture(const std::string& name, ReportOptions options = {}) {
  const auto instances = testing::LoadEvalInstances(testing::FixturePath(name));
  return Evaluate(instances, Inv(), Groups(), options);
}

double Cell(const std::optional<double>& v) { return RoundTenth(v.value()); }

// Sort-based quartile with linear interpolation between order statistics.
double SortQuantile(std::vector<double> v, double p) {
  std::sort(v.begin(), v.end());
  const double h = (static_cast<double>(v.size()) - 1.0) * p;
  const size_t lo = static_cast<size_t>(h);
  const size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

TEST(Report, AllPlacesFixture) {
  const auto r = EvaluateFixture("onset_mix_tm.jsonl");
  ASSERT_EQ(r.reports.size(), 1u);
  const MetricCells& c = r.reports[0].overall;
  EXPECT_EQ(c.n_instances, 354);
  EXPECT_EQ(c.n_null, 34);
  EXPECT_DOUBLE_EQ(Cell(c.voicing_acc), 83.8);
  EXPECT_DOUBLE_EQ(Cell(c.asp_strict), 61.2);
  EXPECT_DOUBLE_EQ(Cell(c.asp_lenient), 63.6);
  EXPECT_DOUBLE_EQ(Cell(c.ten_strict), 50.0);
  EXPECT_DOUBLE_EQ(Cell(c.ten_lenient), 48.4);
  EXPECT_DOUBLE_EQ(Cell(c.null_pct), 9.6);
  EXPECT_TRUE(r.significance.empty());
}

TEST(Report, AllPlacesGoldenText) {
  const auto r = EvaluateFixture("onset_mix_tm.jsonl");
  EXPECT_EQ(FormatTextReport(r, Groups()),
            testing::ReadFile(testing::FixturePath("onset_mix_tm_report.txt")));
}

TEST(Report, VelarOnlyFixture) {
  ReportOptions options;
  options.only_group = "velar";
  const auto r = EvaluateFixture("velar_tm.jsonl", options);
  ASSERT_EQ(r.reports.size(), 1u);
  ASSERT_EQ(r.reports[0].per_poa.size(), 1u);
  const MetricCells& c = r.reports[0].per_poa.at("velar");
  EXPECT_DOUBLE_EQ(Cell(c.voicing_acc), 91.9);
  EXPECT_DOUBLE_EQ(Cell(c.asp_strict), 66.7);
  EXPECT_DOUBLE_EQ(Cell(c.ten_strict), 52.6);
  EXPECT_DOUBLE_EQ(Cell(c.null_pct), 5.0);
  const std::string text = FormatTextReport(r, Groups());
  EXPECT_EQ(text, testing::ReadFile(testing::FixturePath("velar_tm_report.txt")));
  EXPECT_EQ(text.find("All places"), std::string::npos);
}

TEST(Report, EmptyDenominatorIsNotApplicable) {
  const std::vector<EvalInstance> only_voiced = {
      {"a", Phoneme::kB, -20.0, "b a", "TM", true}};
  const auto r = Evaluate(only_voiced, Inv(), Groups());
  EXPECT_FALSE(r.reports[0].overall.asp_strict.has_value());
  EXPECT_FALSE(r.reports[0].per_poa.at("velar").voicing_acc.has_value());
  EXPECT_NE(FormatTextReport(r, Groups()).find("N/A"), std::string::npos);
  EXPECT_TRUE(ReportToJson(r)["models"]["TM"]["overall"]["asp_strict"].is_null());
}

TEST(Report, NotAnalyzableExcluded) {
  std::vector<EvalInstance> in = {{"a", Phoneme::kB, -20.0, "b a", "TM", true},
                                  {"b", Phoneme::kB, -20.0, "p a", "TM", false}};
  const auto r = Evaluate(in, Inv(), Groups());
  EXPECT_EQ(r.excluded, 1);
  EXPECT_DOUBLE_EQ(r.reports[0].overall.voicing_acc.value(), 100.0);
}

TEST(Report, TwoModelsGetSignificance) {
  EvalScenario s;
  s.seed = 4;
  const auto r = Evaluate(GenerateEvalInstances(s), Inv(), Groups());
  ASSERT_EQ(r.reports.size(), 2u);
  EXPECT_EQ(r.reports[0].model, "BM");
  ASSERT_EQ(r.significance.size(), 1u);
  EXPECT_EQ(r.significance[0].first, "BM");
  EXPECT_LT(r.significance[0].p_value, 0.05);
  EXPECT_NE(FormatTextReport(r, Groups()).find("Significance"), std::string::npos);
}

TEST(Report, ShuffleInvariant) {
  EvalScenario s;
  s.seed = 12;
  auto in = GenerateEvalInstances(s);
  ReportOptions options;
  const auto before = Evaluate(in, Inv(), Groups(), options);
  SeededRng rng(1);
  rng.Shuffle(&in);
  options.workers = 4;
  const auto after = Evaluate(in, Inv(), Groups(), options);
  EXPECT_EQ(FormatTextReport(before, Groups()), FormatTextReport(after, Groups()));
  EXPECT_EQ(ReportToJson(before), ReportToJson(after));
  EXPECT_EQ(BoxplotCsv(before), BoxplotCsv(after));
}

TEST(Boxplot, SingleValueIsDegenerate) {
  const auto b = ComputeBoxplot({12.5});
  EXPECT_EQ(b.min, 12.5);
  EXPECT_EQ(b.max, 12.5);
  EXPECT_EQ(b.median, 12.5);
  EXPECT_TRUE(b.outliers.empty());
}

TEST(Boxplot, QuartilesMatchSortOracle) {
  SeededRng rng(21);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<double> v;
    const size_t n = 1 + rng.UniformBelow(60);
    for (size_t i = 0; i < n; ++i) v.push_back(std::round(rng.UniformReal(-100, 100)));
    if (rng.Bernoulli(0.3)) v.push_back(900.0);
    const auto b = ComputeBoxplot(v);
    EXPECT_DOUBLE_EQ(b.q1, SortQuantile(v, 0.25));
    EXPECT_DOUBLE_EQ(b.median, SortQuantile(v, 0.5));
    EXPECT_DOUBLE_EQ(b.q3, SortQuantile(v, 0.75));
    const double iqr = b.q3 - b.q1;
    size_t inside = 0;
    for (double x : v) {
      const bool out = x < b.q1 - 1.5 * iqr || x > b.q3 + 1.5 * iqr;
      inside += !out;
      if (!out) {
        EXPECT_GE(x, b.min);
        EXPECT_LE(x, b.max);
      }
    }
    EXPECT_EQ(inside + b.outliers.size(), v.size());
  }
}

TEST(Boxplot, CsvLayout) {
  const auto r = EvaluateFixture("velar_tm.jsonl");
  const std::string csv = BoxplotCsv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "group,class,min,q1,median,q3,max,outliers");
  EXPECT_NE(csv.find("\nvelar:TM,Aspirated,"), std::string::npos);
  EXPECT_NE(csv.find("\nvelar:reference,/k/,"), std::string::npos);
}

}  // namespace
}  // namespace selaug
