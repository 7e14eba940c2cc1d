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

#ifndef SELAUG_REPORT_H_
#define SELAUG_REPORT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "selaug/inventory.h"
#include "selaug/metrics.h"

namespace selaug {

// Metric cells of one table row; nullopt renders as N/A.
struct MetricCells {
  std::optional<double> voicing_acc;
  std::optional<double> asp_strict;
  std::optional<double> asp_lenient;
  std::optional<double> ten_strict;
  std::optional<double> ten_lenient;
  std::optional<double> null_pct;
  int64_t n_instances = 0;
  int64_t n_null = 0;
};

MetricCells ComputeCells(std::span<const ClassifiedInstance> instances,
                         AmbiguityPolicy policy = AmbiguityPolicy::kAsTenuis);

struct MetricsReport {
  std::string model;
  MetricCells overall;
  std::map<std::string, MetricCells> per_poa;  // keyed by group name
};

struct PairedTest {
  std::string first;
  std::string second;
  int64_t pairs = 0;
  int64_t first_only = 0;   // first correct, second wrong
  int64_t second_only = 0;  // second correct, first wrong
  double p_value = 1.0;
};

struct BoxplotStats {
  double min;
  double q1;
  double median;
  double q3;
  double max;
  std::vector<double> outliers;
};

// Quartiles by linear interpolation between order statistics; whiskers end
// at the most extreme values inside 1.5 * IQR of the box, anything beyond is
// an outlier. values must be non-empty.
BoxplotStats ComputeBoxplot(std::vector<double> values);

struct BoxplotRow {
  std::string group;
  std::string cls;
  BoxplotStats stats;
};

struct ReportOptions {
  AmbiguityPolicy policy = AmbiguityPolicy::kAsTenuis;
  // Restrict every table to one place-of-articulation group.
  std::optional<std::string> only_group;
  bool hard_errors = false;
  int workers = 1;
};

struct EvaluationResult {
  std::vector<MetricsReport> reports;  // sorted by model tag
  std::vector<PairedTest> significance;
  std::vector<BoxplotRow> boxplots;
  std::vector<std::string> diagnostics;
  int64_t excluded = 0;  // instances not flagged analyzable
};

// Classifies all instances and aggregates per model and per group. With two
// or more models, every pair gets an exact McNemar test on /b d g/ voicing
// correctness over utterances that are non-Null for both.
EvaluationResult Evaluate(std::span<const EvalInstance> instances,
                          const Inventory& inventory, const OnsetGroups& groups,
                          const ReportOptions& options = {});

enum class TableStyle { kBoth, kStrictOnly, kLenientOnly };

std::string FormatTextReport(const EvaluationResult& result,
                             const OnsetGroups& groups,
                             TableStyle style = TableStyle::kBoth);
nlohmann::json ReportToJson(const EvaluationResult& result);
std::string BoxplotCsv(const EvaluationResult& result);

}  // namespace selaug

#endif  // SELAUG_REPORT_H_
