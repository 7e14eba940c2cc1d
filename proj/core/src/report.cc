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

#include "selaug/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cctype>
#include <iterator>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "selaug/error.h"
#include "selaug/parallel.h"

namespace selaug {

namespace {

constexpr RealizationClass kClassOrder[] = {
    RealizationClass::kVoiced, RealizationClass::kTenuis,
    RealizationClass::kAspirated, RealizationClass::kAmbiguousAspirated,
    RealizationClass::kNull};

template <typename Fn>
std::optional<double> OrNa(Fn fn) {
  try {
    return fn();
  } catch (const EmptyDenominator&) {
    return std::nullopt;
  }
}

std::vector<ClassifiedInstance> InGroup(
    std::span<const ClassifiedInstance> instances, const PoaGroup& group) {
  std::vector<ClassifiedInstance> out;
  for (const auto& ci : instances) {
    if (std::find(group.phonemes.begin(), group.phonemes.end(),
                  ci.instance.target) != group.phonemes.end()) {
      out.push_back(ci);
    }
  }
  return out;
}

std::string FormatPercent(const std::optional<double>& v) {
  if (!v) return "N/A";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", RoundTenth(*v));
  return buf;
}

std::string FormatNumber(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string Title(const std::string& group) {
  std::string t = group;
  if (!t.empty()) t[0] = static_cast<char>(std::toupper(t[0]));
  return t + " plosives";
}

nlohmann::json CellJson(const std::optional<double>& v) {
  if (!v) return nullptr;
  return RoundTenth(*v);
}

nlohmann::json CellsJson(const MetricCells& c) {
  return {{"voicing_acc", CellJson(c.voicing_acc)},
          {"asp_strict", CellJson(c.asp_strict)},
          {"asp_lenient", CellJson(c.asp_lenient)},
          {"ten_strict", CellJson(c.ten_strict)},
          {"ten_lenient", CellJson(c.ten_lenient)},
          {"null_pct", CellJson(c.null_pct)},
          {"n_instances", c.n_instances},
          {"n_null", c.n_null}};
}

double Quantile(const std::vector<double>& sorted, double p) {
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const auto lo = static_cast<size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted[lo];
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

MetricCells ComputeCells(std::span<const ClassifiedInstance> instances,
                         AmbiguityPolicy policy) {
  MetricCells c;
  c.n_instances = static_cast<int64_t>(instances.size());
  c.n_null = std::count_if(
      instances.begin(), instances.end(),
      [](const ClassifiedInstance& ci) { return ci.cls == RealizationClass::kNull; });
  c.voicing_acc = OrNa([&] { return VoicingAcc(instances); });
  c.asp_strict = OrNa([&] { return AspPct(instances, ReportMode::kStrict, policy); });
  c.asp_lenient = OrNa([&] { return AspPct(instances, ReportMode::kLenient, policy); });
  c.ten_strict = OrNa([&] { return TenPct(instances, ReportMode::kStrict, policy); });
  c.ten_lenient = OrNa([&] { return TenPct(instances, ReportMode::kLenient, policy); });
  if (!instances.empty()) c.null_pct = NullPct(instances);
  return c;
}

BoxplotStats ComputeBoxplot(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("boxplot of no values");
  std::sort(values.begin(), values.end());
  BoxplotStats s;
  s.q1 = Quantile(values, 0.25);
  s.median = Quantile(values, 0.5);
  s.q3 = Quantile(values, 0.75);
  const double iqr = s.q3 - s.q1;
  const double low = s.q1 - 1.5 * iqr;
  const double high = s.q3 + 1.5 * iqr;
  s.min = s.q1;
  s.max = s.q3;
  bool any = false;
  for (double v : values) {
    if (v < low || v > high) {
      s.outliers.push_back(v);
      continue;
    }
    if (!any) s.min = v;
    s.max = v;
    any = true;
  }
  return s;
}

EvaluationResult Evaluate(std::span<const EvalInstance> instances,
                          const Inventory& inventory, const OnsetGroups& groups,
                          const ReportOptions& options) {
  EvaluationResult result;

  std::vector<const PoaGroup*> shown;
  if (options.only_group) {
    const PoaGroup* g = groups.Find(*options.only_group);
    if (g == nullptr) {
      throw std::invalid_argument("unknown group '" + *options.only_group + "'");
    }
    shown.push_back(g);
  } else {
    for (const auto& g : groups.groups()) shown.push_back(&g);
  }

  std::vector<EvalInstance> kept;
  for (const auto& inst : instances) {
    if (!inst.analyzable) {
      ++result.excluded;
      continue;
    }
    if (options.only_group &&
        std::find(shown[0]->phonemes.begin(), shown[0]->phonemes.end(),
                  inst.target) == shown[0]->phonemes.end()) {
      continue;
    }
    kept.push_back(inst);
  }

  const auto classified = ParallelMap(kept, options.workers, [&](const EvalInstance& inst) {
    return ClassifyPrediction(inst, inventory, groups, options.hard_errors);
  });

  std::map<std::string, std::vector<ClassifiedInstance>> by_model;
  for (size_t i = 0; i < kept.size(); ++i) {
    if (!classified[i].diagnostic.empty()) {
      result.diagnostics.push_back(kept[i].utt_id + " (" + kept[i].model +
                                   "): " + classified[i].diagnostic);
    }
    by_model[kept[i].model].push_back({kept[i], classified[i].cls});
  }
  // Fixed order inside each model makes every aggregate input-order free.
  for (auto& [model, list] : by_model) {
    std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
      return std::tie(a.instance.utt_id, a.instance.target, a.instance.vot_ms,
                      a.instance.onset) < std::tie(b.instance.utt_id,
                                                   b.instance.target,
                                                   b.instance.vot_ms,
                                                   b.instance.onset);
    });
  }

  for (const auto& [model, list] : by_model) {
    MetricsReport report;
    report.model = model;
    report.overall = ComputeCells(list, options.policy);
    for (const PoaGroup* g : shown) {
      report.per_poa[g->name] = ComputeCells(InGroup(list, *g), options.policy);
    }
    result.reports.push_back(std::move(report));
  }

  // Paired voicing correctness between every two models.
  for (auto a = by_model.begin(); a != by_model.end(); ++a) {
    for (auto b = std::next(a); b != by_model.end(); ++b) {
      std::map<std::string, bool> first;
      for (const auto& ci : a->second) {
        if (IsVoicedPhoneme(ci.instance.target) && ci.cls != RealizationClass::kNull) {
          first[ci.instance.utt_id] =
              (ci.cls == RealizationClass::kVoiced) == (ci.instance.vot_ms < 0.0);
        }
      }
      std::vector<char> x;
      std::vector<char> y;
      for (const auto& ci : b->second) {
        if (!IsVoicedPhoneme(ci.instance.target) || ci.cls == RealizationClass::kNull) {
          continue;
        }
        const auto it = first.find(ci.instance.utt_id);
        if (it == first.end()) continue;
        x.push_back(it->second);
        y.push_back((ci.cls == RealizationClass::kVoiced) ==
                    (ci.instance.vot_ms < 0.0));
      }
      PairedTest t;
      t.first = a->first;
      t.second = b->first;
      t.pairs = static_cast<int64_t>(x.size());
      for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] && !y[i]) ++t.first_only;
        if (!x[i] && y[i]) ++t.second_only;
      }
      const std::unique_ptr<bool[]> xs(new bool[x.size()]);
      const std::unique_ptr<bool[]> ys(new bool[y.size()]);
      std::copy(x.begin(), x.end(), xs.get());
      std::copy(y.begin(), y.end(), ys.get());
      t.p_value = McNemarExact(std::span<const bool>(xs.get(), x.size()),
                               std::span<const bool>(ys.get(), y.size()));
      result.significance.push_back(t);
    }
  }

  // Boxplot data: reference distributions by phoneme, then per model class.
  auto add_rows = [&](const std::string& group_name,
                      const std::vector<Phoneme>& phonemes) {
    auto selected = [&](Phoneme p) {
      return std::find(phonemes.begin(), phonemes.end(), p) != phonemes.end();
    };
    std::map<std::string, const EvalInstance*> reference;
    for (const auto& [model, list] : by_model) {
      for (const auto& ci : list) {
        if (selected(ci.instance.target)) {
          reference.emplace(ci.instance.utt_id, &ci.instance);
        }
      }
    }
    for (Phoneme p : phonemes) {
      const std::string name = "/" + std::string(ToString(p)) + "/";
      std::vector<double> lead;
      std::vector<double> lag;
      for (const auto& [id, inst] : reference) {
        if (inst->target != p) continue;
        (IsVoicedPhoneme(p) && inst->vot_ms < 0.0 ? lead : lag)
            .push_back(inst->vot_ms);
      }
      if (IsVoicedPhoneme(p)) {
        if (!lead.empty()) {
          result.boxplots.push_back(
              {group_name + ":reference", name + " voiced", ComputeBoxplot(lead)});
        }
        if (!lag.empty()) {
          result.boxplots.push_back({group_name + ":reference",
                                     name + " voiceless", ComputeBoxplot(lag)});
        }
      } else if (!lag.empty()) {
        result.boxplots.push_back(
            {group_name + ":reference", name, ComputeBoxplot(lag)});
      }
    }
    for (const auto& [model, list] : by_model) {
      for (RealizationClass cls : kClassOrder) {
        std::vector<double> values;
        for (const auto& ci : list) {
          if (ci.cls == cls && selected(ci.instance.target)) {
            values.push_back(ci.instance.vot_ms);
          }
        }
        if (!values.empty()) {
          result.boxplots.push_back({group_name + ":" + model,
                                     std::string(ToString(cls)),
                                     ComputeBoxplot(std::move(values))});
        }
      }
    }
  };
  if (!options.only_group) {
    add_rows("all", {Phoneme::kB, Phoneme::kD, Phoneme::kG, Phoneme::kP,
                     Phoneme::kT, Phoneme::kK});
  }
  for (const PoaGroup* g : shown) add_rows(g->name, g->phonemes);

  return result;
}

namespace {

void AppendTable(std::ostringstream& out, const std::string& title,
                 const std::vector<std::pair<std::string, const MetricCells*>>& rows,
                 TableStyle style) {
  auto pair_cell = [&](const std::optional<double>& strict,
                       const std::optional<double>& lenient) {
    switch (style) {
      case TableStyle::kStrictOnly:
        return FormatPercent(strict);
      case TableStyle::kLenientOnly:
        return FormatPercent(lenient);
      case TableStyle::kBoth:
        break;
    }
    return FormatPercent(strict) + " (" + FormatPercent(lenient) + ")";
  };

  std::vector<std::vector<std::string>> table;
  table.push_back({"Model", "VoicingAcc", "Asp%", "Ten%", "NULL"});
  for (const auto& [model, cells] : rows) {
    table.push_back({model, FormatPercent(cells->voicing_acc),
                     pair_cell(cells->asp_strict, cells->asp_lenient),
                     pair_cell(cells->ten_strict, cells->ten_lenient),
                     FormatPercent(cells->null_pct)});
  }
  std::vector<size_t> widths(5, 0);
  for (const auto& row : table) {
    for (size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }

  out << title;
  if (style == TableStyle::kBoth) out << " (percent; lenient in parentheses)";
  else if (style == TableStyle::kLenientOnly) out << " (percent; lenient)";
  else out << " (percent; strict)";
  out << '\n';
  for (const auto& row : table) {
    std::string line;
    for (size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

}  // namespace

std::string FormatTextReport(const EvaluationResult& result,
                             const OnsetGroups& groups, TableStyle style) {
  std::ostringstream out;
  bool only_one_group = false;
  if (!result.reports.empty() && result.reports.front().per_poa.size() == 1 &&
      groups.groups().size() > 1) {
    only_one_group = true;
  }

  if (!only_one_group) {
    std::vector<std::pair<std::string, const MetricCells*>> rows;
    for (const auto& r : result.reports) rows.emplace_back(r.model, &r.overall);
    AppendTable(out, "All places of articulation", rows, style);
  }
  for (const auto& g : groups.groups()) {
    std::vector<std::pair<std::string, const MetricCells*>> rows;
    for (const auto& r : result.reports) {
      const auto it = r.per_poa.find(g.name);
      if (it != r.per_poa.end()) rows.emplace_back(r.model, &it->second);
    }
    if (rows.empty()) continue;
    if (out.tellp() > 0) out << '\n';
    AppendTable(out, Title(g.name), rows, style);
  }

  if (!result.significance.empty()) {
    out << "\nSignificance (exact McNemar, /b d g/ voicing correctness)\n";
    for (const auto& t : result.significance) {
      char p[32];
      std::snprintf(p, sizeof(p), "%.4g", t.p_value);
      out << t.first << " vs " << t.second << ": pairs=" << t.pairs << " "
          << t.first << "-only=" << t.first_only << " " << t.second
          << "-only=" << t.second_only << " p=" << p << '\n';
    }
  }
  return out.str();
}

nlohmann::json ReportToJson(const EvaluationResult& result) {
  nlohmann::json models = nlohmann::json::object();
  for (const auto& r : result.reports) {
    nlohmann::json per_poa = nlohmann::json::object();
    for (const auto& [name, cells] : r.per_poa) per_poa[name] = CellsJson(cells);
    models[r.model] = {{"overall", CellsJson(r.overall)}, {"per_poa", per_poa}};
  }
  nlohmann::json j = {{"models", models},
                      {"excluded", result.excluded},
                      {"diagnostics", result.diagnostics}};
  if (!result.significance.empty()) {
    nlohmann::json tests = nlohmann::json::array();
    for (const auto& t : result.significance) {
      tests.push_back({{"first", t.first},
                       {"second", t.second},
                       {"pairs", t.pairs},
                       {"first_only", t.first_only},
                       {"second_only", t.second_only},
                       {"p_value", t.p_value}});
    }
    j["significance"] = tests;
  }
  return j;
}

std::string BoxplotCsv(const EvaluationResult& result) {
  std::string out = "group,class,min,q1,median,q3,max,outliers\n";
  for (const auto& row : result.boxplots) {
    out += row.group + "," + row.cls + "," + FormatNumber(row.stats.min) + "," +
           FormatNumber(row.stats.q1) + "," + FormatNumber(row.stats.median) +
           "," + FormatNumber(row.stats.q3) + "," + FormatNumber(row.stats.max) +
           ",";
    for (size_t i = 0; i < row.stats.outliers.size(); ++i) {
      if (i) out += ';';
      out += FormatNumber(row.stats.outliers[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace selaug
