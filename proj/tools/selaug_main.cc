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

// Command-line front end: decode, augment, prepare, synth, evaluate.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "selaug/align.h"
#include "selaug/corpus.h"
#include "selaug/ctc.h"
#include "selaug/error.h"
#include "selaug/inventory.h"
#include "selaug/jsonl.h"
#include "selaug/metrics.h"
#include "selaug/parallel.h"
#include "selaug/report.h"
#include "selaug/synth.h"

namespace {

using selaug::Inventory;
using selaug::MappingTable;
using selaug::OnsetGroups;

struct GlobalOptions {
  std::string inventory;
  std::string mapping;
  std::string continuants;
  uint64_t seed = 0;
  int workers = 1;
};

// Input stream for a path, "-" meaning standard input.
class Input {
 public:
  explicit Input(const std::string& path) : name_(path) {
    if (path == "-") {
      stream_ = &std::cin;
      name_ = "<stdin>";
      return;
    }
    file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*file_) throw selaug::Error("cannot open '" + path + "' for reading");
    stream_ = file_.get();
  }
  std::istream& stream() { return *stream_; }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  std::unique_ptr<std::ifstream> file_;
  std::istream* stream_ = nullptr;
};

// Output stream for a path, empty or "-" meaning standard output.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") {
      stream_ = &std::cout;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw selaug::Error("cannot open '" + path + "' for writing");
    stream_ = file_.get();
  }
  ~Output() { stream_->flush(); }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

void RequireReadable(const std::string& path) {
  if (path == "-") return;
  if (!std::filesystem::is_regular_file(path)) {
    throw selaug::Error("input file '" + path + "' does not exist");
  }
}

void WriteText(const std::string& path, const std::string& text) {
  Output out(path);
  out.stream() << text;
}

void WriteJsonFile(const std::string& path, const nlohmann::json& j) {
  WriteText(path, j.dump(2) + "\n");
}

Inventory LoadInventory(const GlobalOptions& g) {
  return g.inventory.empty() ? Inventory::Default() : Inventory::Load(g.inventory);
}

MappingTable LoadMapping(const GlobalOptions& g, const Inventory& inv) {
  return g.mapping.empty() ? MappingTable::Default(inv)
                           : MappingTable::Load(g.mapping, inv);
}

OnsetGroups LoadGroups(const GlobalOptions& g) {
  return g.continuants.empty() ? OnsetGroups::Default()
                               : OnsetGroups::Load(g.continuants);
}

// decode ------------------------------------------------------------------

struct DecodeOptions {
  std::string input;
  std::string output;
  std::string blank;
  double frame_ms = 0.0;
  std::string model = "RM";
};

void RunDecode(const GlobalOptions& g, const DecodeOptions& o) {
  const Inventory inv = LoadInventory(g);
  const selaug::ModelTag tag = selaug::ParseModelTag(o.model);
  RequireReadable(o.input);
  Input in(o.input);
  Output out(o.output);
  selaug::JsonLinesReader reader(in.stream(), in.name());

  struct Item {
    selaug::FramePath path;
    size_t line;
  };
  std::vector<Item> batch;
  auto flush = [&] {
    const auto tracks = selaug::ParallelMap(batch, g.workers, [&](const Item& item) {
      try {
        return selaug::DecodeTrack(item.path, inv, tag);
      } catch (const selaug::Error& e) {
        throw selaug::FormatError(in.name(), item.line, e.what());
      }
    });
    for (const auto& t : tracks) {
      selaug::WriteJsonLine(out.stream(), selaug::PhoneTrackToJson(t));
    }
    batch.clear();
  };
  nlohmann::json j;
  while (reader.Next(&j)) {
    try {
      batch.push_back({selaug::FramePathFromJson(j, o.blank, o.frame_ms),
                       reader.line_number()});
    } catch (const selaug::Error& e) {
      reader.Fail(e.what());
    }
    if (batch.size() >= selaug::kStreamBatchSize) flush();
  }
  flush();
}

// augment / prefilter -----------------------------------------------------

struct AugmentCliOptions {
  std::string rm;
  std::string hm;
  std::string output;
  std::string stats;
  std::string skip_report;
  bool no_breathy = false;
  bool skip_missing = false;
  bool no_proximity = false;
  std::optional<int64_t> slack;
};

selaug::AugmentOptions ToAugmentOptions(const GlobalOptions& g,
                                        const AugmentCliOptions& o) {
  selaug::AugmentOptions a;
  a.breathy = !o.no_breathy;
  a.skip_missing = o.skip_missing;
  a.workers = g.workers;
  a.proximity.enabled = !o.no_proximity;
  if (o.slack) {
    if (*o.slack < 0) {
      a.proximity.slack = selaug::ProximityRule::Slack::kOff;
    } else {
      a.proximity.slack = selaug::ProximityRule::Slack::kFixed;
      a.proximity.fixed_slack_frames = *o.slack;
    }
  }
  return a;
}

std::string StatsSummary(const selaug::AugmentationStats& s) {
  std::ostringstream out;
  out << "utterances: " << s.utterances << "\nmatched: " << s.matched
      << "\nunmatched RM plosives: " << s.unmatched_rm_plosives << "\n";
  for (const auto& [symbol, count] : s.counts) {
    out << "  [" << symbol << "] " << count << "\n";
  }
  return out.str();
}

void RunAugment(const GlobalOptions& g, const AugmentCliOptions& o) {
  const Inventory inv = LoadInventory(g);
  const MappingTable table = LoadMapping(g, inv);
  RequireReadable(o.rm);
  RequireReadable(o.hm);
  const selaug::AugmentOptions options = ToAugmentOptions(g, o);
  Input rm(o.rm);
  Input hm(o.hm);
  Output out(o.output);
  const selaug::CorpusAugmentation result = selaug::AugmentCorpus(
      rm.stream(), rm.name(), hm.stream(), hm.name(), table, inv, options,
      &out.stream());

  nlohmann::json stats = result.stats.ToJson();
  stats["missing"] = result.missing;
  if (!o.stats.empty()) WriteJsonFile(o.stats, stats);
  if (!o.skip_report.empty()) {
    WriteJsonFile(o.skip_report, {{"skipped", result.missing}});
  }
  for (const auto& id : result.missing) {
    std::cerr << "warning: no helper track for '" << id << "', skipped\n";
  }
  std::cerr << StatsSummary(result.stats);
}

void RunPrefilter(const GlobalOptions& g, const AugmentCliOptions& o) {
  const Inventory inv = LoadInventory(g);
  const MappingTable table = LoadMapping(g, inv);
  RequireReadable(o.rm);
  RequireReadable(o.hm);
  Input rm(o.rm);
  Input hm(o.hm);
  const auto ids = selaug::PrefilterByAspiration(
      rm.stream(), rm.name(), hm.stream(), hm.name(), table, inv,
      ToAugmentOptions(g, o));
  Output out(o.output);
  for (const auto& id : ids) selaug::WriteJsonLine(out.stream(), {{"utt_id", id}});
}

// prepare -----------------------------------------------------------------

struct PrepareOptions {
  std::string input;
  std::string output;
  int64_t max_downvotes = 0;
  size_t n = 0;
  bool per_language = false;
  double fraction = 0.2;
  std::string train;
  std::string valid;
  std::string config;
  std::string report;
  std::string vocab;
  std::string manifest;
  std::string blank = "<pad>";
  std::vector<std::string> remove;
  std::vector<std::string> add;
  std::string id_map;
};

void RunFilter(const PrepareOptions& o) {
  RequireReadable(o.input);
  const auto m = selaug::FilterDownvoted(selaug::ReadManifestFile(o.input),
                                         o.max_downvotes);
  Output out(o.output);
  selaug::WriteManifest(out.stream(), m);
}

void RunSample(const GlobalOptions& g, const PrepareOptions& o) {
  RequireReadable(o.input);
  const auto m = selaug::SampleSegments(selaug::ReadManifestFile(o.input), o.n,
                                        g.seed, o.per_language);
  Output out(o.output);
  selaug::WriteManifest(out.stream(), m);
}

void RunSplit(const GlobalOptions& g, const PrepareOptions& o) {
  RequireReadable(o.input);
  const auto s = selaug::SplitValidation(selaug::ReadManifestFile(o.input),
                                         o.fraction, g.seed);
  Output train(o.train);
  selaug::WriteManifest(train.stream(), s.train);
  Output valid(o.valid);
  selaug::WriteManifest(valid.stream(), s.valid);
}

void RunRemap(const GlobalOptions& g, const PrepareOptions& o) {
  const Inventory inv = LoadInventory(g);
  const selaug::RemapConfig cfg = o.config.empty()
                                      ? selaug::RemapConfig{}
                                      : selaug::RemapConfig::Load(o.config);
  RequireReadable(o.input);
  const auto r = selaug::RemapInvalid(selaug::ReadManifestFile(o.input), cfg, inv);
  Output out(o.output);
  selaug::WriteManifest(out.stream(), r.manifest);
  if (!o.report.empty()) WriteJsonFile(o.report, r.ReportJson());
}

void RunOnsetTestset(const GlobalOptions& g, const PrepareOptions& o) {
  RequireReadable(o.input);
  const auto m = selaug::BuildOnsetTestset(selaug::ReadManifestFile(o.input),
                                           o.n, g.seed);
  Output out(o.output);
  selaug::WriteManifest(out.stream(), m);
}

void RunCleanVocab(const PrepareOptions& o) {
  const auto vocab =
      selaug::VocabSpec::FromJson(selaug::ReadJsonFile(o.vocab), o.blank);
  std::vector<std::string> transcriptions;
  if (!o.manifest.empty()) {
    RequireReadable(o.manifest);
    for (const auto& r : selaug::ReadManifestFile(o.manifest)) {
      transcriptions.push_back(r.transcription);
    }
  }
  const auto cleaned = selaug::CleanVocab(vocab, transcriptions, o.remove, o.add);
  WriteJsonFile(o.output, cleaned.vocab.ToJson());
  if (!o.id_map.empty()) {
    nlohmann::json map = nlohmann::json::object();
    for (const auto& [from, to] : cleaned.id_map) map[std::to_string(from)] = to;
    WriteJsonFile(o.id_map, {{"id_map", map},
                             {"removed", cleaned.removed},
                             {"added", cleaned.added}});
  }
}

// synth -------------------------------------------------------------------

struct SynthOptions {
  std::string scenario;
  std::string rm;
  std::string hm;
  std::string truth;
  std::string rm_frames;
  std::string hm_frames;
  std::string blank = "_";
  std::string output;
  std::optional<size_t> n;
  std::optional<int64_t> jitter;
  std::optional<double> drop_rate;
};

void RunSynthTracks(const GlobalOptions& g, const SynthOptions& o,
                    bool seed_given) {
  const Inventory inv = LoadInventory(g);
  selaug::ScenarioSpec spec;
  if (!o.scenario.empty()) {
    spec = selaug::ScenarioSpec::FromJson(selaug::ReadJsonFile(o.scenario));
  }
  if (seed_given) spec.seed = g.seed;
  if (o.n) spec.n_utterances = *o.n;
  if (o.jitter) spec.jitter = *o.jitter;
  if (o.drop_rate) spec.drop_rate = *o.drop_rate;
  const selaug::SynthCorpus corpus = selaug::Generate(spec, inv);

  auto write_tracks = [](const std::string& path,
                         const std::vector<selaug::PhoneTrack>& tracks) {
    if (path.empty()) return;
    Output out(path);
    for (const auto& t : tracks) {
      selaug::WriteJsonLine(out.stream(), selaug::PhoneTrackToJson(t));
    }
  };
  auto write_frames = [&](const std::string& path,
                          const std::vector<selaug::PhoneTrack>& tracks) {
    if (path.empty()) return;
    Output out(path);
    for (const auto& t : tracks) {
      selaug::WriteJsonLine(out.stream(), selaug::FramePathToJson(
                                              selaug::TrackToFramePath(t, o.blank)));
    }
  };
  write_tracks(o.rm, corpus.rm);
  write_tracks(o.hm, corpus.hm);
  write_frames(o.rm_frames, corpus.rm);
  write_frames(o.hm_frames, corpus.hm);
  if (!o.truth.empty()) {
    Output out(o.truth);
    for (const auto& m : corpus.truth) selaug::WriteJsonLine(out.stream(), m.ToJson());
  }
}

void RunSynthEval(const GlobalOptions& g, const SynthOptions& o, bool seed_given) {
  selaug::EvalScenario scenario;
  if (!o.scenario.empty()) {
    scenario = selaug::EvalScenario::FromJson(selaug::ReadJsonFile(o.scenario));
  }
  if (seed_given) scenario.seed = g.seed;
  if (o.n) scenario.per_phoneme_n = *o.n;
  Output out(o.output);
  for (const auto& inst : selaug::GenerateEvalInstances(scenario)) {
    selaug::WriteJsonLine(out.stream(), selaug::EvalInstanceToJson(inst));
  }
}

// evaluate ----------------------------------------------------------------

struct EvaluateOptions {
  std::string input;
  bool strict = false;
  bool lenient = false;
  bool exclude_ambiguous = false;
  bool hard_errors = false;
  std::string group;
  std::string text;
  std::string json;
  std::string boxplot;
};

void RunEvaluate(const GlobalOptions& g, const EvaluateOptions& o) {
  const Inventory inv = LoadInventory(g);
  const OnsetGroups groups = LoadGroups(g);
  if (!o.group.empty() && groups.Find(o.group) == nullptr) {
    throw selaug::Error("unknown group '" + o.group + "'");
  }
  RequireReadable(o.input);
  Input in(o.input);
  selaug::JsonLinesReader reader(in.stream(), in.name());
  std::vector<selaug::EvalInstance> instances;
  nlohmann::json j;
  while (reader.Next(&j)) {
    try {
      instances.push_back(selaug::EvalInstanceFromJson(j));
    } catch (const selaug::Error& e) {
      reader.Fail(e.what());
    }
  }

  selaug::ReportOptions options;
  options.policy = o.exclude_ambiguous
                       ? selaug::AmbiguityPolicy::kExcludeFromDenominator
                       : selaug::AmbiguityPolicy::kAsTenuis;
  options.hard_errors = o.hard_errors;
  options.workers = g.workers;
  if (!o.group.empty()) options.only_group = o.group;
  const auto result = selaug::Evaluate(instances, inv, groups, options);

  selaug::TableStyle style = selaug::TableStyle::kBoth;
  if (o.strict && !o.lenient) style = selaug::TableStyle::kStrictOnly;
  if (o.lenient && !o.strict) style = selaug::TableStyle::kLenientOnly;
  WriteText(o.text, selaug::FormatTextReport(result, groups, style));
  if (!o.json.empty()) WriteJsonFile(o.json, selaug::ReportToJson(result));
  if (!o.boxplot.empty()) WriteText(o.boxplot, selaug::BoxplotCsv(result));
  for (const auto& d : result.diagnostics) std::cerr << "warning: " << d << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"selaug: selective phonation augmentation and plosive metrics"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--inventory", g.inventory, "Phone inventory JSON")
      ->check(CLI::ExistingFile);
  app.add_option("--mapping", g.mapping, "Mapping table JSON")
      ->check(CLI::ExistingFile);
  app.add_option("--continuants", g.continuants,
                 "Place groups and homorganic continuants JSON")
      ->check(CLI::ExistingFile);
  auto* seed_opt = app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--workers", g.workers, "Maximum worker threads")
      ->check(CLI::PositiveNumber);

  // decode
  DecodeOptions decode;
  auto* decode_cmd = app.add_subcommand("decode", "Collapse CTC frame paths into phone tracks");
  decode_cmd->add_option("input", decode.input, "FramePath JSON Lines")->required();
  decode_cmd->add_option("-o,--output", decode.output, "PhoneTrack JSON Lines");
  decode_cmd->add_option("--blank", decode.blank, "Blank token when records omit it");
  decode_cmd->add_option("--frame-ms", decode.frame_ms,
                         "Frame duration when records omit it")
      ->check(CLI::PositiveNumber);
  decode_cmd->add_option("--model", decode.model, "Model tag of the output tracks");

  // augment / prefilter-aspiration
  AugmentCliOptions augment;
  auto add_pair_options = [&](CLI::App* cmd) {
    cmd->add_option("rm", augment.rm, "Reference model tracks")->required();
    cmd->add_option("hm", augment.hm, "Helper model tracks")->required();
    cmd->add_option("-o,--output", augment.output, "Output JSON Lines");
    cmd->add_flag("--no-breathy", augment.no_breathy, "Transfer breathy voice as plain voicing");
    cmd->add_flag("--skip-missing", augment.skip_missing,
                  "Skip utterances without a helper track");
    cmd->add_flag("--no-proximity", augment.no_proximity,
                  "Match on index window only");
    cmd->add_option("--slack", augment.slack,
                    "Fixed start-frame slack (negative: overlap only)");
  };
  auto* augment_cmd = app.add_subcommand("augment", "Overwrite RM phonation from matched HM phones");
  add_pair_options(augment_cmd);
  augment_cmd->add_option("--stats", augment.stats, "Statistics JSON");
  augment_cmd->add_option("--skip-report", augment.skip_report,
                          "Skipped utterance report JSON");
  auto* prefilter_cmd = app.add_subcommand(
      "prefilter-aspiration", "List utterances whose matches yield aspiration");
  add_pair_options(prefilter_cmd);

  // prepare
  PrepareOptions prep;
  auto* prepare_cmd = app.add_subcommand("prepare", "Manifest preparation");
  prepare_cmd->require_subcommand(1);
  auto* filter_cmd = prepare_cmd->add_subcommand("filter", "Drop downvoted records");
  filter_cmd->add_option("input", prep.input, "Manifest JSON Lines")->required();
  filter_cmd->add_option("-o,--output", prep.output, "Output manifest");
  filter_cmd->add_option("--max-downvotes", prep.max_downvotes, "Largest allowed down-vote count");
  auto* sample_cmd = prepare_cmd->add_subcommand("sample", "Seeded sample");
  sample_cmd->add_option("input", prep.input, "Manifest JSON Lines")->required();
  sample_cmd->add_option("-o,--output", prep.output, "Output manifest");
  sample_cmd->add_option("-n,--count", prep.n, "Records to keep")->required();
  sample_cmd->add_flag("--per-language", prep.per_language, "Sample n records per language");
  auto* split_cmd = prepare_cmd->add_subcommand("split", "Train/validation split");
  split_cmd->add_option("input", prep.input, "Manifest JSON Lines")->required();
  split_cmd->add_option("--fraction", prep.fraction, "Training share");
  split_cmd->add_option("--train", prep.train, "Training manifest output")->required();
  split_cmd->add_option("--valid", prep.valid, "Validation manifest output")->required();
  auto* remap_cmd = prepare_cmd->add_subcommand("remap", "Remap or drop invalid transcriptions");
  remap_cmd->add_option("input", prep.input, "Manifest JSON Lines")->required();
  remap_cmd->add_option("-o,--output", prep.output, "Output manifest");
  remap_cmd->add_option("--config", prep.config, "Remap rules JSON")->check(CLI::ExistingFile);
  remap_cmd->add_option("--report", prep.report, "Remap report JSON");
  auto* onset_cmd = prepare_cmd->add_subcommand("onset-testset", "Absolute-onset test set");
  onset_cmd->add_option("input", prep.input, "Annotated candidates JSON Lines")->required();
  onset_cmd->add_option("-o,--output", prep.output, "Test-set output");
  onset_cmd->add_option("-n,--per-phoneme", prep.n, "Records per phoneme")->default_val(40);
  auto* vocab_cmd = prepare_cmd->add_subcommand("clean-vocab", "Vocabulary maintenance");
  vocab_cmd->add_option("vocab", prep.vocab, "Vocabulary JSON")->required()->check(CLI::ExistingFile);
  vocab_cmd->add_option("--manifest", prep.manifest, "Manifest whose symbols must be covered");
  vocab_cmd->add_option("--blank", prep.blank, "Blank token");
  vocab_cmd->add_option("--remove", prep.remove, "Tokens to remove");
  vocab_cmd->add_option("--add", prep.add, "Tokens to add");
  vocab_cmd->add_option("-o,--output", prep.output, "Output vocabulary");
  vocab_cmd->add_option("--id-map", prep.id_map, "Old-to-new id map output");

  // synth
  SynthOptions synth;
  auto* synth_cmd = app.add_subcommand("synth", "Synthetic fixtures");
  synth_cmd->require_subcommand(1);
  auto* tracks_cmd = synth_cmd->add_subcommand("tracks", "Paired RM/HM tracks");
  tracks_cmd->add_option("--scenario", synth.scenario, "Scenario JSON")->check(CLI::ExistingFile);
  tracks_cmd->add_option("--rm", synth.rm, "RM track output");
  tracks_cmd->add_option("--hm", synth.hm, "HM track output");
  tracks_cmd->add_option("--truth", synth.truth, "Ground-truth match output");
  tracks_cmd->add_option("--rm-frames", synth.rm_frames, "RM frame path output");
  tracks_cmd->add_option("--hm-frames", synth.hm_frames, "HM frame path output");
  tracks_cmd->add_option("--blank", synth.blank, "Blank token for frame paths");
  tracks_cmd->add_option("-n,--utterances", synth.n, "Utterance count");
  tracks_cmd->add_option("--jitter", synth.jitter, "Max HM frame shift");
  tracks_cmd->add_option("--drop-rate", synth.drop_rate, "HM counterpart drop probability");
  auto* eval_cmd = synth_cmd->add_subcommand("eval", "EvalInstance fixtures");
  eval_cmd->add_option("--scenario", synth.scenario, "Scenario JSON")->check(CLI::ExistingFile);
  eval_cmd->add_option("-n,--per-phoneme", synth.n, "Instances per phoneme");
  eval_cmd->add_option("-o,--output", synth.output, "Output JSON Lines");

  // evaluate
  EvaluateOptions eval;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Plosive realization metrics");
  evaluate_cmd->add_option("input", eval.input, "EvalInstance JSON Lines")->required();
  evaluate_cmd->add_flag("--strict", eval.strict, "Strict values only");
  evaluate_cmd->add_flag("--lenient", eval.lenient, "Lenient values only");
  evaluate_cmd->add_flag("--exclude-ambiguous", eval.exclude_ambiguous,
                         "Drop ambiguous cases from the Asp%/Ten% denominators");
  evaluate_cmd->add_flag("--hard-errors", eval.hard_errors,
                         "Fail on untokenizable onsets");
  evaluate_cmd->add_option("--group", eval.group, "Restrict to one place group");
  evaluate_cmd->add_option("--text", eval.text, "Text table output");
  evaluate_cmd->add_option("--json", eval.json, "JSON report output");
  evaluate_cmd->add_option("--boxplot", eval.boxplot, "Boxplot CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const bool seed_given = seed_opt->count() > 0;
  try {
    if (*decode_cmd) RunDecode(g, decode);
    else if (*augment_cmd) RunAugment(g, augment);
    else if (*prefilter_cmd) RunPrefilter(g, augment);
    else if (*filter_cmd) RunFilter(prep);
    else if (*sample_cmd) RunSample(g, prep);
    else if (*split_cmd) RunSplit(g, prep);
    else if (*remap_cmd) RunRemap(g, prep);
    else if (*onset_cmd) RunOnsetTestset(g, prep);
    else if (*vocab_cmd) RunCleanVocab(prep);
    else if (*tracks_cmd) RunSynthTracks(g, synth, seed_given);
    else if (*eval_cmd) RunSynthEval(g, synth, seed_given);
    else if (*evaluate_cmd) RunEvaluate(g, eval);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
