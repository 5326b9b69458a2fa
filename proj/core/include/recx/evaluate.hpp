// Copyright 2026 The recx Authors.
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

// Scores predicted JSON lines against an annotated corpus.

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "recx/classifier.hpp"
#include "recx/corpus.hpp"
#include "recx/metrics.hpp"

namespace recx {

// Whatever the prediction lines said about one page. Lines sharing a page id
// are merged; a later line overrides fields set by an earlier one.
struct PagePrediction {
  std::optional<std::vector<XPath>> boundaries;
  std::optional<std::vector<LabeledNode>> labels;
  std::optional<PredictedPage> records;
};

using Predictions = std::map<std::string, PagePrediction>;

// Throws CorpusFormatError naming the offending line.
Predictions parse_predictions(std::istream& in);
// Throws IoError when the file cannot be opened.
Predictions read_predictions(const std::filesystem::path& path);

struct SegmentationReport {
  PRF avg;
  double ari = 0.0;  // page means
  double nmi = 0.0;
  std::size_t pages = 0;
};

struct EvalReport {
  std::size_t pages = 0;
  // Reference pages with no prediction; they are scored as empty output.
  std::vector<std::string> missing;
  std::optional<SegmentationReport> segmentation;
  std::optional<std::map<NodeLabel, PRF>> classification;
  std::optional<FinalMetrics> final;
};

// A section is computed when at least one page carries the data it needs.
// Throws EmptyCorpus for an empty reference and PageSetMismatch for
// predictions about pages the reference lacks. Reference pages need html.
EvalReport evaluate(std::span<const AnnotatedPage> reference, const Predictions& predicted);

nlohmann::json report_to_json(const EvalReport& report);
std::string format_report(const EvalReport& report);

}  // namespace recx
