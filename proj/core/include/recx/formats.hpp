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

// JSON lines written by the command-line tools, one object per page.
//
//   segment   {"page_id", "boundaries": [xpath]}
//   classify  {"page_id", "context", "labels": [{"xpath", "label", "text"}]}
//   extract   {"page_id", "records": [{"title": [str], "tag": [str],
//              "date": [str], "boundary": xpath, "prefix": xpath}],
//              "unmatched": int, "unmatched_by_label": {label: int},
//              "boundaries": [xpath], "labels": [...]}
//
// An extraction line is a superset of the other two, so any of them can be
// fed to evaluation.

#pragma once

#include <span>
#include <string_view>

#include <nlohmann/json.hpp>

#include "recx/classifier.hpp"
#include "recx/metrics.hpp"
#include "recx/pipeline.hpp"
#include "recx/segmenter.hpp"

namespace recx {

nlohmann::json segmentation_to_json(std::string_view page_id, const Segmentation& seg);
nlohmann::json labels_to_json(std::string_view page_id, ClassifyContext context,
                              std::span<const LabeledNode> labels);
nlohmann::json extraction_to_json(const PageExtraction& page);

nlohmann::json labeled_node_to_json(const LabeledNode& node);
// Throws CorpusFormatError.
LabeledNode labeled_node_from_json(const nlohmann::json& j);

// Reads the record part of an extraction line. Records without a "prefix"
// get the one derived from the line's record boundaries. Throws
// CorpusFormatError.
PredictedPage predicted_page_from_json(const nlohmann::json& j);

}  // namespace recx
