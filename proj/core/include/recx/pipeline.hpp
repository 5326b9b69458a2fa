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

// End-to-end record extraction.
//
// Parallel mode segments the page and classifies the whole page
// independently, then matches attributes to records by xpath prefix.
// Sequential mode segments first and classifies each record region on its
// own; attributes belong to the record whose region was classified.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "recx/classifier.hpp"
#include "recx/corpus.hpp"
#include "recx/labeler.hpp"
#include "recx/matcher.hpp"
#include "recx/segmenter.hpp"

namespace recx {

enum class PipelineMode { kParallel, kSequential };
enum class SegmenterKind { kMdr, kExternal };
enum class ClassifierKind { kHeuristic, kExternal };

std::string_view to_string(PipelineMode mode);
std::string_view to_string(SegmenterKind kind);
std::string_view to_string(ClassifierKind kind);
std::optional<PipelineMode> parse_pipeline_mode(std::string_view s);
std::optional<SegmenterKind> parse_segmenter_kind(std::string_view s);
std::optional<ClassifierKind> parse_classifier_kind(std::string_view s);

struct PipelineConfig {
  PipelineMode mode = PipelineMode::kParallel;
  SegmenterKind segmenter = SegmenterKind::kMdr;
  ClassifierKind classifier = ClassifierKind::kHeuristic;
  double tau = kDefaultTau;
  std::optional<std::string> labeler_endpoint;
  std::size_t workers = 1;

  bool needs_labeler() const {
    return segmenter == SegmenterKind::kExternal || classifier == ClassifierKind::kExternal;
  }
  // Throws std::invalid_argument on an unusable combination.
  void validate() const;
};

nlohmann::json config_to_json(const PipelineConfig& cfg);

struct PageExtraction {
  std::string page_id;
  Segmentation segmentation;
  PrefixIndex index;
  std::vector<RecordExtraction> records;  // one per boundary
  std::vector<LabeledNode> unmatched;
  // Every attribute label the classifier produced, out excluded.
  std::vector<LabeledNode> labels;
};

// `labeler` may be null unless the configuration uses external components.
// Errors from either stage propagate.
PageExtraction run_parallel(const DomTree& page, std::string_view page_id, const PipelineConfig& cfg,
                            Labeler* labeler = nullptr);
PageExtraction run_sequential(const DomTree& page, std::string_view page_id, const PipelineConfig& cfg,
                              Labeler* labeler = nullptr);
// Dispatches on cfg.mode.
PageExtraction run_page(const DomTree& page, std::string_view page_id, const PipelineConfig& cfg,
                        Labeler* labeler = nullptr);

struct PageFailure {
  std::string page_id;
  std::string error;
};

struct CorpusRun {
  std::vector<PageExtraction> pages;  // successful pages, by page_id
  std::vector<PageFailure> failures;  // by page_id
};

// Runs every page on up to cfg.workers threads. A failing page is recorded
// and the run goes on. Pages need their html loaded.
CorpusRun run_corpus(std::span<const AnnotatedPage> pages, const PipelineConfig& cfg,
                     Labeler* labeler = nullptr);

}  // namespace recx
