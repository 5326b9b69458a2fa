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

#include "recx/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <stdexcept>
#include <thread>

#include <spdlog/spdlog.h>

#include "recx/errors.hpp"

namespace recx {
namespace {

Labeler& require(Labeler* labeler) {
  if (!labeler) throw std::invalid_argument("configuration needs a labeler but none was given");
  return *labeler;
}

Segmentation segment(const DomTree& page, std::string_view page_id, const PipelineConfig& cfg,
                     Labeler* labeler) {
  if (cfg.segmenter == SegmenterKind::kMdr) return segment_mdr(page, cfg.tau);
  return segment_external(require(labeler), page, page_id);
}

std::vector<LabeledNode> classify(const DomTree& page, std::string_view page_id, const PipelineConfig& cfg,
                                  Labeler* labeler, const std::optional<XPath>& scope) {
  if (cfg.classifier == ClassifierKind::kHeuristic) return attributes_only(classify_heuristic(page, scope));
  ClassifyRequest request = make_classify_request(page, std::string(page_id), scope);
  request.context = scope ? ClassifyContext::kRecord : ClassifyContext::kPage;
  return attributes_only(classify_external(require(labeler), request));
}

}  // namespace

std::string_view to_string(PipelineMode mode) {
  return mode == PipelineMode::kParallel ? "parallel" : "sequential";
}

std::string_view to_string(SegmenterKind kind) { return kind == SegmenterKind::kMdr ? "mdr" : "external"; }

std::string_view to_string(ClassifierKind kind) {
  return kind == ClassifierKind::kHeuristic ? "heuristic" : "external";
}

std::optional<PipelineMode> parse_pipeline_mode(std::string_view s) {
  if (s == "parallel") return PipelineMode::kParallel;
  if (s == "sequential") return PipelineMode::kSequential;
  return std::nullopt;
}

std::optional<SegmenterKind> parse_segmenter_kind(std::string_view s) {
  if (s == "mdr") return SegmenterKind::kMdr;
  if (s == "external") return SegmenterKind::kExternal;
  return std::nullopt;
}

std::optional<ClassifierKind> parse_classifier_kind(std::string_view s) {
  if (s == "heuristic") return ClassifierKind::kHeuristic;
  if (s == "external") return ClassifierKind::kExternal;
  return std::nullopt;
}

void PipelineConfig::validate() const {
  if (!(tau > 0.0 && tau <= 1.0)) throw std::invalid_argument("tau must lie in (0, 1]");
  if (workers == 0) throw std::invalid_argument("workers must be positive");
  if (needs_labeler() && (!labeler_endpoint || labeler_endpoint->empty())) {
    throw std::invalid_argument("external segmenter or classifier needs a labeler endpoint");
  }
}

nlohmann::json config_to_json(const PipelineConfig& cfg) {
  nlohmann::json j = {
      {"pipeline", to_string(cfg.mode)},
      {"segmenter", to_string(cfg.segmenter)},
      {"classifier", to_string(cfg.classifier)},
      {"tau", cfg.tau},
      {"workers", cfg.workers},
  };
  j["labeler_endpoint"] = cfg.labeler_endpoint ? nlohmann::json(*cfg.labeler_endpoint) : nlohmann::json(nullptr);
  return j;
}

PageExtraction run_parallel(const DomTree& page, std::string_view page_id, const PipelineConfig& cfg,
                            Labeler* labeler) {
  // Classification runs on its own thread while this one segments.
  auto labels = std::async(std::launch::async, [&] { return classify(page, page_id, cfg, labeler, std::nullopt); });
  PageExtraction out;
  out.page_id = std::string(page_id);
  out.segmentation = segment(page, page_id, cfg, labeler);
  out.labels = labels.get();
  out.index = build_prefix_index(out.segmentation);
  MatchResult matched = match_attributes(out.index, out.labels);
  out.records = std::move(matched.records);
  out.unmatched = std::move(matched.unmatched);
  return out;
}

PageExtraction run_sequential(const DomTree& page, std::string_view page_id, const PipelineConfig& cfg,
                              Labeler* labeler) {
  PageExtraction out;
  out.page_id = std::string(page_id);
  out.segmentation = segment(page, page_id, cfg, labeler);
  out.index = build_prefix_index(out.segmentation);
  out.records.resize(out.index.size());
  for (std::size_t i = 0; i < out.index.size(); ++i) {
    out.records[i].record_index = i;
    out.records[i].attributes = classify(page, page_id, cfg, labeler, out.index.prefixes[i]);
    out.labels.insert(out.labels.end(), out.records[i].attributes.begin(), out.records[i].attributes.end());
  }
  return out;
}

PageExtraction run_page(const DomTree& page, std::string_view page_id, const PipelineConfig& cfg,
                        Labeler* labeler) {
  return cfg.mode == PipelineMode::kParallel ? run_parallel(page, page_id, cfg, labeler)
                                             : run_sequential(page, page_id, cfg, labeler);
}

CorpusRun run_corpus(std::span<const AnnotatedPage> pages, const PipelineConfig& cfg, Labeler* labeler) {
  if (cfg.workers == 0) throw std::invalid_argument("workers must be positive");
  if (cfg.needs_labeler()) require(labeler);

  std::vector<std::optional<PageExtraction>> results(pages.size());
  std::vector<std::optional<std::string>> errors(pages.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < pages.size(); i = next++) {
      const AnnotatedPage& page = pages[i];
      try {
        if (!page.html) throw IoError("page html not loaded");
        results[i] = run_page(*page.html, page.page_id, cfg, labeler);
      } catch (const std::exception& e) {
        spdlog::warn("page {} failed: {}", page.page_id, e.what());
        errors[i] = e.what();
      }
    }
  };
  const std::size_t n_threads = std::min(cfg.workers, std::max<std::size_t>(pages.size(), 1));
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < n_threads; ++t) threads.emplace_back(work);
  work();
  for (auto& t : threads) t.join();

  CorpusRun run;
  for (std::size_t i = 0; i < pages.size(); ++i) {
    if (results[i]) {
      run.pages.push_back(std::move(*results[i]));
    } else {
      run.failures.push_back({pages[i].page_id, errors[i].value_or("unknown error")});
    }
  }
  std::sort(run.pages.begin(), run.pages.end(),
            [](const PageExtraction& a, const PageExtraction& b) { return a.page_id < b.page_id; });
  std::sort(run.failures.begin(), run.failures.end(),
            [](const PageFailure& a, const PageFailure& b) { return a.page_id < b.page_id; });
  return run;
}

}  // namespace recx
