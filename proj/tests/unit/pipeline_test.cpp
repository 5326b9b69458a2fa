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

#include <doctest.h>

#include <atomic>

#include "recx/errors.hpp"
#include "recx/formats.hpp"
#include "recx/metrics.hpp"
#include "recx/pipeline.hpp"
#include "recx/syngen.hpp"

namespace recx {
namespace {

PipelineConfig oracle_config(PipelineMode mode) {
  PipelineConfig cfg;
  cfg.mode = mode;
  cfg.segmenter = SegmenterKind::kExternal;
  cfg.classifier = ClassifierKind::kExternal;
  cfg.labeler_endpoint = "in-process";
  return cfg;
}

std::vector<AnnotatedPage> list_and_card_pages(std::size_t n, std::uint64_t seed) {
  CorpusSpec spec;
  spec.n_pages = n;
  spec.seed = seed;
  spec.templates = {PageTemplate::kList, PageTemplate::kCards};
  spec.noise = NoiseSet::all();
  spec.optional_attr_dropout = Dropout::uniform(0.2);
  std::vector<AnnotatedPage> out;
  for (auto& g : generate_corpus(spec).pages) out.push_back(std::move(g.page));
  return out;
}

std::vector<PredictedPage> predictions(const CorpusRun& run) {
  std::vector<PredictedPage> out;
  for (const auto& p : run.pages) out.push_back(predicted_page_from_json(extraction_to_json(p)));
  return out;
}

// Answers every segmentation request with OUT.
class NoBoundaries final : public Labeler {
 public:
  nlohmann::json call(const nlohmann::json& request) override {
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& n : request["nodes"]) labels.push_back({{"xpath", n["xpath"]}, {"label", "OUT"}});
    return {{"labels", labels}};
  }
  std::string describe() const override { return "no-boundaries"; }
};

class Unreachable final : public Labeler {
 public:
  nlohmann::json call(const nlohmann::json&) override {
    ++calls;
    throw LabelerUnavailable("connection refused");
  }
  std::string describe() const override { return "unreachable"; }
  std::atomic<int> calls{0};
};

TEST_SUITE("pipeline") {
  TEST_CASE("oracle labels reproduce the annotations in both modes") {
    const auto pages = list_and_card_pages(12, 5);
    AnnotationLabeler oracle(pages);
    for (PipelineMode mode : {PipelineMode::kParallel, PipelineMode::kSequential}) {
      INFO(to_string(mode));
      const CorpusRun run = run_corpus(pages, oracle_config(mode), &oracle);
      CHECK(run.failures.empty());
      REQUIRE(run.pages.size() == pages.size());
      const FinalMetrics m = final_record_metrics(pages, predictions(run));
      for (NodeLabel l : kExtractedLabels) {
        CHECK(m.at(l).fp == 0);
        CHECK(m.at(l).fn == 0);
        CHECK(m.at(l).prf().f1 == 1.0);
      }
    }
  }

  TEST_CASE("sequential fragments are disjoint") {
    const auto pages = list_and_card_pages(6, 2);
    AnnotationLabeler oracle(pages);
    for (const auto& page : pages) {
      const PageExtraction x = run_sequential(*page.html, page.page_id, oracle_config(PipelineMode::kSequential), &oracle);
      const auto& prefixes = x.index.prefixes;
      for (std::size_t i = 0; i < prefixes.size(); ++i) {
        for (std::size_t j = 0; j < prefixes.size(); ++j) {
          if (i != j) CHECK_FALSE(prefixes[i].is_prefix_of(prefixes[j]));
        }
        for (const auto& a : x.records[i].attributes) CHECK(prefixes[i].is_prefix_of(a.xpath));
      }
    }
  }

  TEST_CASE("a footer date is classified but left unmatched") {
    PageSpec spec;
    spec.seed = 12;
    spec.noise.footer = true;
    const GeneratedPage g = generate_page(spec);
    const PageExtraction x = run_parallel(*g.page.html, g.page.page_id, PipelineConfig{});
    const auto footer = std::find_if(x.unmatched.begin(), x.unmatched.end(), [](const LabeledNode& n) {
      return n.label == NodeLabel::kDate && n.xpath.str().find("/footer[1]/") != std::string::npos;
    });
    REQUIRE(footer != x.unmatched.end());
    for (const auto& r : x.records) {
      for (const auto& a : r.attributes) CHECK(a.xpath != footer->xpath);
    }
    CHECK(x.records.size() == g.page.records.size());
  }

  TEST_CASE("no boundaries means no records") {
    const GeneratedPage g = generate_page(PageSpec{});
    PipelineConfig cfg;
    cfg.segmenter = SegmenterKind::kExternal;
    cfg.labeler_endpoint = "in-process";
    NoBoundaries labeler;
    const PageExtraction x = run_parallel(*g.page.html, g.page.page_id, cfg, &labeler);
    CHECK(x.segmentation.empty());
    CHECK(x.records.empty());
    CHECK_FALSE(x.labels.empty());
    CHECK(x.unmatched.size() == x.labels.size());
    const PageExtraction s = run_sequential(*g.page.html, g.page.page_id, cfg, &labeler);
    CHECK(s.records.empty());
    CHECK(s.labels.empty());
  }

  TEST_CASE("failures stay with their page") {
    auto pages = list_and_card_pages(4, 9);
    AnnotatedPage no_html = pages[0];
    no_html.page_id = "zz-no-html";
    no_html.html = nullptr;
    AnnotatedPage flat = pages[1];
    flat.page_id = "zz-flat";
    flat.html = std::make_shared<const DomTree>(parse_html("<html><body><p>one lonely paragraph</p></body></html>"));
    pages.push_back(no_html);
    pages.push_back(flat);

    PipelineConfig cfg;
    cfg.workers = 3;
    const CorpusRun run = run_corpus(pages, cfg);
    CHECK(run.pages.size() == 4);
    REQUIRE(run.failures.size() == 2);
    CHECK(run.failures[0].page_id == "zz-flat");
    CHECK(run.failures[1].page_id == "zz-no-html");
    CHECK(run.failures[1].error == "page html not loaded");
    for (std::size_t i = 1; i < run.pages.size(); ++i) CHECK(run.pages[i - 1].page_id < run.pages[i].page_id);
  }

  TEST_CASE("an unreachable labeler fails pages instead of emptying them") {
    const auto pages = list_and_card_pages(3, 4);
    Unreachable labeler;
    PipelineConfig cfg;
    cfg.classifier = ClassifierKind::kExternal;
    cfg.labeler_endpoint = "http://127.0.0.1:9";
    const CorpusRun run = run_corpus(pages, cfg, &labeler);
    CHECK(run.pages.empty());
    REQUIRE(run.failures.size() == 3);
    CHECK(run.failures[0].error.find("connection refused") != std::string::npos);
    CHECK(labeler.calls >= 3);
    CHECK_THROWS_AS(run_parallel(*pages[0].html, pages[0].page_id, cfg, nullptr), std::invalid_argument);
  }

  TEST_CASE("worker count does not change results") {
    const auto pages = list_and_card_pages(10, 6);
    PipelineConfig one;
    PipelineConfig four;
    four.workers = 4;
    const auto a = run_corpus(pages, one);
    const auto b = run_corpus(pages, four);
    REQUIRE(a.pages.size() == b.pages.size());
    for (std::size_t i = 0; i < a.pages.size(); ++i) {
      CHECK(extraction_to_json(a.pages[i]) == extraction_to_json(b.pages[i]));
    }
  }

  TEST_CASE("configuration") {
    PipelineConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.tau = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.tau = 0.7;
    cfg.workers = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.workers = 1;
    cfg.classifier = ClassifierKind::kExternal;
    CHECK(cfg.needs_labeler());
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.labeler_endpoint = "python3 -m labeler";
    CHECK_NOTHROW(cfg.validate());
    const auto j = config_to_json(cfg);
    CHECK(j["pipeline"] == "parallel");
    CHECK(j["classifier"] == "external");
    CHECK(j["labeler_endpoint"] == "python3 -m labeler");
    CHECK(parse_pipeline_mode("sequential") == PipelineMode::kSequential);
    CHECK_FALSE(parse_segmenter_kind("markuplm").has_value());
    CHECK(parse_classifier_kind("heuristic") == ClassifierKind::kHeuristic);
  }
}

}  // namespace
}  // namespace recx
