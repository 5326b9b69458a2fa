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

#include <sstream>

#include "golden.hpp"
#include "recx/errors.hpp"
#include "recx/evaluate.hpp"
#include "recx/formats.hpp"
#include "recx/pipeline.hpp"
#include "recx/syngen.hpp"

namespace recx {
namespace {

using nlohmann::json;

std::vector<AnnotatedPage> sample_pages() {
  CorpusSpec spec;
  spec.n_pages = 5;
  spec.seed = 13;
  spec.templates = {PageTemplate::kList, PageTemplate::kCards};
  std::vector<AnnotatedPage> out;
  for (auto& g : generate_corpus(spec).pages) out.push_back(std::move(g.page));
  return out;
}

std::string oracle_jsonl(const std::vector<AnnotatedPage>& pages) {
  AnnotationLabeler oracle(pages);
  PipelineConfig cfg;
  cfg.segmenter = SegmenterKind::kExternal;
  cfg.classifier = ClassifierKind::kExternal;
  cfg.labeler_endpoint = "in-process";
  std::ostringstream out;
  for (const auto& p : run_corpus(pages, cfg, &oracle).pages) out << extraction_to_json(p).dump() << "\n";
  return out.str();
}

TEST_SUITE("evaluate") {
  TEST_CASE("labeled nodes round trip") {
    const LabeledNode n{XPath::parse("/html[1]/a[2]"), NodeLabel::kTag, "sports"};
    CHECK(labeled_node_from_json(labeled_node_to_json(n)) == n);
    CHECK_THROWS_AS(labeled_node_from_json(json{{"xpath", "/html[1]"}, {"label", "price"}}), CorpusFormatError);
    CHECK_THROWS_AS(labeled_node_from_json(json{{"xpath", "html"}, {"label", "tag"}}), CorpusFormatError);
  }

  TEST_CASE("segmentation and label lines") {
    const Segmentation s({XPath::parse("/html[1]/p[1]"), XPath::parse("/html[1]/p[2]")});
    const json j = segmentation_to_json("p1", s);
    CHECK(j["page_id"] == "p1");
    CHECK(j["boundaries"] == json{"/html[1]/p[1]", "/html[1]/p[2]"});
    const std::vector<LabeledNode> labels = {{XPath::parse("/html[1]/p[1]"), NodeLabel::kDate, "01.01.2024"}};
    const json l = labels_to_json("p1", ClassifyContext::kPage, labels);
    CHECK(l["context"] == "page");
    CHECK(l["labels"][0]["label"] == "date");
  }

  TEST_CASE("extraction lines parse into predicted records") {
    const auto pages = sample_pages();
    std::istringstream in(oracle_jsonl(pages));
    const Predictions preds = parse_predictions(in);
    REQUIRE(preds.size() == pages.size());
    const PagePrediction& p = preds.at(pages[0].page_id);
    REQUIRE(p.records.has_value());
    REQUIRE(p.boundaries.has_value());
    REQUIRE(p.labels.has_value());
    CHECK(p.records->records.size() == pages[0].records.size());
    CHECK(p.boundaries->size() == pages[0].records.size());
  }

  TEST_CASE("predicted pages without prefixes derive them") {
    json j = {{"page_id", "x"},
              {"records",
               {{{"boundary", "/html[1]/ul[1]/li[1]/a[1]"}, {"title", {"A"}}},
                {{"boundary", "/html[1]/ul[1]/li[2]/a[1]"}, {"title", {"B"}}, {"tag", {"t1", "t2"}}}}}};
    const PredictedPage p = predicted_page_from_json(j);
    REQUIRE(p.records.size() == 2);
    CHECK(p.records[0].prefix.str() == "/html[1]/ul[1]/li[1]");
    CHECK(p.records[1].values.at(NodeLabel::kTag) == std::vector<std::string>{"t1", "t2"});
    j["unmatched"] = 2;
    CHECK_THROWS_AS(predicted_page_from_json(j), CorpusFormatError);
    j["unmatched_by_label"] = {{"date", 2}};
    CHECK(predicted_page_from_json(j).unmatched.at(NodeLabel::kDate) == 2);
  }

  TEST_CASE("malformed prediction files name the line") {
    std::istringstream bad("{\"page_id\": \"a\", \"boundaries\": []}\n\n{\"boundaries\": []}\n");
    CHECK_THROWS_WITH_AS(parse_predictions(bad), doctest::Contains("line 3"), CorpusFormatError);
    std::istringstream broken("{\"page_id\": \"a\", \"boundaries\": [\"nope\"]}\n");
    CHECK_THROWS_AS(parse_predictions(broken), CorpusFormatError);
    std::istringstream truncated("{\"page_id\": ");
    CHECK_THROWS_AS(parse_predictions(truncated), CorpusFormatError);
    CHECK_THROWS_AS(read_predictions("/nonexistent/predictions.jsonl"), IoError);
  }

  TEST_CASE("oracle predictions score perfectly") {
    const auto pages = sample_pages();
    std::istringstream in(oracle_jsonl(pages));
    const EvalReport r = evaluate(pages, parse_predictions(in));
    CHECK(r.pages == pages.size());
    CHECK(r.missing.empty());
    REQUIRE(r.segmentation.has_value());
    CHECK(r.segmentation->avg.f1 == 1.0);
    CHECK(r.segmentation->ari == doctest::Approx(1.0));
    CHECK(r.segmentation->nmi == doctest::Approx(1.0));
    REQUIRE(r.classification.has_value());
    for (NodeLabel l : kExtractedLabels) CHECK(r.classification->at(l).f1 == 1.0);
    REQUIRE(r.final.has_value());
    for (NodeLabel l : kExtractedLabels) CHECK(r.final->at(l).prf().f1 == 1.0);

    const json j = report_to_json(r);
    CHECK(j["segmentation"]["f1_avg"] == 1.0);
    CHECK(j["final"]["title"]["fn"] == 0);
    const std::string text = format_report(r);
    CHECK(text.find("Segmentation") != std::string::npos);
    CHECK(text.find("| title |") != std::string::npos);
  }

  TEST_CASE("missing pages count as empty output") {
    const auto pages = sample_pages();
    std::istringstream in(oracle_jsonl(pages));
    Predictions preds = parse_predictions(in);
    preds.erase(pages[0].page_id);
    const EvalReport r = evaluate(pages, preds);
    CHECK(r.missing == std::vector<std::string>{pages[0].page_id});
    CHECK(r.segmentation->avg.f1 == doctest::Approx(0.8));
    CHECK(r.final->at(NodeLabel::kTitle).fn == pages[0].records.size());
  }

  TEST_CASE("evaluation rejects unknown pages and empty references") {
    const auto pages = sample_pages();
    Predictions preds;
    preds["stranger"] = PagePrediction{};
    CHECK_THROWS_AS(evaluate(pages, preds), PageSetMismatch);
    CHECK_THROWS_AS(evaluate({}, Predictions{}), EmptyCorpus);
  }

  TEST_CASE("golden page through the report") {
    const auto g = testing::golden_three_cases();
    Predictions preds;
    preds["golden"].records = g.predicted;
    const EvalReport r = evaluate(std::vector<AnnotatedPage>{g.reference}, preds);
    REQUIRE(r.final.has_value());
    for (NodeLabel l : kExtractedLabels) CHECK(r.final->at(l) == g.expected.at(l));
    CHECK_FALSE(r.segmentation.has_value());
    CHECK_FALSE(r.classification.has_value());
  }
}

}  // namespace
}  // namespace recx
